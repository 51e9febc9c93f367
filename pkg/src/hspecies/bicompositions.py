"""Bicompositions and canonical representatives of ``S_n``-classes of signed set compositions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .combinatorics import SetComposition, SignedSetComposition


@dataclass(frozen=True, order=True)
class Bipart:
    alpha: int  # negatives
    beta: int  # positives

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError(f"bipart entries must be nonnegative: {self.alpha}/{self.beta}")
        if self.alpha == 0 and self.beta == 0:
            raise ValueError("the zero bipart 0/0 is not allowed")

    @property
    def size(self) -> int:
        return self.alpha + self.beta

    def __add__(self, other: "Bipart") -> "Bipart":
        return merge_biparts(self, other)

    def __str__(self) -> str:
        return f"{self.alpha}/{self.beta}"


def merge_biparts(p: Bipart, q: Bipart) -> Bipart:
    return Bipart(p.alpha + q.alpha, p.beta + q.beta)


@dataclass(frozen=True, order=True)
class Bicomposition:
    parts: Tuple[Bipart, ...] = ()

    def __post_init__(self):
        if any(not isinstance(p, Bipart) for p in self.parts):
            object.__setattr__(self, "parts", tuple(p if isinstance(p, Bipart) else Bipart(*p) for p in self.parts))

    @classmethod
    def of(cls, *pairs: Tuple[int, int]) -> "Bicomposition":
        return cls(tuple(Bipart(a, b) for a, b in pairs))

    @property
    def degree(self) -> int:
        return sum(p.size for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "|".join(str(p) for p in self.parts) if self.parts else "()"

    def to_json(self) -> List[List[int]]:
        return [[p.alpha, p.beta] for p in self.parts]


def parse_bicomposition(text: str) -> Bicomposition:
    body = text.strip()
    if body in ("", "()"):
        return Bicomposition(())
    parts = []
    for chunk in body.split("|"):
        try:
            a, b = chunk.split("/")
            parts.append(Bipart(int(a), int(b)))
        except ValueError as exc:
            raise ValueError(f"malformed bipart {chunk!r} in {text!r}") from exc
    return Bicomposition(tuple(parts))


@lru_cache(maxsize=None)
def enumerate_bicompositions(n: int) -> Tuple[Bicomposition, ...]:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return (Bicomposition(()),)
    out = []
    for size in range(1, n + 1):
        for alpha in range(size, -1, -1):
            first = Bipart(alpha, size - alpha)
            for rest in enumerate_bicompositions(n - size):
                out.append(Bicomposition((first,) + rest.parts))
    return tuple(out)


def to_bicomposition(x: SetComposition) -> Bicomposition:
    return Bicomposition(
        tuple(Bipart(sum(1 for v in b if v < 0), sum(1 for v in b if v > 0)) for b in x.blocks)
    )


def from_bicomposition(b: Bicomposition) -> SignedSetComposition:
    blocks = []
    prev = 0
    for p in b.parts:
        neg = [-(prev + j) for j in range(1, p.alpha + 1)]
        pos = [prev + p.alpha + j for j in range(1, p.beta + 1)]
        blocks.append(neg + pos)
        prev += p.size
    return SignedSetComposition(blocks)


def canonical_rep(x: SetComposition) -> SignedSetComposition:
    return from_bicomposition(to_bicomposition(x))


def is_canonical(x: SetComposition) -> bool:
    """Verbal rule: absolute values increase left to right and negatives lead each part."""
    seq = []
    for b in x.blocks:
        seq.extend(sorted((v for v in b if v < 0), key=abs))
        seq.extend(sorted(v for v in b if v > 0))
    return [abs(v) for v in seq] == list(range(1, len(seq) + 1))
