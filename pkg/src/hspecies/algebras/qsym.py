"""QSym in the monomial basis, and the sign-forgetting map from DQSym."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from operator import add
from typing import List, Tuple

from ..bialgebra import GradedBialgebra
from ..bicompositions import Bicomposition
from ..combinatorics import quasishuffle_sequences
from ..linear import LinComb, TensorElement


@dataclass(frozen=True, order=True)
class Composition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"

    def to_json(self) -> List[int]:
        return list(self.parts)


UNIT = Composition(())


def parse_composition_label(text: str) -> Composition:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body.strip():
        return UNIT
    try:
        return Composition(tuple(int(t) for t in body.split(",")))
    except ValueError as exc:
        raise ValueError(f"malformed composition {text!r}") from exc


@lru_cache(maxsize=None)
def enumerate_compositions(n: int) -> Tuple[Composition, ...]:
    if n == 0:
        return (UNIT,)
    return tuple(
        Composition((first,) + rest.parts) for first in range(n, 0, -1) for rest in enumerate_compositions(n - first)
    )


@lru_cache(maxsize=None)
def qsym_product(c1: Composition, c2: Composition) -> LinComb:
    return LinComb(Counter(Composition(w) for w in quasishuffle_sequences(c1.parts, c2.parts, add)))


@lru_cache(maxsize=None)
def qsym_coproduct(c: Composition) -> TensorElement:
    p = c.parts
    return TensorElement(Counter((Composition(p[:i]), Composition(p[i:])) for i in range(len(p) + 1)))


def alpha_forget(b: Bicomposition) -> Composition:
    return Composition(tuple(p.alpha + p.beta for p in b.parts))


def alpha_map(x: LinComb) -> LinComb:
    return x.apply(lambda b: LinComb.basis(alpha_forget(b)))


def alpha_map_tensor(X: TensorElement) -> TensorElement:
    return X.apply(lambda k: TensorElement.pure(*(alpha_forget(b) for b in k)))


QSYM = GradedBialgebra(
    name="qsym",
    basis=enumerate_compositions,
    product=qsym_product,
    coproduct=qsym_coproduct,
    unit=UNIT,
    degree=lambda c: c.degree,
    parse=parse_composition_label,
    format=str,
    to_json=Composition.to_json,
    description="monomial basis M_c indexed by compositions; quasishuffle / deconcatenation",
)
