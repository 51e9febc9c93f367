"""Faces of the cube as sets of section maps, and their encoding as words in ``a, b, c``.

A face fixes the sign of some coordinates and leaves the rest free; as a set of
sections it has ``2**len(free)`` members. Letters: ``a`` fixed positive,
``b`` fixed negative, ``c`` free.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Mapping, Tuple, Union

from ..bialgebra import GradedBialgebra
from ..combinatorics import format_element
from ..linear import LinComb, TensorElement

Section = Tuple[int, ...]


@dataclass(frozen=True)
class FaceElement:
    fixed: Tuple[Tuple[int, int], ...]
    free: FrozenSet[int]

    def __init__(self, fixed: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = (), free: Iterable[int] = ()):
        items = fixed.items() if isinstance(fixed, Mapping) else fixed
        fixed_t = tuple(sorted((int(k), int(s)) for k, s in items))
        free_f = frozenset(free)
        coords = [k for k, _ in fixed_t]
        if len(set(coords)) != len(coords):
            raise ValueError("coordinate fixed twice")
        if any(s not in (1, -1) for _, s in fixed_t):
            raise ValueError("fixed signs must be +1 or -1")
        if any(k <= 0 for k in coords) or any(k <= 0 for k in free_f):
            raise ValueError("coordinates must be positive")
        if set(coords) & free_f:
            raise ValueError("a coordinate cannot be both fixed and free")
        object.__setattr__(self, "fixed", fixed_t)
        object.__setattr__(self, "free", free_f)

    @property
    def ground(self) -> FrozenSet[int]:
        return frozenset(k for k, _ in self.fixed) | self.free

    @property
    def degree(self) -> int:
        return len(self.fixed) + len(self.free)

    @property
    def positive(self) -> FrozenSet[int]:
        return frozenset(k for k, s in self.fixed if s > 0)

    @property
    def negative(self) -> FrozenSet[int]:
        return frozenset(k for k, s in self.fixed if s < 0)

    def is_standard(self) -> bool:
        return self.ground == frozenset(range(1, self.degree + 1))

    def sections(self) -> FrozenSet[Section]:
        coords = sorted(self.ground)
        fixed = dict(self.fixed)
        choices = [(fixed[k] * k,) if k in fixed else (k, -k) for k in coords]
        return frozenset(itertools.product(*choices))

    @classmethod
    def from_sections(cls, sections: Iterable[Section]) -> "FaceElement":
        sections = {tuple(s) for s in sections}
        if not sections:
            raise ValueError("a face is a nonempty set of sections")
        lengths = {len(s) for s in sections}
        if len(lengths) != 1:
            raise ValueError("sections of different lengths")
        coords = [abs(x) for x in next(iter(sections))]
        if any([abs(x) for x in s] != coords for s in sections):
            raise ValueError("sections over different coordinates")
        fixed, free = {}, []
        for i, k in enumerate(coords):
            signs = {1 if s[i] > 0 else -1 for s in sections}
            if len(signs) == 1:
                fixed[k] = signs.pop()
            else:
                free.append(k)
        face = cls(fixed, free)
        if face.sections() != frozenset(sections):
            raise ValueError("section set is not a face of the cube")
        return face

    def relabel(self, mapping: Mapping[int, int]) -> "FaceElement":
        return FaceElement({mapping[k]: s for k, s in self.fixed}, [mapping[k] for k in self.free])

    def standardize(self) -> "FaceElement":
        ranks = {k: i for i, k in enumerate(sorted(self.ground), start=1)}
        return self.relabel(ranks)

    def restrict(self, S: Iterable[int]) -> "FaceElement":
        """``H ∩ ±S``: keep only the coordinates in ``S``."""
        S = frozenset(S)
        return FaceElement([(k, s) for k, s in self.fixed if k in S], self.free & S)

    def format(self) -> str:
        fixed = " ".join(f"{k}:{'+' if s > 0 else '-'}" for k, s in self.fixed)
        free = " ".join(str(k) for k in sorted(self.free))
        return f"fixed: {fixed} ; free: {free}".replace("  ", " ")

    def format_sections(self, unicode: bool = False) -> str:
        body = ",".join(
            "(" + ",".join(format_element(x, unicode) for x in s) + ")"
            for s in sorted(self.sections(), key=lambda s: tuple((x < 0, abs(x)) for x in s))
        )
        return "{" + body + "}"

    def __str__(self) -> str:
        return self.format()


_SECTION_RE = re.compile(r"\(([^()]*)\)")


def parse_face(text: str) -> FaceElement:
    body = text.strip()
    if body.startswith("{"):
        if not body.endswith("}"):
            raise ValueError(f"unterminated section set: {text!r}")
        sections = []
        for m in _SECTION_RE.finditer(body[1:-1]):
            inner = m.group(1).strip()
            sections.append(tuple(int(t) for t in inner.split(",")) if inner else ())
        return FaceElement.from_sections(sections)
    m = re.fullmatch(r"\s*fixed:(.*?);\s*free:(.*)", body)
    if not m:
        raise ValueError(f"malformed face {text!r}")
    fixed = {}
    for tok in m.group(1).split():
        k, _, sign = tok.partition(":")
        if sign not in ("+", "-"):
            raise ValueError(f"malformed fixed coordinate {tok!r}")
        fixed[int(k)] = 1 if sign == "+" else -1
    return FaceElement(fixed, [int(t) for t in m.group(2).split()])


def face_product(X: FaceElement, Y: FaceElement) -> FaceElement:
    """``{F_i ∪ G_j}`` for faces on disjoint coordinate sets."""
    if X.ground & Y.ground:
        raise ValueError("faces must live on disjoint coordinates; shift the second factor first")
    return FaceElement(X.fixed + Y.fixed, X.free | Y.free)


def face_graded_product(X: FaceElement, Y: FaceElement) -> FaceElement:
    """Product in the graded algebra: standardize both, shift ``Y`` past ``X``."""
    X = X.standardize()
    n = X.degree
    Y = Y.standardize().relabel({k: k + n for k in range(1, Y.degree + 1)})
    return face_product(X, Y)


def face_coproduct(X: FaceElement, standardize: bool = True) -> TensorElement:
    """``Σ_{S|T} (H ∩ S) ⊗ (H ∩ T)`` over all splittings of the coordinates."""
    coords = sorted(X.ground)
    terms = Counter()
    for k in range(len(coords) + 1):
        for S in itertools.combinations(coords, k):
            T = [c for c in coords if c not in S]
            left, right = X.restrict(S), X.restrict(T)
            if standardize:
                left, right = left.standardize(), right.standardize()
            terms[(left, right)] += 1
    return TensorElement(terms)


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

LETTERS = "abc"


@dataclass(frozen=True, order=True)
class Word3:
    letters: str = ""

    def __post_init__(self):
        if any(ch not in LETTERS for ch in self.letters):
            raise ValueError(f"word letters must be in {{a,b,c}}: {self.letters!r}")

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters or "()"


def parse_word(text: str) -> Word3:
    body = text.strip()
    return Word3("" if body in ("", "()") else body)


def face_word_encode(X: FaceElement) -> Word3:
    fixed = dict(X.fixed)
    return Word3("".join("c" if k not in fixed else ("a" if fixed[k] > 0 else "b") for k in sorted(X.ground)))


def face_word_decode(w: Word3) -> FaceElement:
    fixed = {i: (1 if ch == "a" else -1) for i, ch in enumerate(w.letters, start=1) if ch != "c"}
    free = [i for i, ch in enumerate(w.letters, start=1) if ch == "c"]
    return FaceElement(fixed, free)


@lru_cache(maxsize=None)
def enumerate_words(n: int) -> Tuple[Word3, ...]:
    return tuple(Word3("".join(t)) for t in itertools.product(LETTERS, repeat=n))


@lru_cache(maxsize=None)
def word_product(u: Word3, v: Word3) -> LinComb:
    return LinComb.basis(Word3(u.letters + v.letters))


@lru_cache(maxsize=None)
def word_coproduct(w: Word3) -> TensorElement:
    """Deshuffle: one term per subset of letter positions."""
    n = len(w.letters)
    terms = Counter()
    for mask in range(1 << n):
        left = "".join(w.letters[i] for i in range(n) if mask >> i & 1)
        right = "".join(w.letters[i] for i in range(n) if not mask >> i & 1)
        terms[(Word3(left), Word3(right))] += 1
    return TensorElement(terms)


WORD3 = GradedBialgebra(
    name="word3",
    basis=enumerate_words,
    product=word_product,
    coproduct=word_coproduct,
    unit=Word3(""),
    degree=lambda w: w.degree,
    parse=parse_word,
    format=str,
    to_json=lambda w: w.letters,
    description="faces of cubes as words in a, b, c; concatenation / deshuffle",
)
