"""Images of the exponential H-species: ``S_n``-classes of sections as bivariate monomials.

A section of ``[±n]`` with ``p`` positive and ``q`` negative entries is sent to
``x^p y^q``. The three graded spaces obtained from sections (all sections,
``S_n``-classes, ``B_n``-classes) have dimensions ``2^n``, ``n+1`` and ``1``.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import FrozenSet, Iterable, Tuple

from ..bialgebra import GradedBialgebra
from ..combinatorics import (
    SectionMap,
    SignedPermutation,
    enumerate_sections,
    enumerate_signed_permutations,
    permutation,
    standardize_values,
)
from ..linear import LinComb, TensorElement


@dataclass(frozen=True, order=True)
class Monomial:
    pos: int = 0  # power of x
    neg: int = 0  # power of y

    def __post_init__(self):
        if self.pos < 0 or self.neg < 0:
            raise ValueError("exponents must be nonnegative")

    @property
    def degree(self) -> int:
        return self.pos + self.neg

    def __str__(self) -> str:
        factors = []
        for var, e in (("x", self.pos), ("y", self.neg)):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        return "*".join(factors) or "1"

    def to_json(self):
        return {"x": self.pos, "y": self.neg}


_FACTOR = re.compile(r"([xy])(?:\^(\d+))?")


def parse_monomial(text: str) -> Monomial:
    body = text.replace(" ", "")
    if body in ("", "1", "()"):
        return Monomial()
    exps = {"x": 0, "y": 0}
    for tok in body.split("*"):
        m = _FACTOR.fullmatch(tok)
        if not m:
            raise ValueError(f"malformed monomial {text!r}")
        exps[m.group(1)] += int(m.group(2) or 1)
    return Monomial(exps["x"], exps["y"])


def section_class(s: SectionMap) -> Monomial:
    return Monomial(s.degree - s.negatives, s.negatives)


@lru_cache(maxsize=None)
def enumerate_monomials(n: int) -> Tuple[Monomial, ...]:
    return tuple(Monomial(n - q, q) for q in range(n + 1))


@lru_cache(maxsize=None)
def eh_product(a: Monomial, b: Monomial) -> LinComb:
    return LinComb.basis(Monomial(a.pos + b.pos, a.neg + b.neg))


@lru_cache(maxsize=None)
def eh_coproduct(m: Monomial) -> TensorElement:
    terms = {}
    for i in range(m.pos + 1):
        for j in range(m.neg + 1):
            terms[(Monomial(i, j), Monomial(m.pos - i, m.neg - j))] = comb(m.pos, i) * comb(m.neg, j)
    return TensorElement(terms)


# signed-level structure, used to check the monomial description


def section_product(s: SectionMap, t: SectionMap) -> SectionMap:
    """``μ(S ⊗ can(T))``: concatenate the sign vectors."""
    return SectionMap(s.signs + t.signs)


def section_coproduct(s: SectionMap) -> Counter:
    """``Σ_{S ⊔ T} st(S) ⊗ st(T)`` over splittings of the coordinates."""
    out = Counter()
    images = s.images
    n = len(images)
    for k in range(n + 1):
        for idx in itertools.combinations(range(n), k):
            left = [images[i] for i in idx]
            right = [images[i] for i in range(n) if i not in idx]
            out[(_standard_section(left), _standard_section(right))] += 1
    return out


def _standard_section(values) -> SectionMap:
    st = standardize_values(values)
    return SectionMap.from_images(sorted((st[v] for v in values), key=abs))


def act_on_section(w: SignedPermutation, s: SectionMap) -> SectionMap:
    return SectionMap.from_images(sorted((w(x) for x in s.images), key=abs))


def _orbit_count(sections: Iterable[SectionMap], group) -> int:
    remaining = set(sections)
    orbits = 0
    while remaining:
        s = remaining.pop()
        remaining -= {act_on_section(w, s) for w in group}
        orbits += 1
    return orbits


def eh_image_dimensions(n: int) -> Tuple[int, int, int]:
    """Dimensions of the ``S_n``-coinvariant, full, and ``B_n``-coinvariant images in degree ``n``.

    Computed by orbit enumeration, not by formula.
    """
    sections = enumerate_sections(n)
    sym = [permutation(p) for p in itertools.permutations(range(1, n + 1))]
    return (
        _orbit_count(sections, sym),
        len(sections),
        _orbit_count(sections, enumerate_signed_permutations(n)),
    )


EH = GradedBialgebra(
    name="eh",
    basis=enumerate_monomials,
    product=eh_product,
    coproduct=eh_coproduct,
    unit=Monomial(),
    degree=lambda m: m.degree,
    parse=parse_monomial,
    format=str,
    to_json=Monomial.to_json,
    description="S_n-classes of sections as monomials x^(#positive) y^(#negative) in K[x,y]",
)
