"""Signed linear orders: the linear order H-species and its dual, evaluated on ``[±n]``."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple

from ..bialgebra import GradedBialgebra
from ..combinatorics import enumerate_sections, shift_values, shuffle_sequences, standardize_values
from ..linear import LinComb, TensorElement


@dataclass(frozen=True, order=True)
class SignedLinearOrder:
    """A listing of ``s([n])`` for some section ``s``."""

    items: Tuple[int, ...] = ()

    def __post_init__(self):
        if sorted(abs(x) for x in self.items) != list(range(1, len(self.items) + 1)):
            raise ValueError(f"not a signed linear order of [±n]: {self.items}")

    @property
    def degree(self) -> int:
        return len(self.items)

    def restrict(self, S: Iterable[int]) -> Tuple[int, ...]:
        """Sublist of entries whose absolute value lies in ``S``, relative order kept."""
        S = frozenset(S)
        return tuple(x for x in self.items if abs(x) in S)

    def __str__(self) -> str:
        return " ".join(map(str, self.items)) if self.items else "()"


def standardized(items: Tuple[int, ...]) -> SignedLinearOrder:
    st = standardize_values(items)
    return SignedLinearOrder(tuple(st[x] for x in items))


def parse_signed_order(text: str) -> SignedLinearOrder:
    body = text.strip()
    if body in ("", "()"):
        return SignedLinearOrder(())
    return SignedLinearOrder(tuple(int(t) for t in body.replace(",", " ").split()))


@lru_cache(maxsize=None)
def enumerate_signed_orders(n: int) -> Tuple[SignedLinearOrder, ...]:
    out = []
    for s in enumerate_sections(n):
        for perm in itertools.permutations(s.images):
            out.append(SignedLinearOrder(perm))
    return tuple(sorted(out))


def _shift(l: SignedLinearOrder, offset: int) -> Tuple[int, ...]:
    m = shift_values(l.items, offset)
    return tuple(m[x] for x in l.items)


@lru_cache(maxsize=None)
def lorder_product(l1: SignedLinearOrder, l2: SignedLinearOrder) -> LinComb:
    return LinComb.basis(SignedLinearOrder(l1.items + _shift(l2, l1.degree)))


@lru_cache(maxsize=None)
def lorder_coproduct(l: SignedLinearOrder) -> TensorElement:
    n = l.degree
    terms = Counter()
    for k in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), k):
            T = set(range(1, n + 1)) - set(S)
            terms[(standardized(l.restrict(S)), standardized(l.restrict(T)))] += 1
    return TensorElement(terms)


@lru_cache(maxsize=None)
def lorder_dual_product(l1: SignedLinearOrder, l2: SignedLinearOrder) -> LinComb:
    return LinComb(Counter(SignedLinearOrder(w) for w in shuffle_sequences(l1.items, _shift(l2, l1.degree))))


@lru_cache(maxsize=None)
def lorder_dual_coproduct(l: SignedLinearOrder) -> TensorElement:
    items = l.items
    return TensorElement(
        Counter((standardized(items[:i]), standardized(items[i:])) for i in range(len(items) + 1))
    )


_common = dict(
    basis=enumerate_signed_orders,
    unit=SignedLinearOrder(()),
    degree=lambda l: l.degree,
    parse=parse_signed_order,
    format=str,
    to_json=lambda l: list(l.items),
)

LORDER = GradedBialgebra(
    name="lorder",
    product=lorder_product,
    coproduct=lorder_coproduct,
    description="signed linear orders; concatenation / deshuffle",
    **_common,
)

LORDER_DUAL = GradedBialgebra(
    name="lorder-dual",
    product=lorder_dual_product,
    coproduct=lorder_dual_coproduct,
    description="signed linear orders; shuffle / deconcatenation",
    **_common,
)
