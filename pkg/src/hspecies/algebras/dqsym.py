"""DQSym: bicompositions with quasishuffle product and deconcatenation coproduct.

The direct route works on part sequences. The signed route goes through
representative signed set compositions (shift the second factor, quasishuffle,
take classes) and is kept as an independent check of the isomorphism with the
coinvariant construction.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from ..bialgebra import GradedBialgebra
from ..bicompositions import (
    Bicomposition,
    canonical_rep,
    enumerate_bicompositions,
    from_bicomposition,
    merge_biparts,
    parse_bicomposition,
    to_bicomposition,
)
from ..combinatorics import (
    SetComposition,
    SignedSetComposition,
    quasishuffle,
    quasishuffle_sequences,
    shift_values,
    standardize_composition,
)
from ..linear import LinComb, TensorElement

UNIT = Bicomposition(())


@lru_cache(maxsize=None)
def dqsym_product(b1: Bicomposition, b2: Bicomposition) -> LinComb:
    counts = Counter(
        Bicomposition(w) for w in quasishuffle_sequences(b1.parts, b2.parts, merge_biparts)
    )
    return LinComb(counts)


@lru_cache(maxsize=None)
def dqsym_coproduct(b: Bicomposition) -> TensorElement:
    p = b.parts
    return TensorElement(Counter((Bicomposition(p[:i]), Bicomposition(p[i:])) for i in range(len(p) + 1)))


def shifted(x: SetComposition, offset: int) -> SetComposition:
    return x.relabel(shift_values(x.ground, offset))


def signed_product(x: SignedSetComposition, y: SignedSetComposition) -> LinComb:
    """Product of classes at the signed level, as a combination of canonical representatives."""
    terms = Counter(
        canonical_rep(h) for h in quasishuffle(x, shifted(y, x.degree))
    )
    return LinComb(terms)


def signed_coproduct(x: SetComposition) -> TensorElement:
    """Deconcatenation with both factors standardized, then canonicalized."""
    blocks = x.blocks
    terms = Counter()
    for i in range(len(blocks) + 1):
        left = standardize_composition(SetComposition(blocks[:i]))
        right = standardize_composition(SetComposition(blocks[i:]))
        terms[(canonical_rep(left), canonical_rep(right))] += 1
    return TensorElement(terms)


def signed_deconcatenation(x: SetComposition) -> TensorElement:
    """Deconcatenation with both factors standardized but not canonicalized."""
    blocks = x.blocks
    return TensorElement(
        Counter(
            (standardize_composition(SetComposition(blocks[:i])), standardize_composition(SetComposition(blocks[i:])))
            for i in range(len(blocks) + 1)
        )
    )


def product_via_signed(b1: Bicomposition, b2: Bicomposition) -> LinComb:
    reps = signed_product(from_bicomposition(b1), from_bicomposition(b2))
    return reps.apply(lambda r: LinComb.basis(to_bicomposition(r)))


def coproduct_via_signed(b: Bicomposition) -> TensorElement:
    reps = signed_coproduct(from_bicomposition(b))
    return reps.apply(lambda k: TensorElement.pure(to_bicomposition(k[0]), to_bicomposition(k[1])))


DQSYM = GradedBialgebra(
    name="dqsym",
    basis=enumerate_bicompositions,
    product=dqsym_product,
    coproduct=dqsym_coproduct,
    unit=UNIT,
    degree=lambda b: b.degree,
    parse=parse_bicomposition,
    format=str,
    to_json=Bicomposition.to_json,
    description="monomial basis M_b indexed by bicompositions; quasishuffle / deconcatenation",
)
