"""Exact-arithmetic type-B combinatorial Hopf algebras: signed set compositions,
bicompositions, DQSym/QSym, faces of cubes, and a Hopf-axiom checker."""

from .bialgebra import GradedBialgebra, antipode, antipode_takeuchi, graded_dimension, verify
from .bicompositions import (
    Bicomposition,
    Bipart,
    canonical_rep,
    enumerate_bicompositions,
    from_bicomposition,
    merge_biparts,
    to_bicomposition,
)
from .linear import LinComb, TensorElement, tensor

__version__ = "0.1.0"
