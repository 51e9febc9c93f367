from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hspecies.linear import LinComb, TensorElement, add, apply, format_lincomb, scale, tensor

labels = st.sampled_from(["a", "b", "c", "d"])
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
combs = st.dictionaries(labels, coeffs, max_size=4).map(LinComb)


def test_cancellation():
    b1 = LinComb.basis("b1")
    assert add(2 * b1, scale(-2, b1)) == LinComb()
    assert not add(2 * b1, -2 * b1).items()


def test_tensor_bilinear():
    x = LinComb.basis("b1") + LinComb.basis("b2")
    t = tensor(x, LinComb.basis("b3"))
    assert isinstance(t, TensorElement)
    assert t == TensorElement({("b1", "b3"): 1, ("b2", "b3"): 1})


def test_zero_coefficients_pruned_at_construction():
    assert LinComb({"a": 0, "b": Fraction(1, 2)}).support() == ("b",)
    assert LinComb([("a", 1), ("a", -1)]) == 0


def test_rejects_float_coefficients():
    with pytest.raises(TypeError):
        LinComb({"a": 0.5})


@given(combs, combs, combs)
def test_module_axioms(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x - x == LinComb()


@given(combs, combs, coeffs, coeffs)
def test_scaling_distributes(x, y, c, d):
    assert (x + y) * c == x * c + y * c
    assert x * (c + d) == x * c + x * d


@given(combs, combs)
def test_apply_is_linear(x, y):
    f = lambda k: LinComb({k + "'": 2, "z": -1})
    assert apply(f, x + y) == apply(f, x) + apply(f, y)


@given(combs, combs, combs)
def test_tensor_distributes(x, y, z):
    assert tensor(x + y, z) == tensor(x, z) + tensor(y, z)


def test_equality_is_canonical():
    assert LinComb({"a": 1, "b": 2}) == LinComb([("b", 2), ("a", 1)])
    assert hash(LinComb({"a": 1, "b": 2})) == hash(LinComb([("b", 2), ("a", 1)]))


def test_format():
    x = LinComb({"b": 2, "a": -1, "c": Fraction(1, 3)})
    assert format_lincomb(x, str) == "-a + 2*b + 1/3*c"
    assert format_lincomb(LinComb(), str) == "0"
