import itertools

import pytest

from hspecies.algebras import DQSYM, EH, LORDER, LORDER_DUAL, QSYM, REGISTRY, WORD3
from hspecies.algebras.faces import Word3
from hspecies.bialgebra import (
    antipode,
    antipode_of_basis,
    antipode_takeuchi,
    drop_term,
    graded_dimension,
    verify,
)
from hspecies.bicompositions import merge_biparts
from hspecies.linear import LinComb, TensorElement


def coarsenings(parts, merge):
    """All ways to merge runs of consecutive parts."""
    k = len(parts)
    for cuts in itertools.product((False, True), repeat=max(k - 1, 0)):
        out = [parts[0]] if parts else []
        for p, glue in zip(parts[1:], cuts):
            if glue:
                out[-1] = merge(out[-1], p)
            else:
                out.append(p)
        yield tuple(out)


def monomial_antipode(A, label_cls, merge):
    """``S(M_a) = (-1)^len(a) Σ_{b coarsening reverse(a)} M_b``."""

    def S(b):
        parts = tuple(reversed(b.parts))
        sign = (-1) ** len(parts)
        return LinComb([(label_cls(c), sign) for c in coarsenings(parts, merge)])

    return S


def test_antipode_of_unit():
    for A in REGISTRY.values():
        assert antipode(A, A.one()) == A.one()
        assert antipode_takeuchi(A, A.one()) == A.one()


def test_dqsym_degree_one_primitive():
    x = DQSYM.element("1/0")
    assert antipode(DQSYM, x) == -x
    assert antipode_takeuchi(DQSYM, x) == -x


def test_dqsym_antipode_two_parts():
    expected = DQSYM.element("0/1|1/0") + DQSYM.element("1/1")
    x = DQSYM.element("1/0|0/1")
    assert antipode(DQSYM, x) == expected
    assert antipode_takeuchi(DQSYM, x) == expected


@pytest.mark.parametrize("n", range(0, 5))
def test_dqsym_antipode_matches_closed_form(n):
    from hspecies.bicompositions import Bicomposition

    S = monomial_antipode(DQSYM, Bicomposition, merge_biparts)
    for b in DQSYM.basis(n):
        assert antipode_of_basis(DQSYM, b) == S(b)


@pytest.mark.parametrize("n", range(0, 6))
def test_qsym_antipode_matches_closed_form(n):
    from hspecies.algebras.qsym import Composition

    S = monomial_antipode(QSYM, Composition, lambda a, b: a + b)
    for c in QSYM.basis(n):
        assert antipode_of_basis(QSYM, c) == S(c)


@pytest.mark.parametrize("n", range(0, 5))
def test_word_antipode_reverses_with_sign(n):
    for w in WORD3.basis(n):
        assert antipode_of_basis(WORD3, w) == LinComb({Word3(w.letters[::-1]): (-1) ** n})


def test_eh_antipode_is_sign():
    for n in range(6):
        for m in EH.basis(n):
            assert antipode_of_basis(EH, m) == LinComb({m: (-1) ** n})


@pytest.mark.parametrize("A", [DQSYM, QSYM, WORD3, LORDER, LORDER_DUAL, EH], ids=lambda A: A.name)
def test_recursive_and_takeuchi_agree(A):
    top = 3 if A.name.startswith("lorder") else 4
    for n in range(top + 1):
        for b in A.basis(n):
            e = LinComb.basis(b)
            assert antipode(A, e) == antipode_takeuchi(A, e), A.format(b)


def test_dqsym_antipode_is_antimorphism():
    basis = [b for n in range(4) for b in DQSYM.basis(n)]
    for x, y in itertools.product(basis, repeat=2):
        if x.degree + y.degree > 3:
            continue
        X, Y = LinComb.basis(x), LinComb.basis(y)
        assert antipode(DQSYM, DQSYM.mul(X, Y)) == DQSYM.mul(antipode(DQSYM, Y), antipode(DQSYM, X))


@pytest.mark.parametrize("A", list(REGISTRY.values()), ids=lambda A: A.name)
def test_counit_laws_to_degree_four(A):
    top = 3 if A.name.startswith("lorder") else 4
    for n in range(top + 1):
        for b in A.basis(n):
            delta = A.coproduct(b)
            left = LinComb([(r, c * A.counit(l)) for (l, r), c in delta.items()])
            right = LinComb([(l, c * A.counit(r)) for (l, r), c in delta.items()])
            assert left == right == LinComb.basis(b)


def test_graded_dimension():
    assert graded_dimension(DQSYM, 2) == 7
    assert graded_dimension(DQSYM, 4) == 82
    for A in REGISTRY.values():
        assert graded_dimension(A, 0) == 1


def test_verify_degree_zero_is_trivial():
    for A in REGISTRY.values():
        report = verify(A, 0)
        assert report.passed
        assert report.checks["associativity"].instances == 1


def test_verify_dqsym_degree_three():
    report = verify(DQSYM, 3)
    assert report.passed, report.summary()


def test_verify_report_serializes():
    import json

    report = verify(QSYM, 2)
    data = json.loads(report.to_json())
    assert data["passed"] is True
    assert set(data["checks"]) == {
        "grading", "associativity", "unit", "coassociativity", "counit", "compatibility", "antipode"
    }
    assert "OK" in report.summary()


def test_mutated_product_fails_compatibility():
    x, y = DQSYM.parse("1/0"), DQSYM.parse("0/1")
    mutated = drop_term(DQSYM, x, y, DQSYM.parse("1/1"))
    assert mutated.product(x, y) == DQSYM.element("1/0|0/1") + DQSYM.element("0/1|1/0")
    report = verify(mutated, 4)
    assert not report.passed
    assert report.checks["compatibility"].violations
    assert not verify(DQSYM, 4).checks["compatibility"].violations


def test_corrupted_coproduct_is_detected():
    from dataclasses import replace

    def bad_coproduct(b):
        out = DQSYM.coproduct(b)
        if len(b) == 2:
            out = out + TensorElement.pure(b, DQSYM.unit)
        return out

    report = verify(replace(DQSYM, coproduct=bad_coproduct, name="bad"), 3)
    assert not report.checks["counit"].passed
    assert not report.checks["coassociativity"].passed


def test_inhomogeneous_product_is_detected():
    from dataclasses import replace

    def bad_product(a, b):
        out = QSYM.product(a, b)
        if a.degree == 1 and b.degree == 1:
            out = out + LinComb.basis(QSYM.parse("1"))
        return out

    report = verify(replace(QSYM, product=bad_product, name="bad"), 2)
    assert report.checks["grading"].violations
