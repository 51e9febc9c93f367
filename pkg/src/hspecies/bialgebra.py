"""Connected graded bialgebras given by explicit bases.

A :class:`GradedBialgebra` bundles basis enumeration with structure constants
on basis labels; everything else (products of combinations, antipodes, the
axiom checker) is derived here.
"""

from __future__ import annotations

import itertools
import json
import weakref
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from .linear import LinComb, TensorElement, format_lincomb, lincomb_to_json

Label = Hashable


@dataclass(frozen=True, eq=False)
class GradedBialgebra:
    name: str
    basis: Callable[[int], Sequence[Label]]
    product: Callable[[Label, Label], LinComb]
    coproduct: Callable[[Label], TensorElement]
    unit: Label
    degree: Callable[[Label], int]
    parse: Callable[[str], Label] = field(repr=False)
    format: Callable[[Label], str] = field(repr=False, default=str)
    to_json: Callable[[Label], Any] = field(repr=False, default=str)
    description: str = ""

    def counit(self, b: Label) -> Fraction:
        return Fraction(1) if b == self.unit else Fraction(0)

    def one(self) -> LinComb:
        return LinComb.basis(self.unit)

    def element(self, text: str) -> LinComb:
        return LinComb.basis(self.parse(text))

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        acc: Dict[Label, Fraction] = {}
        for a, c in x.items():
            for b, d in y.items():
                for k, v in self.product(a, b).items():
                    acc[k] = acc.get(k, 0) + c * d * v
        return LinComb(acc)

    def comul(self, x: LinComb) -> TensorElement:
        acc: Dict[Tuple, Fraction] = {}
        for a, c in x.items():
            for k, v in self.coproduct(a).items():
                acc[k] = acc.get(k, 0) + c * v
        return TensorElement(acc)

    def counit_of(self, x: LinComb) -> Fraction:
        return x.coefficient(self.unit)

    def mul_tensors(self, X: TensorElement, Y: TensorElement) -> TensorElement:
        """Componentwise product in ``A ⊗ A`` (trivial braiding)."""
        acc: Dict[Tuple, Fraction] = {}
        for (x1, x2), c in X.items():
            for (y1, y2), d in Y.items():
                left = self.product(x1, y1)
                right = self.product(x2, y2)
                for l, u in left.items():
                    for r, v in right.items():
                        key = (l, r)
                        acc[key] = acc.get(key, 0) + c * d * u * v
        return TensorElement(acc)

    def format_element(self, x: LinComb) -> str:
        return format_lincomb(x, self._bracket, key=self.sort_key)

    def format_tensor(self, X: TensorElement) -> str:
        return format_lincomb(X, lambda k: " (x) ".join(self._bracket(b) for b in k), key=self._tensor_key)

    def element_to_json(self, x: LinComb) -> list:
        return lincomb_to_json(x, self.to_json, key=self.sort_key)

    def tensor_to_json(self, X: TensorElement) -> list:
        return lincomb_to_json(X, lambda k: [self.to_json(b) for b in k], key=self._tensor_key)

    def sort_key(self, b: Label):
        return (self.degree(b), self.format(b))

    def _tensor_key(self, k):
        return tuple(self.sort_key(b) for b in k)

    def _bracket(self, b: Label) -> str:
        return f"[{self.format(b)}]"

    def with_product(self, product: Callable[[Label, Label], LinComb], name: Optional[str] = None) -> "GradedBialgebra":
        return replace(self, product=product, name=name or self.name + "*")


def graded_dimension(A: GradedBialgebra, n: int) -> int:
    return len(A.basis(n))


# ---------------------------------------------------------------------------
# Antipodes
# ---------------------------------------------------------------------------

_antipode_cache: "weakref.WeakKeyDictionary[GradedBialgebra, Dict[Label, LinComb]]" = weakref.WeakKeyDictionary()


def antipode_of_basis(A: GradedBialgebra, b: Label) -> LinComb:
    """``S(b) = -b - Σ S(b') b''`` over coproduct terms with both factors of positive degree."""
    cache = _antipode_cache.setdefault(A, {})
    if b in cache:
        return cache[b]
    if b == A.unit:
        result = A.one()
    else:
        result = -LinComb.basis(b)
        for (left, right), c in A.coproduct(b).items():
            if left == A.unit or right == A.unit:
                continue
            result = result - A.mul(antipode_of_basis(A, left), LinComb.basis(right)) * c
    cache[b] = result
    return result


def antipode(A: GradedBialgebra, x: LinComb) -> LinComb:
    return x.apply(lambda b: antipode_of_basis(A, b))


def _reduced_chains(A: GradedBialgebra, b: Label, k: int) -> Dict[Tuple, Fraction]:
    """``π^{⊗k} Δ^{(k-1)}(b)`` with ``π = id - ηε``, as a dict of label tuples."""
    if b == A.unit:
        return {}
    if k == 1:
        return {(b,): Fraction(1)}
    acc: Dict[Tuple, Fraction] = {}
    for (left, right), c in A.coproduct(b).items():
        if left == A.unit or right == A.unit:
            continue
        for tail, d in _reduced_chains(A, right, k - 1).items():
            key = (left,) + tail
            acc[key] = acc.get(key, 0) + c * d
    return acc


def antipode_takeuchi(A: GradedBialgebra, x: LinComb) -> LinComb:
    """Takeuchi's alternating sum ``Σ_k (-1)^k μ^{(k-1)} π^{⊗k} Δ^{(k-1)}``."""

    def on_basis(b: Label) -> LinComb:
        if b == A.unit:
            return A.one()
        total = LinComb()
        for k in range(1, A.degree(b) + 1):
            for chain, c in _reduced_chains(A, b, k).items():
                prod = LinComb.basis(chain[0])
                for factor in chain[1:]:
                    prod = A.mul(prod, LinComb.basis(factor))
                total = total + prod * (c if k % 2 == 0 else -c)
        return total

    return x.apply(on_basis)


# ---------------------------------------------------------------------------
# Verification harness
# ---------------------------------------------------------------------------

CHECKS = (
    "grading",
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "compatibility",
    "antipode",
)


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class VerificationReport:
    algebra: str
    max_degree: int
    checks: Dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def violation_count(self) -> int:
        return sum(len(c.violations) for c in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "checks": {
                name: {"passed": c.passed, "instances": c.instances, "violations": c.violations}
                for name, c in self.checks.items()
            },
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def summary(self) -> str:
        lines = [f"{self.algebra}: Hopf axioms up to total degree {self.max_degree}"]
        for name, c in self.checks.items():
            status = "PASS" if c.passed else f"FAIL ({len(c.violations)} violations)"
            lines.append(f"  {name:<16}{status:<24}{c.instances} instances")
            for v in c.violations[:5]:
                lines.append(f"    {v}")
        lines.append("OK" if self.passed else f"FAILED: {self.violation_count} violations")
        return "\n".join(lines)


def _basis_upto(A: GradedBialgebra, D: int) -> List[Tuple[int, Label]]:
    return [(n, b) for n in range(D + 1) for b in A.basis(n)]


def verify(A: GradedBialgebra, max_degree: int = 4) -> VerificationReport:
    """Exhaustively check the connected graded Hopf algebra axioms up to ``max_degree``.

    Every instance is over basis elements (pairs, triples) whose total degree is
    at most ``max_degree``; violations are collected, never raised.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    D = max_degree
    checks = {name: CheckResult(name) for name in CHECKS}
    basis = _basis_upto(A, D)
    fmt = A.format
    one = A.one()

    def homogeneous(x: LinComb, n: int) -> bool:
        return all(A.degree(k) == n for k in x)

    # grading and connectedness
    g = checks["grading"]
    g.instances += 1
    if list(A.basis(0)) != [A.unit]:
        g.violations.append(f"basis(0) = {[fmt(b) for b in A.basis(0)]}, expected only the unit")
    for n, b in basis:
        g.instances += 1
        if A.degree(b) != n:
            g.violations.append(f"basis({n}) contains {fmt(b)} of degree {A.degree(b)}")
        for (l, r), _ in A.coproduct(b).items():
            if A.degree(l) + A.degree(r) != n:
                g.violations.append(f"Δ({fmt(b)}) has a term {fmt(l)} ⊗ {fmt(r)} off bidegree sum {n}")
                break
    for (m, x), (n, y) in itertools.product(basis, repeat=2):
        if m + n > D:
            continue
        g.instances += 1
        if not homogeneous(A.product(x, y), m + n):
            g.violations.append(f"{fmt(x)}·{fmt(y)} is not homogeneous of degree {m + n}")

    # associativity, over triples
    a = checks["associativity"]
    for (m, x), (n, y) in itertools.product(basis, repeat=2):
        if m + n > D:
            continue
        xy = A.product(x, y)
        for p, z in basis:
            if m + n + p > D:
                continue
            a.instances += 1
            lhs = A.mul(xy, LinComb.basis(z))
            rhs = A.mul(LinComb.basis(x), A.product(y, z))
            if lhs != rhs:
                a.violations.append(f"({fmt(x)}·{fmt(y)})·{fmt(z)} != {fmt(x)}·({fmt(y)}·{fmt(z)})")

    u = checks["unit"]
    co = checks["coassociativity"]
    cu = checks["counit"]
    s = checks["antipode"]
    for n, b in basis:
        e = LinComb.basis(b)
        u.instances += 1
        if A.mul(one, e) != e or A.mul(e, one) != e:
            u.violations.append(f"unit law fails at {fmt(b)}")

        delta = A.coproduct(b)
        co.instances += 1
        left = TensorElement(_flatten(((l2, l3, r), c * c2) for (l, r), c in delta.items() for (l2, l3), c2 in A.coproduct(l).items()))
        right = TensorElement(_flatten(((l, r2, r3), c * c2) for (l, r), c in delta.items() for (r2, r3), c2 in A.coproduct(r).items()))
        if left != right:
            co.violations.append(f"(Δ⊗id)Δ != (id⊗Δ)Δ at {fmt(b)}")

        cu.instances += 1
        left_c = LinComb(_flatten((r, c * A.counit(l)) for (l, r), c in delta.items()))
        right_c = LinComb(_flatten((l, c * A.counit(r)) for (l, r), c in delta.items()))
        if left_c != e or right_c != e:
            cu.violations.append(f"counit law fails at {fmt(b)}")

        s.instances += 1
        target = one * A.counit(b)
        conv_left = LinComb()
        conv_right = LinComb()
        for (l, r), c in delta.items():
            conv_left = conv_left + A.mul(antipode_of_basis(A, l), LinComb.basis(r)) * c
            conv_right = conv_right + A.mul(LinComb.basis(l), antipode_of_basis(A, r)) * c
        if conv_left != target:
            s.violations.append(f"Σ S(b')b'' != ε(b)1 at {fmt(b)}")
        if conv_right != target:
            s.violations.append(f"Σ b'S(b'') != ε(b)1 at {fmt(b)}")

    # compatibility: Δ and ε are algebra maps
    cp = checks["compatibility"]
    for (m, x), (n, y) in itertools.product(basis, repeat=2):
        if m + n > D:
            continue
        cp.instances += 1
        xy = A.product(x, y)
        lhs = A.comul(xy)
        rhs = A.mul_tensors(A.coproduct(x), A.coproduct(y))
        if lhs != rhs:
            cp.violations.append(f"Δ({fmt(x)}·{fmt(y)}) != Δ({fmt(x)})·Δ({fmt(y)})")
        if A.counit_of(xy) != A.counit(x) * A.counit(y):
            cp.violations.append(f"ε({fmt(x)}·{fmt(y)}) != ε({fmt(x)})ε({fmt(y)})")

    return VerificationReport(A.name, D, checks)


def _flatten(pairs):
    acc: Dict[Any, Fraction] = {}
    for k, c in pairs:
        acc[k] = acc.get(k, 0) + c
    return acc


def drop_term(A: GradedBialgebra, x: Label, y: Label, term: Label) -> GradedBialgebra:
    """A copy of ``A`` whose product ``x·y`` is missing ``term``; used to test the harness."""
    original = A.product

    def product(a: Label, b: Label) -> LinComb:
        out = original(a, b)
        if a == x and b == y:
            out = out - LinComb.basis(term) * out.coefficient(term)
        return out

    return A.with_product(product, name=f"{A.name}-mutated")
