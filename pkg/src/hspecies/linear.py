"""Finitely supported rational linear combinations over hashable basis labels."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, Mapping, Tuple, Union

Coefficient = Union[int, Fraction]


class LinComb:
    """An immutable element of the free ``Q``-module on hashable labels.

    Zero coefficients are never stored, so two combinations are equal exactly
    when their term dictionaries are.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Hashable, Coefficient], Iterable[Tuple[Hashable, Coefficient]], None] = None):
        acc: Dict[Hashable, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for label, c in items:
                if not isinstance(c, Rational):
                    raise TypeError(f"coefficients must be rational, got {type(c).__name__}")
                acc[label] = acc.get(label, 0) + c
        self._terms = {k: Fraction(v) for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def basis(cls, label: Hashable, coefficient: Coefficient = 1) -> "LinComb":
        return cls({label: coefficient})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def _raw(cls, terms: Dict[Hashable, Fraction]) -> "LinComb":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def items(self):
        return self._terms.items()

    def support(self) -> Tuple[Hashable, ...]:
        return tuple(self._terms)

    def coefficient(self, label: Hashable) -> Fraction:
        return self._terms.get(label, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            c = out.get(k, 0) + v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return type(self)._raw(out)

    def __neg__(self) -> "LinComb":
        return type(self)._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c: Coefficient) -> "LinComb":
        if not isinstance(c, Rational):
            return NotImplemented
        if c == 0:
            return type(self)()
        return type(self)._raw({k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def apply(self, f: Callable[[Hashable], "LinComb"]) -> "LinComb":
        return apply(f, self)

    def sorted_items(self, key: Callable[[Hashable], Any] = repr):
        return sorted(self._terms.items(), key=lambda kv: key(kv[0]))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{v}*{k!r}" for k, v in self.sorted_items())


class TensorElement(LinComb):
    """A linear combination whose labels are tuples ``(b1, b2, ...)``."""

    __slots__ = ()

    @classmethod
    def pure(cls, *labels: Hashable) -> "TensorElement":
        return cls({tuple(labels): 1})


def add(x: LinComb, y: LinComb) -> LinComb:
    return x + y


def scale(c: Coefficient, x: LinComb) -> LinComb:
    return x * c


def tensor(*factors: LinComb) -> TensorElement:
    """Bilinear (multilinear) tensor product of combinations."""
    acc: Dict[Tuple, Fraction] = {(): Fraction(1)}
    for x in factors:
        nxt: Dict[Tuple, Fraction] = {}
        for prefix, c in acc.items():
            for label, d in x.items():
                key = prefix + (label,)
                nxt[key] = nxt.get(key, 0) + c * d
        acc = nxt
    return TensorElement(acc)


def apply(f: Callable[[Hashable], LinComb], x: LinComb, cls=None) -> LinComb:
    """Linear extension of a label-to-combination map."""
    acc: Dict[Hashable, Fraction] = {}
    result_cls = cls
    for label, c in x.items():
        image = f(label)
        if result_cls is None:
            result_cls = type(image)
        for k, v in image.items():
            acc[k] = acc.get(k, 0) + c * v
    return (result_cls or LinComb)({k: v for k, v in acc.items()})


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_lincomb(x: LinComb, fmt: Callable[[Hashable], str], key: Callable[[Hashable], Any] | None = None) -> str:
    """Render as ``2*[a] - [b]``, terms ordered by ``key`` (defaults to ``fmt``)."""
    if not x:
        return "0"
    parts = []
    for i, (label, c) in enumerate(x.sorted_items(key or fmt)):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = fmt(label) if mag == 1 else f"{format_coefficient(mag)}*{fmt(label)}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def lincomb_to_json(x: LinComb, to_json: Callable[[Hashable], Any], key: Callable[[Hashable], Any] = repr) -> list:
    return [
        {"coefficient": format_coefficient(c), "basis": to_json(label)}
        for label, c in x.sorted_items(key)
    ]
