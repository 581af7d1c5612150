"""
Exact scalars: rationals (fractions.Fraction) and Laurent polynomials in t.

A Laurent polynomial is kept as a mapping exponent -> Fraction with no zero
coefficients, the same dictionary representation used for Laurent data in
braid-representation code, wrapped in an immutable hashable value.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Iterable, Mapping, Union

from leibniz_lab.errors import NoLimit, ParseError

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParseError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into a canonical Fraction."""
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise ParseError(f"not a rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def render_rational(value: Scalar) -> str:
    # str(Fraction) already omits a unit denominator
    return str(Fraction(value))


class LaurentScalar:
    """Finite Laurent polynomial sum c_k t^k with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        cleaned: dict[int, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            value = Fraction(coefficient)
            if value != 0:
                cleaned[int(exponent)] = value
        self._terms = tuple(sorted(cleaned.items()))

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentScalar":
        return cls({0: value})

    @classmethod
    def monomial(cls, coefficient: Scalar, exponent: int) -> "LaurentScalar":
        return cls({exponent: coefficient})

    @classmethod
    def zero(cls) -> "LaurentScalar":
        return cls()

    @classmethod
    def one(cls) -> "LaurentScalar":
        return cls({0: 1})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, exponent: int) -> Fraction:
        for exp, value in self._terms:
            if exp == exponent:
                return value
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> int | None:
        return self._terms[0][0] if self._terms else None

    def degree(self) -> int | None:
        return self._terms[-1][0] if self._terms else None

    def evaluate(self, point: Scalar) -> Fraction:
        point = Fraction(point)
        if point == 0 and any(exp < 0 for exp, _ in self._terms):
            raise ZeroDivisionError("negative power evaluated at 0")
        return sum((value * point**exp for exp, value in self._terms), Fraction(0))

    def _coerce(self, other: Any) -> "LaurentScalar":
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentScalar.constant(other)
        return NotImplemented

    def __add__(self, other: Any) -> "LaurentScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        total = dict(self._terms)
        for exponent, value in other._terms:
            total[exponent] = total.get(exponent, Fraction(0)) + value
        return LaurentScalar(total)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({exp: -value for exp, value in self._terms})

    def __sub__(self, other: Any) -> "LaurentScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "LaurentScalar":
        return (-self) + other

    def __mul__(self, other: Any) -> "LaurentScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: dict[int, Fraction] = {}
        for exp_a, val_a in self._terms:
            for exp_b, val_b in other._terms:
                exponent = exp_a + exp_b
                product[exponent] = product.get(exponent, Fraction(0)) + val_a * val_b
        return LaurentScalar(product)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        if not self._terms:
            return hash(Fraction(0))
        if len(self._terms) == 1 and self._terms[0][0] == 0:
            return hash(self._terms[0][1])
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"LaurentScalar({self.to_json()})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, value in self._terms:
            if exponent == 0:
                parts.append(render_rational(value))
            elif exponent == 1:
                parts.append(f"{render_rational(value)}*t")
            else:
                parts.append(f"{render_rational(value)}*t^{exponent}")
        return " + ".join(parts)

    def to_json(self) -> dict[str, str]:
        return {str(exp): render_rational(value) for exp, value in self._terms}

    @classmethod
    def from_json(cls, data: Any) -> "LaurentScalar":
        if isinstance(data, (int, str)) and not isinstance(data, bool):
            return cls.constant(as_rational(data))
        if not isinstance(data, dict):
            raise ParseError(f"not a Laurent polynomial: {data!r}")
        terms: dict[int, Fraction] = {}
        for key, value in data.items():
            try:
                exponent = int(key)
            except (TypeError, ValueError) as exc:
                raise ParseError(f"bad exponent {key!r}") from exc
            terms[exponent] = as_rational(value)
        return cls(terms)


def as_laurent(value: Any) -> LaurentScalar:
    if isinstance(value, LaurentScalar):
        return value
    return LaurentScalar.constant(as_rational(value))


def laurent_limit(value: LaurentScalar | Scalar, position: Iterable[int] = (0, 0, 0)) -> Fraction:
    """
    Value at t -> 0 of a Laurent polynomial.

    Raises NoLimit when a negative exponent carries a nonzero coefficient;
    position only labels the error.
    """
    scalar = as_laurent(value)
    valuation = scalar.valuation()
    if valuation is not None and valuation < 0:
        i, j, k = tuple(position)
        raise NoLimit(i, j, k, valuation)
    return scalar.coefficient(0)
