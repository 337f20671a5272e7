"""Exact univariate polynomials in k over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import PolynomialityError


class Polynomial:
    """Coefficients in increasing degree, trailing zeros trimmed.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [Fraction(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, k) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * k + c
        return acc

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self):
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coefficients)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = [Fraction(0)] * max(len(self.coefficients) + len(other.coefficients) - 1, 0)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def evaluate(p: Polynomial, k) -> Fraction:
    return p(k)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def poly_negate(p: Polynomial) -> Polynomial:
    return -p


def poly_equal(p: Polynomial, q: Polynomial) -> bool:
    return p == q


def interpolate(points: Sequence[tuple]) -> Polynomial:
    """Newton divided differences through ``(k, value)`` points."""
    if not points:
        raise ValueError("interpolation needs at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissas must be distinct")
    table = [Fraction(y) for _, y in points]
    n = len(xs)
    newton = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        newton.append(table[0])
    # expand c0 + c1 (k-x0) + c2 (k-x0)(k-x1) + ... by Horner
    result = Polynomial([newton[-1]])
    for i in range(n - 2, -1, -1):
        result = result * Polynomial([-xs[i], 1]) + Polynomial([newton[i]])
    return result


def interpolate_counts(count: Callable[[int], int], degree_bound: int) -> Polynomial:
    """Interpolate ``count`` on k = 1..degree_bound+1 and confirm at degree_bound+2."""
    nodes = range(1, degree_bound + 2)
    p = interpolate([(k, count(k)) for k in nodes])
    check = degree_bound + 2
    observed = count(check)
    if p(check) != observed:
        raise PolynomialityError(
            f"interpolant {format_polynomial(p)} predicts {p(check)} at k={check}, counted {observed}"
        )
    return p


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_rational(x) -> str:
    """Always ``num/den``, for JSON output."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_polynomial(p: Polynomial, var: str = "k") -> str:
    """Decreasing degree, e.g. ``1/6*k^3 + 1/2*k^2 - 2/3*k``; zero prints ``0``."""
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coefficients[d]
        if c == 0:
            continue
        mag = abs(c)
        if d == 0:
            body = format_rational(mag)
        else:
            power = var if d == 1 else f"{var}^{d}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
