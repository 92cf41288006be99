"""Exact fractional-power polynomials and the conformable operators on them.

A :class:`FracPoly` is a finite sum ``sum c_i * x**b_i`` whose exponents
``b_i`` and coefficients ``c_i`` are both :class:`fractions.Fraction`.
All algebra is exact; floating point appears only in :meth:`FracPoly.__call__`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import NegativeBaseEvenRoot

RationalLike = Union[int, Fraction, str]


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Strings are parsed as ``"p/q"`` or decimals. Floats go through their
    shortest repr, so ``0.1`` becomes ``1/10`` rather than the binary value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot represent {value!r} as a rational")
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


@dataclass(frozen=True)
class Alpha:
    """Fractional order in (0, 1].

    ``odd_reciprocal`` is true when the value is ``1/(2j+1)``; only then are
    the powers ``x**(alpha*n)`` real for negative ``x``.
    """

    value: Fraction

    def __post_init__(self):
        v = as_rational(self.value)
        if not 0 < v <= 1:
            raise ValueError(f"alpha must lie in (0, 1], got {v}")
        object.__setattr__(self, "value", v)

    @property
    def odd_reciprocal(self) -> bool:
        return self.value.numerator == 1 and self.value.denominator % 2 == 1

    def __str__(self):
        return str(self.value)


def as_alpha(alpha) -> Alpha:
    return alpha if isinstance(alpha, Alpha) else Alpha(as_rational(alpha))


def _root(a: float, q: int) -> float:
    # one Newton step polishes pow(a, 1/q) so exact roots come out exact
    r = a ** (1.0 / q)
    if r > 0.0:
        r -= (r**q - a) / (q * r ** (q - 1))
    return r


def real_power(x: float, exponent) -> float:
    """``x**exponent`` for a rational exponent, extended to ``x < 0``.

    For negative ``x`` the exponent ``s/q`` (lowest terms) must have odd
    ``q``; the value is then ``sign(x)**s * |x|**(s/q)``.
    """
    e = as_rational(exponent)
    if e == 0:
        return 1.0
    s, q = e.numerator, e.denominator
    if x < 0:
        if q % 2 == 0:
            raise NegativeBaseEvenRoot(f"({x})**({e}) has no real value")
        mag = real_power(-x, e)
        return -mag if s % 2 else mag
    if q == 1:
        return float(x) ** s
    if q == 2:
        return math.sqrt(x) ** s
    return _root(float(x), q) ** s


def _canonical(pairs: Iterable[tuple]) -> tuple:
    acc: dict[Fraction, Fraction] = {}
    for e, c in pairs:
        e = as_rational(e)
        acc[e] = acc.get(e, Fraction(0)) + as_rational(c)
    return tuple((e, acc[e]) for e in sorted(acc) if acc[e] != 0)


class FracPoly:
    """Immutable exact sum of rational powers of ``x`` with rational coefficients.

    Terms are kept sorted by strictly increasing exponent with no zero
    coefficients, so two polynomials are equal iff their term tuples are.

    Parameters
    ----------
    terms : mapping or iterable of (exponent, coefficient)
        Repeated exponents are summed; zero coefficients are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable[tuple]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        self._terms = _canonical(terms)

    @classmethod
    def monomial(cls, exponent, coeff=1) -> "FracPoly":
        return cls([(exponent, coeff)])

    @classmethod
    def constant(cls, c) -> "FracPoly":
        return cls([(0, c)])

    @property
    def terms(self) -> tuple:
        """Tuple of ``(exponent, coefficient)`` pairs, increasing exponent."""
        return self._terms

    @property
    def exponents(self) -> tuple:
        return tuple(e for e, _ in self._terms)

    @property
    def degree(self) -> Fraction:
        """Largest exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def coefficient(self, exponent) -> Fraction:
        e = as_rational(exponent)
        for ee, c in self._terms:
            if ee == e:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    # -- algebra -----------------------------------------------------------

    @staticmethod
    def _lift(other) -> "FracPoly":
        if isinstance(other, FracPoly):
            return other
        return FracPoly.constant(as_rational(other))

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return FracPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return FracPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FracPoly):
            try:
                k = as_rational(other)
            except TypeError:
                return NotImplemented
            return FracPoly((e, k * c) for e, c in self._terms)
        return FracPoly(
            (e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in other._terms
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FracPoly):
            return NotImplemented
        k = as_rational(other)
        return FracPoly((e, c / k) for e, c in self._terms)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = FracPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, FracPoly):
            return self._terms == other._terms
        try:
            return self._terms == self._lift(other)._terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x: float) -> float:
        """Evaluate at a real point; negative ``x`` needs odd-denominator exponents."""
        return math.fsum(float(c) * real_power(x, e) for e, c in self._terms)

    def rounded(self, max_denominator: int = 10**6) -> "FracPoly":
        """Snap every coefficient to the nearest fraction with bounded denominator.

        Useful for reading off exact structure from float-derived coefficients;
        coefficients that snap to zero disappear.
        """
        return FracPoly((e, c.limit_denominator(max_denominator)) for e, c in self._terms)

    def __repr__(self):
        return f"FracPoly({[(str(e), str(c)) for e, c in self._terms]})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(f"x^({e})")
            else:
                parts.append(f"({c})*x^({e})")
        return " + ".join(parts)


X = FracPoly.monomial(1)


def poly_algebra(p: FracPoly, q: FracPoly, op: str) -> FracPoly:
    """Apply ``op`` in {"add", "sub", "mul"} to two polynomials."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def evaluate(p: FracPoly, x: float, alpha=None) -> float:
    """Evaluate ``p`` at ``x``.

    ``alpha`` is accepted for symmetry with the rest of the API; the
    negative-base rule depends only on the exponents actually present.
    """
    return p(x)


def conformable_derivative(p: FracPoly, gamma) -> FracPoly:
    """Conformable derivative of order ``gamma`` in (0, 1].

    Acts termwise as ``x**b -> b * x**(b - gamma)``; constants vanish.
    """
    g = as_rational(gamma)
    if not 0 < g <= 1:
        raise ValueError(f"conformable order must lie in (0, 1], got {g}")
    return FracPoly((e - g, e * c) for e, c in p.terms if e != 0)


def derivative_factor(beta, gamma) -> Fraction:
    """Coefficient ``D^gamma x**beta = factor * x**(beta - gamma)``.

    For non-integer ``gamma`` this is the falling product
    ``beta (beta-1) ... (beta-floor(gamma))`` with ``floor(gamma)+1`` factors,
    i.e. ``floor(gamma)`` classical derivatives followed by one conformable
    step. For integer ``gamma`` it is the classical ``gamma``-factor product.
    """
    b = as_rational(beta)
    g = as_rational(gamma)
    if g <= 0:
        raise ValueError("derivative order must be positive")
    nfac = g.numerator // g.denominator
    if g.denominator != 1:
        nfac += 1
    out = Fraction(1)
    for j in range(nfac):
        out *= b - j
    return out


def sequential_derivative(p: FracPoly, gamma) -> FracPoly:
    """Derivative of any positive order ``gamma`` (see :func:`derivative_factor`)."""
    g = as_rational(gamma)
    return FracPoly((e - g, derivative_factor(e, g) * c) for e, c in p.terms)


def conformable_integral(p: FracPoly, gamma) -> FracPoly:
    """``I_gamma p = integral_0^x t**(gamma-1) p(t) dt`` for ``gamma`` in (0, 1]."""
    g = as_rational(gamma)
    if not 0 < g <= 1:
        raise ValueError(f"integral order must lie in (0, 1], got {g}")
    return FracPoly((e + g, c / (e + g)) for e, c in p.terms)


def classical_derivative(p: FracPoly, k: int = 1) -> FracPoly:
    for _ in range(k):
        p = FracPoly((e - 1, e * c) for e, c in p.terms if e != 0)
    return p


def compose(p: FracPoly, q: FracPoly) -> FracPoly:
    """``p(q(x))`` for ``p`` with nonnegative integer exponents."""
    out = FracPoly()
    for e, c in p.terms:
        if e.denominator != 1 or e < 0:
            raise ValueError("outer polynomial must have nonnegative integer exponents")
        out = out + c * q ** int(e)
    return out


def reflect(p: FracPoly) -> FracPoly:
    """``p(-x)`` as a polynomial; every exponent needs an odd denominator."""
    terms = []
    for e, c in p.terms:
        if e.denominator % 2 == 0:
            raise NegativeBaseEvenRoot(f"x^({e}) has no real reflection")
        terms.append((e, -c if e.numerator % 2 else c))
    return FracPoly(terms)
