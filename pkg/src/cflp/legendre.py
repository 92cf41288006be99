"""Conformable fractional Legendre polynomials P_{alpha n}.

``P_{alpha n}(x)`` is the classical Legendre polynomial in the variable
``x**alpha``. Besides the explicit coefficient formula (:func:`cflp`) this
module builds it four further ways (:func:`cflp_via`) so that the routes can
be checked against one another exactly, and offers floating-point evaluations
through hypergeometric series, Laplace's integral and generating functions.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NonCommensurate, NoConvergence, PochhammerPole
from .fracpoly import (
    FracPoly,
    as_alpha,
    as_rational,
    real_power,
)

HALF = Fraction(1, 2)


class CflpForm(enum.Enum):
    EXPLICIT_SUM = "explicit"
    RECURRENCE = "recurrence"
    GENFUN_SERIES = "genfun"
    ODD_HALF_EXPANSION = "odd-half"
    SHIFTED_ARG_EXPANSION = "shifted-arg"


class HypForm(enum.Enum):
    AT_ONE_MINUS_X = "one-minus-x"
    AT_INVERSE_SQUARE = "inverse-square"
    AT_SHIFTED_SQUARE = "shifted-square"


def pochhammer(a, k: int) -> Fraction:
    """Rising product ``a (a+1) ... (a+k-1)`` in exact arithmetic."""
    a = as_rational(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def _xa(a: Fraction, k: int) -> FracPoly:
    return FracPoly.monomial(a * k)


def _from_xdegrees(coeffs: dict, a: Fraction) -> FracPoly:
    return FracPoly((a * i, c) for i, c in coeffs.items())


@lru_cache(maxsize=1024)
def _cflp(n: int, a: Fraction) -> FracPoly:
    f = math.factorial
    terms = []
    for k in range(n // 2 + 1):
        c = Fraction((-1) ** k * f(2 * n - 2 * k), 2**n * f(k) * f(n - k) * f(n - 2 * k))
        terms.append((a * (n - 2 * k), c))
    return FracPoly(terms)


def cflp(n: int, alpha) -> FracPoly:
    """Explicit CFLP of degree ``alpha*n``.

    ``sum_k (-1)^k (2n-2k)! / (2^n k! (n-k)! (n-2k)!) x^(alpha(n-2k))``
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return _cflp(n, as_alpha(alpha).value)


def _by_recurrence(n: int, a: Fraction) -> FracPoly:
    prev, cur = FracPoly.constant(1), _xa(a, 1)
    if n == 0:
        return prev
    xa = _xa(a, 1)
    for j in range(1, n):
        prev, cur = cur, (Fraction(2 * j + 1) * xa * cur - j * prev) / (j + 1)
    return cur


def _bimul(p: dict, q: dict, tmax: int) -> dict:
    out: dict = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            j = j1 + j2
            if j <= tmax:
                key = (i1 + i2, j)
                out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def _by_genfun(n: int, a: Fraction) -> FracPoly:
    # (1 - u)^(-1/2) = sum_k (1/2)_k / k! u^k with u = 2 X T - T^2,
    # kept as a bivariate polynomial in X = x^a, T = t^a truncated at T^n
    u = {(1, 1): Fraction(2), (0, 2): Fraction(-1)}
    power = {(0, 0): Fraction(1)}
    weight = Fraction(1)
    series: dict = {}
    for k in range(n + 1):
        for key, c in power.items():
            series[key] = series.get(key, 0) + weight * c
        power = _bimul(power, u, n)
        weight *= (HALF + k) / (k + 1)
    return _from_xdegrees({i: c for (i, j), c in series.items() if j == n}, a)


def _by_odd_half(n: int, a: Fraction) -> FracPoly:
    f = math.factorial
    sq = _xa(a, 2) - 1
    out = FracPoly()
    for k in range(n // 2 + 1):
        c = pochhammer(HALF, k) * f(n) / (f(2 * k) * f(k) * f(n - 2 * k))
        out = out + c * _xa(a, n - 2 * k) * sq**k
    return out


def _by_shifted_arg(n: int, a: Fraction) -> FracPoly:
    f = math.factorial
    half_shift = (_xa(a, 1) + 1) / 2
    out = FracPoly()
    for k in range(n + 1):
        c = Fraction((-1) ** (n + k) * f(n + k), f(k) ** 2 * f(n - k))
        out = out + c * half_shift**k
    return out


_BUILDERS = {
    CflpForm.EXPLICIT_SUM: _cflp,
    CflpForm.RECURRENCE: _by_recurrence,
    CflpForm.GENFUN_SERIES: _by_genfun,
    CflpForm.ODD_HALF_EXPANSION: _by_odd_half,
    CflpForm.SHIFTED_ARG_EXPANSION: _by_shifted_arg,
}


def cflp_via(form, n: int, alpha) -> FracPoly:
    """Build ``P_{alpha n}`` by the route named by ``form``.

    Every route must agree exactly with :func:`cflp`:

    * ``RECURRENCE``: ``(n+1) P_{n+1} = (2n+1) x^a P_n - n P_{n-1}``
    * ``GENFUN_SERIES``: coefficient of ``t^(a n)`` in the truncated binomial
      expansion of ``(1 - 2 x^a t^a + t^(2a))^(-1/2)``
    * ``ODD_HALF_EXPANSION``: sum of ``x^(a(n-2k)) (x^(2a) - 1)^k`` products
    * ``SHIFTED_ARG_EXPANSION``: sum of ``((x^a + 1)/2)^k`` products
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return _BUILDERS[CflpForm(form)](n, as_alpha(alpha).value)


def hyp2f1_terminating(neg_n: int, b, c, z: float) -> float:
    """Terminating Gauss series ``2F1(neg_n, b; c; z)`` with ``neg_n <= 0``.

    The float ``z`` is taken as the exact binary rational it represents and
    the whole sum is carried out in rationals, so the result is rounded only
    once. Near ``|z| = 1`` the terms alternate and grow large, and per-term
    rounding would lose several digits to cancellation.
    """
    if neg_n > 0 or int(neg_n) != neg_n:
        raise ValueError("first parameter must be a nonpositive integer")
    m = -int(neg_n)
    b, c = as_rational(b), as_rational(c)
    if not math.isfinite(z):
        raise ValueError(f"z must be finite, got {z}")
    zq = Fraction(z)
    coef = Fraction(1)
    power = Fraction(1)
    total = Fraction(1)
    for k in range(m):
        if c + k == 0:
            raise PochhammerPole(f"(c)_k vanishes at k={k + 1} for c={c}")
        coef *= Fraction(neg_n + k) * (b + k) / ((c + k) * (k + 1))
        power *= zq
        total += coef * power
    return float(total)


def _hyp2f1_series(a, b, c, z: float, max_terms: int = 100_000) -> float:
    # plain power series, |z| < 1; terminates early if a or b is a nonpositive integer
    a, b, c = float(a), float(b), float(c)
    term, total = 1.0, [1.0]
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total.append(term)
        if term == 0.0 or abs(term) < 1e-18 * abs(math.fsum(total)):
            return math.fsum(total)
    raise NoConvergence("hypergeometric series did not converge")


def _even_odd_params(n: int) -> tuple[int, Fraction]:
    # (-n/2, -n/2 + 1/2): whichever is a nonpositive integer comes first
    if n % 2 == 0:
        return -(n // 2), Fraction(-n, 2) + HALF
    return -((n - 1) // 2), Fraction(-n, 2)


def cflp_hyp(n: int, alpha, x: float, form) -> float:
    """Evaluate ``P_{alpha n}(x)`` through one of three hypergeometric identities."""
    al = as_alpha(alpha).value
    form = HypForm(form)
    xa = real_power(x, al)
    if form is HypForm.AT_ONE_MINUS_X:
        return hyp2f1_terminating(-n, n + 1, 1, (1.0 - xa) / 2.0)
    if xa == 0.0:
        raise DomainError(f"{form.value} form needs x^alpha != 0")
    neg, b = _even_odd_params(n)
    if form is HypForm.AT_INVERSE_SQUARE:
        pref = float(pochhammer(HALF, n) / math.factorial(n)) * (2.0 * xa) ** n
        return pref * hyp2f1_terminating(neg, b, HALF - n, 1.0 / (xa * xa))
    return xa**n * hyp2f1_terminating(neg, b, 1, (xa * xa - 1.0) / (xa * xa))


def laplace_integral(n: int, alpha, x: float, quad_points: int = 256) -> float:
    """``(1/pi) integral_0^pi (x^a + sqrt(x^(2a) - 1) cos phi)^n dphi``.

    Composite Simpson with ``quad_points`` panels. Only the real branch
    ``x^a >= 1`` is supported.
    """
    al = as_alpha(alpha).value
    if quad_points < 8:
        raise ValueError("need at least 8 panels")
    xa = real_power(x, al)
    if xa < 1.0:
        raise DomainError(f"Laplace integral needs x^alpha >= 1, got {xa}")
    r = math.sqrt(xa * xa - 1.0)

    def g(phi):
        return (xa + r * math.cos(phi)) ** n

    h = math.pi / quad_points
    vals = []
    for i in range(quad_points):
        a = i * h
        vals.extend((g(a), 4.0 * g(a + h / 2), g(a + h)))
    return math.fsum(vals) * h / 6.0 / math.pi


GENFUN_T_LIMIT = 0.5
GENFUN_X_LIMIT = 1.5


def genfun_check(x: float, t: float, alpha, N: int, c=1) -> tuple[float, float]:
    """Closed form and partial sum of the ``c``-parameter generating function.

    Returns ``(closed, partial)`` where ``closed`` is
    ``(1 - X T)^(-c) 2F1(c/2, c/2 + 1/2; 1; (X^2 - 1) T^2 / (1 - X T)^2)``
    and ``partial`` is ``sum_{n<=N} (c)_n / n! P_{alpha n}(x) T^n`` with
    ``X = x^alpha``, ``T = t^alpha``. Inputs are restricted to
    ``|T| <= 0.5`` and ``|X| <= 1.5`` where both sides converge.
    """
    al = as_alpha(alpha).value
    c = as_rational(c)
    xa, ta = real_power(x, al), real_power(t, al)
    if abs(ta) > GENFUN_T_LIMIT or abs(xa) > GENFUN_X_LIMIT:
        raise DomainError("need |t^alpha| <= 0.5 and |x^alpha| <= 1.5")
    if 1.0 - 2.0 * xa * ta + ta * ta <= 0.0:
        raise DomainError("nonpositive radicand 1 - 2 x^a t^a + t^2a")
    base = 1.0 - xa * ta
    z = (xa * xa - 1.0) * ta * ta / (base * base)
    if abs(z) >= 1.0:
        raise DomainError(f"hypergeometric argument {z} outside the unit disc")
    closed = base ** (-float(c)) * _hyp2f1_series(c / 2, c / 2 + HALF, 1, z)
    weight = Fraction(1)
    parts = []
    for n in range(N + 1):
        if weight == 0:
            break
        parts.append(float(weight) * cflp(n, al)(x) * ta**n)
        weight *= (c + n) / (n + 1)
    return closed, math.fsum(parts)


def expand_monomial(n: int, alpha=None) -> list[tuple[int, Fraction]]:
    """Coefficients of ``x^(alpha n)`` in the CFLP basis.

    Returns ``[(n - 2k, coeff), ...]`` with
    ``coeff = n!/2^n * (2n-4k+1) / (k! (3/2)_{n-k})``. The coefficients do
    not depend on alpha.
    """
    f = math.factorial
    out = []
    for k in range(n // 2 + 1):
        coeff = Fraction(f(n), 2**n) * (2 * n - 4 * k + 1) / (f(k) * pochhammer(Fraction(3, 2), n - k))
        out.append((n - 2 * k, coeff))
    return out


_INTERVALS = {"[-1,1]": (-1, 1), "[0,1]": (0, 1)}


def _parse_interval(interval) -> tuple[int, int]:
    if isinstance(interval, str):
        key = interval.replace(" ", "")
        if key not in _INTERVALS:
            raise ValueError(f"unsupported interval {interval!r}")
        return _INTERVALS[key]
    lo, hi = interval
    if (lo, hi) not in _INTERVALS.values():
        raise ValueError(f"unsupported interval {interval!r}")
    return lo, hi


def inner_product(p: FracPoly, q: FracPoly, alpha, interval="[-1,1]") -> Fraction:
    """Exact ``integral p q x^(alpha-1) dx`` over [-1, 1] or [0, 1].

    Substituting ``u = x^alpha`` turns the integrand into an ordinary
    polynomial in ``u`` times ``du/alpha``, integrated exactly.
    """
    al = as_alpha(alpha)
    lo, _ = _parse_interval(interval)
    if lo == -1 and not al.odd_reciprocal:
        raise DomainError(f"[-1,1] needs alpha = 1/(2j+1), got {al}")
    total = Fraction(0)
    for e, c in (p * q).terms:
        k = e / al.value
        if k.denominator != 1 or k < 0:
            raise NonCommensurate(f"exponent {e} is not a nonnegative multiple of {al}")
        k = int(k)
        if lo == 0:
            total += c / (k + 1)
        elif k % 2 == 0:
            total += 2 * c / (k + 1)
    return total / al.value


def cflp_integral(n: int, alpha, gamma) -> FracPoly:
    """Conformable integral ``I_gamma P_{alpha n}`` from its closed termwise formula."""
    a = as_alpha(alpha).value
    g = as_rational(gamma)
    if not 0 < g <= 1:
        raise ValueError(f"integral order must lie in (0, 1], got {g}")
    f = math.factorial
    terms = []
    for k in range(n // 2 + 1):
        c = Fraction((-1) ** k * f(2 * n - 2 * k), 2**n * f(k) * f(n - k) * f(n - 2 * k))
        terms.append((a * (n - 2 * k) + g, c / ((n - 2 * k) * a + g)))
    return FracPoly(terms)


__all__ = [
    "CflpForm",
    "HypForm",
    "cflp",
    "cflp_via",
    "cflp_hyp",
    "cflp_integral",
    "expand_monomial",
    "genfun_check",
    "hyp2f1_terminating",
    "inner_product",
    "laplace_integral",
    "pochhammer",
]
