"""Shifted conformable fractional Legendre polynomials on [0, 1].

``P*_{alpha n}(x)`` is the classical shifted Legendre polynomial evaluated at
``u = x**alpha``; it is orthogonal on [0, 1] for the weight ``x**(alpha-1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .fracpoly import FracPoly, as_alpha, conformable_derivative, real_power
from .legendre import inner_product
from .quad import DEFAULT_ORDER, gauss_legendre, legendre_roots


@dataclass(frozen=True)
class SclpCoeffTable:
    """Power coefficients ``b[s]`` of ``P*_{alpha n} = sum_s b[s] x^(alpha s)``."""

    n: int
    b: tuple


@lru_cache(maxsize=None)
def sclp_coeffs(n: int) -> SclpCoeffTable:
    f = math.factorial
    b = tuple(
        Fraction((-1) ** (n + s) * f(n + s), f(n - s) * f(s) ** 2) for s in range(n + 1)
    )
    return SclpCoeffTable(n, b)


def sclp(n: int, alpha) -> FracPoly:
    """Explicit SCFLP: ``sum_k (-1)^(n+k) (n+k)! / ((n-k)! (k!)^2) x^(alpha k)``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a = as_alpha(alpha).value
    return FracPoly((a * s, c) for s, c in enumerate(sclp_coeffs(n).b))


def sclp_recurrence(n: int, alpha) -> FracPoly:
    """SCFLP from the three-term recurrence in ``2 x^alpha - 1``."""
    a = as_alpha(alpha).value
    prev = FracPoly.constant(1)
    if n == 0:
        return prev
    shift = 2 * FracPoly.monomial(a) - 1
    cur = shift
    for j in range(1, n):
        prev, cur = cur, (Fraction(2 * j + 1) * shift * cur - j * prev) / (j + 1)
    return cur


def _repeated_derivative(p: FracPoly, a: Fraction, n: int) -> FracPoly:
    for _ in range(n):
        p = conformable_derivative(p, a)
    return p


def sclp_rodrigues(n: int, alpha) -> FracPoly:
    """``1/(alpha^n n!) D^(alpha n) [x^(alpha n) (x^alpha - 1)^n]``, ``D^(alpha n)`` = n-fold ``D^alpha``."""
    a = as_alpha(alpha).value
    # binomial expansion of x^{an}(x^a - 1)^n
    kernel = FracPoly(
        (a * (2 * n - i), (-1) ** i * math.comb(n, i)) for i in range(n + 1)
    )
    return _repeated_derivative(kernel, a, n) / (a**n * math.factorial(n))


def cflp_rodrigues(n: int, alpha) -> FracPoly:
    """``1/(alpha^n 2^n n!) D^(alpha n) (x^(2 alpha) - 1)^n``."""
    a = as_alpha(alpha).value
    kernel = FracPoly((2 * a * (n - i), (-1) ** i * math.comb(n, i)) for i in range(n + 1))
    return _repeated_derivative(kernel, a, n) / (a**n * 2**n * math.factorial(n))


@dataclass(frozen=True)
class RootSet:
    k: int
    alpha: object
    roots: tuple


def sclp_roots(k: int, alpha, tol: float = 1e-14) -> RootSet:
    """The ``k`` zeros of ``P*_{alpha k}`` in (0, 1), ascending.

    Zeros ``u_i`` of the classical shifted polynomial are found by Newton's
    method and mapped back through ``x = u**(1/alpha)``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    al = as_alpha(alpha)
    inv = 1 / al.value
    us = sorted((1.0 + z) / 2.0 for z in legendre_roots(k, tol))
    return RootSet(k, al, tuple(real_power(u, inv) for u in us))


def shifted_legendre_values(m: int, u: float) -> list[float]:
    """``[L*_0(u), ..., L*_m(u)]`` for the classical shifted Legendre family."""
    vals = [1.0]
    if m == 0:
        return vals
    s = 2.0 * u - 1.0
    vals.append(s)
    for j in range(1, m):
        vals.append(((2 * j + 1) * s * vals[j] - j * vals[j - 1]) / (j + 1))
    return vals


def sclp_value(n: int, alpha, x: float) -> float:
    """Numerically stable evaluation of ``P*_{alpha n}(x)`` via the recurrence."""
    return shifted_legendre_values(n, real_power(x, as_alpha(alpha).value))[n]


def sclp_inner_product(n: int, m: int, alpha) -> Fraction:
    """Exact ``integral_0^1 P*_{alpha n} P*_{alpha m} x^(alpha-1) dx``."""
    return inner_product(sclp(n, alpha), sclp(m, alpha), alpha, "[0,1]")


def project(
    f: Callable[[float], float],
    m: int,
    alpha,
    quad_points: int = DEFAULT_ORDER,
) -> list[float]:
    """Coefficients ``a_0..a_m`` of ``f`` in the SCFLP basis.

    ``a_i = alpha (2i+1) integral_0^1 P*_{alpha i}(x) f(x) x^(alpha-1) dx``,
    computed as ``(2i+1) integral_0^1 L*_i(u) f(u^(1/alpha)) du`` with a
    Gauss-Legendre rule in ``u``.
    """
    if quad_points < 16:
        raise ValueError("need at least 16 quadrature points")
    inv = 1 / as_alpha(alpha).value
    rule = gauss_legendre(quad_points)
    acc = [[] for _ in range(m + 1)]
    for u, w in zip(rule.nodes, rule.weights):
        fu = f(real_power(u, inv))
        for i, li in enumerate(shifted_legendre_values(m, u)):
            acc[i].append(w * li * fu)
    return [(2 * i + 1) * math.fsum(parts) for i, parts in enumerate(acc)]
