"""Gauss-Legendre rules on [0, 1] and integration against the weight x**(alpha-1)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import NoConvergence
from .fracpoly import as_alpha, real_power

DEFAULT_ORDER = 64
MAX_ORDER = 256
_MAX_NEWTON = 100


@dataclass(frozen=True)
class QuadRule:
    """Gauss-Legendre nodes (increasing) and weights on [0, 1]."""

    nodes: tuple
    weights: tuple
    order: int

    def integrate(self, f: Callable[[float], float], a: float = 0.0, b: float = 1.0) -> float:
        h = b - a
        return h * math.fsum(w * f(a + h * u) for u, w in zip(self.nodes, self.weights))


def legendre_and_derivative(k: int, z: float) -> tuple[float, float]:
    """Value and derivative of the classical Legendre polynomial ``P_k`` at ``z``."""
    p0, p1 = 1.0, z
    if k == 0:
        return 1.0, 0.0
    for j in range(1, k):
        p0, p1 = p1, ((2 * j + 1) * z * p1 - j * p0) / (j + 1)
    # P_k' from the identity (1 - z^2) P_k' = k (P_{k-1} - z P_k)
    dp = k * (p0 - z * p1) / (1.0 - z * z)
    return p1, dp


def legendre_roots(k: int, tol: float = 1e-14) -> list[float]:
    """Roots of ``P_k`` on (-1, 1), decreasing, by Newton from Chebyshev-type guesses."""
    if k < 1:
        raise ValueError("degree must be at least 1")
    roots = []
    for i in range(1, k + 1):
        z = math.cos(math.pi * (4 * i - 1) / (4 * k + 2))
        for _ in range(_MAX_NEWTON):
            p, dp = legendre_and_derivative(k, z)
            dz = p / dp
            z -= dz
            # tolerance is stated in the [0, 1] variable u = (1 + z)/2
            if abs(dz) / 2 < tol:
                break
        else:
            raise NoConvergence(f"Newton failed for root {i} of P_{k}")
        roots.append(z)
    return roots


@lru_cache(maxsize=None)
def gauss_legendre(order: int = DEFAULT_ORDER) -> QuadRule:
    """``order``-point Gauss-Legendre rule mapped to [0, 1].

    Exact for polynomials of degree up to ``2*order - 1``.
    """
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}], got {order}")
    nodes, weights = [], []
    for z in reversed(legendre_roots(order)):
        _, dp = legendre_and_derivative(order, z)
        nodes.append((1.0 + z) / 2.0)
        weights.append(1.0 / ((1.0 - z * z) * dp * dp))
    return QuadRule(tuple(nodes), tuple(weights), order)


def conformable_quad(
    f: Callable[[float], float],
    a: float,
    b: float,
    alpha,
    order: int = DEFAULT_ORDER,
) -> float:
    """Approximate ``integral_a^b f(x) x**(alpha-1) dx``.

    With ``u = x**alpha`` the weight disappears:
    ``(1/alpha) * integral_{a**alpha}^{b**alpha} f(u**(1/alpha)) du``.
    """
    al = as_alpha(alpha).value
    if a < 0 or b <= a:
        raise ValueError("need 0 <= a < b")
    ua, ub = real_power(a, al), real_power(b, al)
    inv = 1 / al
    rule = gauss_legendre(order)
    return rule.integrate(lambda u: f(real_power(u, inv)), ua, ub) / float(al)

