"""Exact identity checks over the CFLP/SCFLP families.

Every check returns a boolean from an exact FracPoly or Fraction comparison;
:func:`run_invariants` sweeps them over degrees and orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fracpoly import (
    FracPoly,
    as_alpha,
    compose,
    conformable_derivative,
    conformable_integral,
    reflect,
)
from .legendre import CflpForm, cflp, cflp_integral, cflp_via, expand_monomial, inner_product
from .shifted import cflp_rodrigues, sclp, sclp_inner_product, sclp_recurrence, sclp_rodrigues


def legendre_ode_residual(n: int, alpha) -> FracPoly:
    """``(1 - x^2a) D^a D^a P - 2a x^a D^a P + a^2 n(n+1) P`` for ``P = P_{a n}``."""
    a = as_alpha(alpha).value
    p = cflp(n, a)
    d1 = conformable_derivative(p, a)
    d2 = conformable_derivative(d1, a)
    xa = FracPoly.monomial(a)
    return (1 - xa * xa) * d2 - 2 * a * xa * d1 + a * a * n * (n + 1) * p


def shifted_ode_residual(n: int, alpha) -> FracPoly:
    """``x^a (1 - x^a) D^a D^a P* - a (2x^a - 1) D^a P* + a^2 n(n+1) P*``.

    Each conformable derivative of a function of ``u = x^a`` carries a factor
    ``a``, hence the powers of ``a`` on the lower-order terms.
    """
    a = as_alpha(alpha).value
    p = sclp(n, a)
    d1 = conformable_derivative(p, a)
    d2 = conformable_derivative(d1, a)
    xa = FracPoly.monomial(a)
    return xa * (1 - xa) * d2 - a * (2 * xa - 1) * d1 + a * a * n * (n + 1) * p


def three_term_residual(n: int, alpha) -> FracPoly:
    a = as_alpha(alpha).value
    return (n + 1) * cflp(n + 1, a) - (2 * n + 1) * FracPoly.monomial(a) * cflp(n, a) + n * cflp(n - 1, a)


def derivative_recurrence_residuals(n: int, alpha) -> dict:
    """Residuals of the three differential recurrences (``n >= 1``)."""
    a = as_alpha(alpha).value
    xa = FracPoly.monomial(a)

    def D(p):
        return conformable_derivative(p, a)

    lo, mid, hi = cflp(n - 1, a), cflp(n, a), cflp(n + 1, a)
    return {
        "raise": D(hi) - (n + 1) * a * mid - xa * D(mid),
        "lower": xa * D(mid) - n * a * mid - D(lo),
        "difference": D(hi) - D(lo) - (2 * n + 1) * a * mid,
    }


def monomial_roundtrip(n: int, alpha) -> FracPoly:
    a = as_alpha(alpha).value
    total = FracPoly()
    for deg, coeff in expand_monomial(n, a):
        total = total + coeff * cflp(deg, a)
    return total


def shift_identity(n: int, alpha) -> FracPoly:
    """Classical ``P_n`` composed with ``2 x^a - 1``."""
    a = as_alpha(alpha).value
    return compose(cflp(n, 1), 2 * FracPoly.monomial(a) - 1)


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    alpha: Fraction
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} n={self.n} alpha={self.alpha}"


def checks_for(n: int, alpha) -> list[tuple[str, bool]]:
    al = as_alpha(alpha)
    a = al.value
    p = cflp(n, a)
    ps = sclp(n, a)
    out = [(f"construction:{f.value}", cflp_via(f, n, a) == p) for f in CflpForm]
    out += [
        ("rodrigues:cflp", cflp_rodrigues(n, a) == p),
        ("rodrigues:sclp", sclp_rodrigues(n, a) == ps),
        ("sclp:recurrence", sclp_recurrence(n, a) == ps),
        ("sclp:shift", shift_identity(n, a) == ps),
        ("normalization", sum(c for _, c in p.terms) == 1),
        ("sclp:endpoints", sum(c for _, c in ps.terms) == 1 and ps.coefficient(0) == (-1) ** n),
        ("ode:cflp", legendre_ode_residual(n, a).is_zero()),
        ("ode:sclp", shifted_ode_residual(n, a).is_zero()),
        ("monomial-expansion", monomial_roundtrip(n, a) == FracPoly.monomial(a * n)),
        ("integral", cflp_integral(n, a, a) == conformable_integral(p, a)),
        ("norm:sclp", sclp_inner_product(n, n, a) == 1 / (a * (2 * n + 1))),
    ]
    if n >= 1:
        out.append(("recurrence:three-term", three_term_residual(n, a).is_zero()))
        out += [
            (f"recurrence:{k}", r.is_zero())
            for k, r in derivative_recurrence_residuals(n, a).items()
        ]
        out.append(("orthogonality:sclp", sclp_inner_product(n, n - 1, a) == 0))
    if al.odd_reciprocal:
        out.append(("norm:cflp", inner_product(p, p, al, "[-1,1]") == Fraction(2) / (a * (2 * n + 1))))
        out.append(("parity", reflect(p) == (-1) ** n * p))
        if n >= 1:
            out.append(("orthogonality:cflp", inner_product(p, cflp(n - 1, a), al, "[-1,1]") == 0))
    return out


def run_invariants(n_max: int, alphas) -> list[CheckResult]:
    results = []
    for alpha in alphas:
        a = as_alpha(alpha).value
        for n in range(n_max + 1):
            results.extend(CheckResult(name, n, a, ok) for name, ok in checks_for(n, a))
    return results
