"""Collocation solver for linear multi-order conformable FDEs on [0, 1].

The problem is

    D^gamma y + sum_r c_r(x) D^gamma_r y + c_0(x) y = scale * g(x),
    y^(j)(0) = d_j,  j = 0 .. ceil(gamma) - 1,

with ``y`` sought as ``sum_{i<=m} a_i P*_{alpha i}``. The equation is
enforced at the zeros of ``P*_{alpha (m+1-ceil(gamma))}`` and the initial
conditions supply the remaining rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

import numpy as np

from .errors import FractionalIC, IllPosed, SingularSystem
from .fracpoly import (
    Alpha,
    FracPoly,
    as_alpha,
    as_rational,
    derivative_factor,
    real_power,
    sequential_derivative,
)
from .shifted import sclp, sclp_coeffs, sclp_roots, sclp_value

Coefficient = Union[float, int, Fraction, FracPoly, Callable[[float], float]]

PIVOT_RTOL = 1e-12
RESIDUAL_GRID = tuple(j / 10 for j in range(1, 11))


def coefficient_value(c: Coefficient, x: float) -> float:
    if isinstance(c, (int, float, Fraction)):
        return float(c)
    return float(c(x))


@dataclass(frozen=True)
class FdeProblem:
    """Linear multi-order conformable FDE with initial conditions.

    ``lower_terms`` holds ``(coefficient, order)`` pairs with strictly
    increasing orders below ``gamma``. Coefficients (including
    ``zero_order_coeff``) may be constants, :class:`FracPoly` values or any
    callable of ``x``; ``rhs`` is a FracPoly or a callable.
    """

    gamma: Fraction
    rhs: Union[FracPoly, Callable[[float], float]]
    initial_conditions: tuple
    m: int
    alpha: Alpha
    lower_terms: tuple = ()
    zero_order_coeff: Coefficient = 0.0
    rhs_scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_rational(self.gamma))
        object.__setattr__(self, "alpha", as_alpha(self.alpha))
        terms = tuple((c, as_rational(g)) for c, g in self.lower_terms)
        object.__setattr__(self, "lower_terms", terms)
        object.__setattr__(self, "initial_conditions", tuple(float(d) for d in self.initial_conditions))
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        orders = [g for _, g in terms]
        if any(g <= 0 for g in orders):
            raise ValueError("lower-order terms need positive orders")
        if any(b <= a for a, b in zip(orders, orders[1:])):
            raise ValueError("lower-order terms must have strictly increasing orders")
        if orders and orders[-1] >= self.gamma:
            raise ValueError("lower-order terms must be below gamma")
        if len(self.initial_conditions) != self.n_initial:
            raise ValueError(
                f"need {self.n_initial} initial conditions, got {len(self.initial_conditions)}"
            )
        if self.m + 1 - self.n_initial < 0:
            raise ValueError(f"m={self.m} is too small for {self.n_initial} initial conditions")

    @property
    def n_initial(self) -> int:
        return math.ceil(self.gamma)

    def rhs_value(self, x: float) -> float:
        return self.rhs_scale * float(self.rhs(x))


@dataclass(frozen=True)
class DerivCoeffs:
    """``D^gamma P*_{alpha i} = sum_s R[i][s] x^(exponent[i][s])`` for ``i <= m``.

    ``table[i]`` is a tuple of ``(R, exponent)`` pairs for ``s = 0..i``.
    """

    m: int
    alpha: Alpha
    gamma: Fraction
    table: tuple

    def row(self, x: float) -> np.ndarray:
        out = np.zeros(self.m + 1)
        for i, entries in enumerate(self.table):
            out[i] = math.fsum(float(r) * real_power(x, e) for r, e in entries if r != 0)
        return out


def deriv_coeffs(m: int, alpha, gamma) -> DerivCoeffs:
    """Coefficients of ``D^gamma`` applied to each basis function.

    ``R[i][s] = b[s,i] * derivative_factor(s alpha, gamma)``, set to zero when
    ``s alpha`` is a nonnegative integer below ``gamma``.
    """
    al = as_alpha(alpha)
    g = as_rational(gamma)
    a = al.value
    table = []
    for i in range(m + 1):
        row = []
        for s, b in enumerate(sclp_coeffs(i).b):
            beta = s * a
            if beta.denominator == 1 and beta < g:
                r = Fraction(0)
            else:
                r = b * derivative_factor(beta, g)
            row.append((r, beta - g))
        table.append(tuple(row))
    return DerivCoeffs(m, al, g, tuple(table))


def _check_initial_orders(problem: FdeProblem) -> None:
    a = problem.alpha.value
    for j in range(1, problem.n_initial):
        bad = [s * a for s in range(1, problem.m + 1) if (s * a).denominator != 1 and s * a < j]
        if bad:
            raise FractionalIC(
                f"y^({j})(0) is undefined for a basis containing x^({bad[0]})"
            )


def assemble(problem: FdeProblem):
    """Build the collocation system.

    Returns ``(matrix, rhs_vector, collocation_points)``. The first
    ``m + 1 - ceil(gamma)`` rows collocate the equation; the last
    ``ceil(gamma)`` rows impose ``j! * [x^j] y = d_j``.
    """
    _check_initial_orders(problem)
    m, al = problem.m, problem.alpha
    n_coll = m + 1 - problem.n_initial
    points = sclp_roots(n_coll, al).roots if n_coll > 0 else ()

    main = deriv_coeffs(m, al, problem.gamma)
    lower = [(c, deriv_coeffs(m, al, g)) for c, g in problem.lower_terms]
    for x in points:
        if x <= 0:
            for dc in [main] + [d for _, d in lower]:
                if any(r != 0 and e < 0 for entries in dc.table for r, e in entries):
                    raise IllPosed(f"negative power evaluated at collocation point {x}")

    A = np.zeros((m + 1, m + 1))
    rhs = np.zeros(m + 1)
    for p, x in enumerate(points):
        row = main.row(x)
        for c, dc in lower:
            row = row + coefficient_value(c, x) * dc.row(x)
        c0 = coefficient_value(problem.zero_order_coeff, x)
        if c0 != 0.0:
            row = row + c0 * np.array([sclp_value(i, al, x) for i in range(m + 1)])
        A[p] = row
        rhs[p] = problem.rhs_value(x)

    basis = [sclp(i, al) for i in range(m + 1)]
    for j, d in enumerate(problem.initial_conditions):
        r = n_coll + j
        A[r] = [math.factorial(j) * float(P.coefficient(j)) for P in basis]
        rhs[r] = d
    return A, rhs, tuple(points)


def solve_dense(A, b, pivot_rtol: float = PIVOT_RTOL) -> tuple[np.ndarray, float]:
    """Gaussian elimination with partial pivoting.

    Returns the solution and the ratio of largest to smallest pivot magnitude
    as a cheap conditioning diagnostic. A pivot smaller than ``pivot_rtol``
    times the largest entry of its original row raises :class:`SingularSystem`.
    """
    A = np.array(A, dtype=float)
    b = np.array(b, dtype=float)
    n = len(b)
    row_scale = np.max(np.abs(A), axis=1) if n else np.zeros(0)
    if np.any(row_scale == 0):
        raise SingularSystem("matrix has a zero row")
    pivots = []
    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if p != k:
            A[[k, p]] = A[[p, k]]
            b[[k, p]] = b[[p, k]]
            row_scale[[k, p]] = row_scale[[p, k]]
        piv = A[k, k]
        if abs(piv) < pivot_rtol * row_scale[k]:
            raise SingularSystem(f"negligible pivot {piv:.3e} in column {k}")
        pivots.append(abs(piv))
        f = A[k + 1 :, k] / piv
        A[k + 1 :, k:] -= np.outer(f, A[k, k:])
        b[k + 1 :] -= f * b[k]
    x = np.zeros(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - A[k, k + 1 :] @ x[k + 1 :]) / A[k, k]
    cond = max(pivots) / min(pivots) if pivots else 1.0
    return x, cond


def apply_operator(problem: FdeProblem, y: FracPoly, x: float) -> float:
    """Left-hand side of the equation for ``y`` at ``x``, via exact derivatives."""
    total = [sequential_derivative(y, problem.gamma)(x)]
    for c, g in problem.lower_terms:
        total.append(coefficient_value(c, x) * sequential_derivative(y, g)(x))
    total.append(coefficient_value(problem.zero_order_coeff, x) * y(x))
    return math.fsum(total)


def residual(problem: FdeProblem, y: FracPoly, x: float) -> float:
    return apply_operator(problem, y, x) - problem.rhs_value(x)


@dataclass(frozen=True)
class SolveReport:
    coefficients: tuple
    solution: FracPoly
    collocation_points: tuple
    matrix_condition_estimate: float
    residual_samples: tuple = field(default=())


def solve(problem: FdeProblem) -> SolveReport:
    """Solve the collocation system and sample the residual of the result.

    The solution polynomial carries the float coefficients converted exactly
    to binary fractions; residuals are sampled at the collocation points and
    at ``x = 0.1, 0.2, ..., 1.0``.
    """
    A, rhs, points = assemble(problem)
    a, cond = solve_dense(A, rhs)
    y = FracPoly()
    for i, ai in enumerate(a):
        if ai != 0.0:
            y = y + Fraction(float(ai)) * sclp(i, problem.alpha)
    xs = sorted(set(points) | set(RESIDUAL_GRID))
    samples = tuple((x, residual(problem, y, x)) for x in xs)
    return SolveReport(
        coefficients=tuple(float(v) + 0.0 for v in a),
        solution=y,
        collocation_points=points,
        matrix_condition_estimate=float(cond),
        residual_samples=samples,
    )
