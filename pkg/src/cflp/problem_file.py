"""Reading FDE problem files.

A problem file is a YAML (or JSON) mapping::

    alpha: "1"
    gamma: "2"
    terms:
      - {order: "3/2", coeff: 1}
      - {order: "1/2", expr: [{exponent: "1/2", coeff: 3}]}
    zero_order_coeff: 1          # or a polynomial literal
    rhs: [{exponent: "0", coeff: 1}, {exponent: "1", coeff: 1}]   # or a builtin name
    rhs_scale: 1                 # optional
    initial_conditions: [1, 1]
    m: 2

Rationals are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import math
from pathlib import Path

import yaml

from .errors import ProblemParseError
from .fracpoly import Alpha, FracPoly, as_rational
from .solver import FdeProblem

BUILTIN_RHS = {
    "exp": math.exp,
    "sin": math.sin,
    "cos": math.cos,
    "sqrt": math.sqrt,
}


def _rational(value, field: str):
    if value is None:
        raise ProblemParseError(field, "missing")
    try:
        return as_rational(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ProblemParseError(field, f"invalid rational {value!r} ({exc})") from None


def _real(value, field: str) -> float:
    if isinstance(value, bool) or value is None:
        raise ProblemParseError(field, f"expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    return float(_rational(value, field))


def _literal(value, field: str) -> FracPoly:
    if not isinstance(value, list):
        raise ProblemParseError(field, "expected a list of {exponent, coeff} entries")
    terms = []
    for k, entry in enumerate(value):
        where = f"{field}[{k}]"
        if not isinstance(entry, dict):
            raise ProblemParseError(where, "expected a mapping with exponent and coeff")
        e = _rational(entry.get("exponent"), f"{where}.exponent")
        if e < 0:
            raise ProblemParseError(f"{where}.exponent", "must be nonnegative")
        terms.append((e, _rational(entry.get("coeff"), f"{where}.coeff")))
    return FracPoly(terms)


def _coefficient(value, field: str):
    if isinstance(value, list):
        return _literal(value, field)
    return _real(value, field)


def parse_problem(doc) -> FdeProblem:
    """Validate a parsed document and build the :class:`FdeProblem`."""
    if not isinstance(doc, dict):
        raise ProblemParseError("document", "top level must be a mapping")
    try:
        alpha = Alpha(_rational(doc.get("alpha"), "alpha"))
    except ValueError as exc:
        if isinstance(exc, ProblemParseError):
            raise
        raise ProblemParseError("alpha", str(exc)) from None
    gamma = _rational(doc.get("gamma"), "gamma")

    raw_terms = doc.get("terms") or []
    if not isinstance(raw_terms, list):
        raise ProblemParseError("terms", "expected a list")
    terms = []
    for k, t in enumerate(raw_terms):
        where = f"terms[{k}]"
        if not isinstance(t, dict):
            raise ProblemParseError(where, "expected a mapping")
        order = _rational(t.get("order"), f"{where}.order")
        if "expr" in t:
            coeff = _literal(t["expr"], f"{where}.expr")
        elif "coeff" in t:
            coeff = _real(t["coeff"], f"{where}.coeff")
        else:
            raise ProblemParseError(where, "needs coeff or expr")
        terms.append((coeff, order))
    terms.sort(key=lambda ct: ct[1])

    zero = _coefficient(doc.get("zero_order_coeff", 0), "zero_order_coeff")

    rhs_doc = doc.get("rhs")
    if isinstance(rhs_doc, str):
        if rhs_doc not in BUILTIN_RHS:
            raise ProblemParseError("rhs", f"unknown builtin {rhs_doc!r}; choose from {sorted(BUILTIN_RHS)}")
        rhs = BUILTIN_RHS[rhs_doc]
    else:
        rhs = _literal(rhs_doc, "rhs")
    scale = _real(doc.get("rhs_scale", 1), "rhs_scale")

    ics = doc.get("initial_conditions")
    if not isinstance(ics, list):
        raise ProblemParseError("initial_conditions", "expected a list of numbers")
    ics = [_real(v, f"initial_conditions[{k}]") for k, v in enumerate(ics)]

    m = doc.get("m")
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ProblemParseError("m", f"expected a nonnegative integer, got {m!r}")

    try:
        return FdeProblem(
            gamma=gamma,
            lower_terms=tuple(terms),
            zero_order_coeff=zero,
            rhs=rhs,
            rhs_scale=scale,
            initial_conditions=tuple(ics),
            m=m,
            alpha=alpha,
        )
    except ValueError as exc:
        raise ProblemParseError("problem", str(exc)) from None


def load_problem(path) -> FdeProblem:
    text = Path(path).read_text()
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}" if mark is not None else "document"
        raise ProblemParseError(where, f"not valid YAML: {exc}") from None
    return parse_problem(doc)
