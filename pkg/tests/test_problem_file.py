from fractions import Fraction

import pytest
import yaml

from cflp import FracPoly, ProblemParseError
from cflp.problem_file import load_problem, parse_problem

from conftest import PROBLEMS

BASE = {
    "alpha": "1",
    "gamma": "2",
    "rhs": [{"exponent": "0", "coeff": 1}],
    "initial_conditions": [1, 1],
    "m": 2,
}


def doc(**changes):
    d = dict(BASE)
    d.update(changes)
    return {k: v for k, v in d.items() if v is not None}


def test_shipped_problems_load():
    p = load_problem(PROBLEMS / "variable_coeff.problem")
    assert p.gamma == Fraction(3, 2)
    assert [g for _, g in p.lower_terms] == [Fraction(1, 2), 1]
    assert p.lower_terms[0][0] == 3 * FracPoly.monomial(Fraction(1, 2))
    assert load_problem(PROBLEMS / "fractional_alpha.problem").alpha.value == Fraction(1, 2)


def test_builtin_rhs_and_scale():
    p = parse_problem(doc(rhs="cos", rhs_scale="1/2"))
    assert p.rhs_value(0.0) == 0.5


@pytest.mark.parametrize(
    "changes, field",
    [
        (dict(alpha="2/0"), "alpha"),
        (dict(alpha="3/2"), "alpha"),
        (dict(alpha=None), "alpha"),
        (dict(gamma="x"), "gamma"),
        (dict(rhs="tanh"), "rhs"),
        (dict(rhs=[{"exponent": "-1", "coeff": 1}]), "rhs[0].exponent"),
        (dict(rhs=[{"exponent": "1"}]), "rhs[0].coeff"),
        (dict(initial_conditions="1"), "initial_conditions"),
        (dict(initial_conditions=[1, "a"]), "initial_conditions[1]"),
        (dict(m=-1), "m"),
        (dict(m=True), "m"),
        (dict(terms=[{"order": "1/2"}]), "terms[0]"),
        (dict(terms="x"), "terms"),
        (dict(initial_conditions=[1]), "problem"),
        (dict(zero_order_coeff=True), "zero_order_coeff"),
    ],
)
def test_errors_name_the_field(changes, field):
    with pytest.raises(ProblemParseError) as exc:
        parse_problem(doc(**changes))
    assert exc.value.field == field


def test_not_a_mapping():
    with pytest.raises(ProblemParseError) as exc:
        parse_problem([1, 2])
    assert exc.value.field == "document"


def test_invalid_yaml(tmp_path):
    path = tmp_path / "p.problem"
    path.write_text("alpha: [1\n")
    with pytest.raises(ProblemParseError):
        load_problem(path)


def test_terms_are_sorted_by_order():
    p = parse_problem(doc(terms=[{"order": "3/2", "coeff": 1}, {"order": "1/2", "coeff": 2}]))
    assert [g for _, g in p.lower_terms] == [Fraction(1, 2), Fraction(3, 2)]


def test_yaml_roundtrip(tmp_path):
    path = tmp_path / "p.problem"
    path.write_text(yaml.safe_dump(doc(zero_order_coeff=[{"exponent": "1", "coeff": "1/3"}])))
    p = load_problem(path)
    assert p.zero_order_coeff == FracPoly.monomial(1, Fraction(1, 3))
