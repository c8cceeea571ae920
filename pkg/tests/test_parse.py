from fractions import Fraction as F

import pytest

from rht.grade import GradedAlgebra
from rht.models import chevalley_eilenberg, vn
from rht.parse import (ElementParseError, OddPower, UnknownGenerator, format_rational,
                       parse_element, parse_rational)

A = GradedAlgebra.of(("x1", 1), ("x2", 1), ("x3", 1), ("x4", 1), ("a", 2), ("y", 3))


def test_monomial():
    u = parse_element("x1*x2", A)
    assert len(u.terms) == 1 and u.degree == 2


def test_omega4_text():
    D = chevalley_eilenberg(vn(4))
    u = parse_element("3*x1*x4 + x2*x3", D.algebra)
    assert str(u) == "3*x1*x4 + x2*x3"


def test_grammar_example():
    u = parse_element("3*x1*x2 - 1/2*a^2*y", A)
    assert u.degree is None
    assert {t.degree for t in (parse_element("3*x1*x2", A), parse_element("a^2*y", A))} == {2, 7}
    assert sorted(u.terms.values()) == [F(-1, 2), F(3)]


def test_odd_power_rejected():
    with pytest.raises(OddPower) as exc:
        parse_element("x1^2", A)
    assert (exc.value.line, exc.value.column) == (1, 1)
    assert isinstance(exc.value, SyntaxError)


def test_unknown_generator_position():
    with pytest.raises(UnknownGenerator) as exc:
        parse_element("x1 + zz", A)
    assert exc.value.column == 6


@pytest.mark.parametrize("text", ["", "x1 +", "3*/x1", "(x1", "x1^", "1/0"])
def test_syntax_errors(text):
    with pytest.raises(ElementParseError):
        parse_element(text, A)


def test_rationals():
    assert parse_rational("-3/6") == F(-1, 2)
    assert format_rational(F(-1, 2)) == "-1/2"
    assert format_rational(F(4)) == "4"
