import random

import pytest

from conftest import CASES, random_poly
from polygram.parser import ParseError, parse_grammar, parse_poly
from polygram.poly import MultiPoly


def test_parse_simple():
    f, g = MultiPoly.variables("f g")
    assert parse_poly("f*g^2 + 4*f^3", "f g") == f * g**2 + 4 * f**3


def test_parse_signs_and_parens():
    u, = MultiPoly.variables("u")
    assert parse_poly("-(u - 2)^2 + 3*u", "u") == -(u - 2)**2 + 3 * u
    assert parse_poly("- u + (+u)", "u").is_zero


def test_parse_infers_alphabet_in_order():
    p = parse_poly("y*x + x^2")
    assert p.letters == ("y", "x")


def test_whitespace_insignificant():
    assert parse_poly("u *  v\t+ 1", "u v") == parse_poly("u*v+1", "u v")


def test_unknown_letter_reported_with_position():
    with pytest.raises(ParseError) as err:
        parse_poly("u*w", "u v")
    assert "undeclared letter 'w'" in str(err.value)
    assert (err.value.line, err.value.col) == (1, 3)


def test_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_poly("u + * v", "u v")
    assert (err.value.line, err.value.col) == (1, 5)


def test_bad_exponent():
    with pytest.raises(ParseError):
        parse_poly("u^-2", "u")
    with pytest.raises(ParseError):
        parse_poly("u^v", "u v")


def test_trailing_garbage():
    with pytest.raises(ParseError):
        parse_poly("u u", "u")


def test_parse_grammar_g1():
    g = parse_grammar("u -> u*v; v -> 4*u^2")
    u, v = MultiPoly.variables("u v")
    assert g.letters == ("u", "v")
    assert g.rule("u") == u * v
    assert g.rule("v") == 4 * u**2


def test_parse_grammar_g2_newline_separated():
    g = parse_grammar("u -> u^2*v\nv -> 4*u^3\n")
    assert str(g) == "u -> u^2*v; v -> 4*u^3"


def test_parse_grammar_undeclared_letter():
    with pytest.raises(ParseError) as err:
        parse_grammar("u -> w")
    assert "undeclared letter 'w'" in str(err.value)


def test_parse_grammar_duplicate_rule():
    with pytest.raises(ParseError) as err:
        parse_grammar("u -> u; u -> u^2")
    assert "duplicate rule" in str(err.value)
    assert err.value.col == 9


def test_parse_grammar_forward_reference():
    g = parse_grammar("u -> v; v -> u")
    assert g.letters == ("u", "v")


def test_parse_grammar_missing_arrow():
    with pytest.raises(ParseError) as err:
        parse_grammar("u v")
    assert "'->'" in str(err.value)


def test_parse_grammar_empty():
    with pytest.raises(ParseError):
        parse_grammar("  \n ; \n")


def test_print_parse_roundtrip_random():
    rng = random.Random(4242)
    letters = ("a", "b", "c")
    for _ in range(CASES):
        p = random_poly(rng, letters)
        assert parse_poly(str(p), letters) == p
