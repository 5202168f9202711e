import random
from fractions import Fraction

import pytest

from conftest import CASES, random_poly
from polygram.poly import AlphabetMismatch, MixedParityError, MultiPoly


def test_add_doubles():
    f, g = MultiPoly.variables("f g")
    assert f * g + f * g == 2 * f * g


def test_add_zero_identity():
    f, g = MultiPoly.variables("f g")
    p = f * g**2 + 4 * f**3
    assert p + MultiPoly.zero("f g") == p


def test_add_inverse_gives_empty_term_map():
    f, g = MultiPoly.variables("f g")
    p = f * g
    total = p + (-1) * p
    assert total.is_zero and total.terms == {}


def test_mul_examples():
    f, g = MultiPoly.variables("f g")
    assert f * g == MultiPoly("f g", {(1, 1): 1})
    u, v = MultiPoly.variables("u v")
    assert (u + v) * (u - v) == u**2 - v**2
    assert f * (f * g**2 + 4 * f**3) == f**2 * g**2 + 4 * f**4


def test_alphabet_mismatch():
    f, _ = MultiPoly.variables("f g")
    u, _ = MultiPoly.variables("u v")
    with pytest.raises(AlphabetMismatch):
        f + u
    with pytest.raises(AlphabetMismatch):
        f * u


def test_letter_validation():
    with pytest.raises(ValueError):
        MultiPoly.variables("2x y")
    with pytest.raises(ValueError):
        MultiPoly.variables("x x")
    with pytest.raises(ValueError):
        MultiPoly.variable("x y", "z")


def test_partial_derivative_examples():
    u, v = MultiPoly.variables("u v")
    assert (u**3 * v).partial_derivative("u") == 3 * u**2 * v
    assert (v**2).partial_derivative("u").is_zero
    assert (1 + u**2).partial_derivative("u") == 2 * u
    with pytest.raises(ValueError):
        u.partial_derivative("w")


def test_substitute_examples():
    f, g = MultiPoly.variables("f g")
    h = MultiPoly.variable("h", "h")
    res = (f * g).substitute("g", 2 * h)
    assert res.letters == ("f", "g", "h") and str(res) == "2*f*h"

    u, v = MultiPoly.variables("u v")
    x = MultiPoly.variable("x", "x")
    res = (u * v).substitute("v", x)
    assert res.letters == ("u", "v", "x") and str(res) == "u*x"


def test_substitute_identity_is_noop():
    f, g = MultiPoly.variables("f g")
    p = f * g**2 - 3 * f + 7
    assert p.substitute("f", f) == p


def test_substitute_square_with_parity_odd():
    f, g = MultiPoly.variables("f g")
    h = MultiPoly.variable("h", "h")
    parity, q = (f**3 * g**2).substitute_square_with_parity("f", 1 + h**2)
    assert parity == 1
    assert str(q) == "g^2 + g^2*h^2"


def test_substitute_square_with_parity_even():
    f, _ = MultiPoly.variables("f g")
    h = MultiPoly.variable("h", "h")
    parity, q = (f**2 + f**4).substitute_square_with_parity("f", 1 + h**2)
    assert parity == 0
    assert str(q) == "2 + 3*h^2 + h^4"


def test_substitute_square_mixed_parity_rejected():
    f, _ = MultiPoly.variables("f g")
    with pytest.raises(MixedParityError):
        (f + f**2).substitute_square_with_parity("f", 1)


def test_eval_rational():
    x, = MultiPoly.variables("x")
    assert (1 + 8 * x).eval_rational({"x": 1}) == 9
    assert MultiPoly.zero("x").eval_rational({}) == 0
    assert (1 + 72 * x + 80 * x**2).eval_rational({"x": 1}) == 153
    assert (x**2).eval_rational({"x": Fraction(1, 2)}) == Fraction(1, 4)
    with pytest.raises(ValueError):
        (x**2).eval_rational({})


def test_canonical_text_form():
    f, g = MultiPoly.variables("f g")
    assert str(f * g**2 + 4 * f**3) == "f*g^2 + 4*f^3"
    assert str(MultiPoly.zero("f g")) == "0"
    assert str(-f + 3) == "3 - f"
    assert str(-3 * f**2) == "-3*f^2"
    assert str(MultiPoly.const("f g", -7)) == "-7"


def test_json_roundtrip():
    f, g = MultiPoly.variables("f g")
    p = f * g**2 - 4 * f**3 + 12345678901234567890 * g
    data = p.to_json_dict()
    assert data["letters"] == ["f", "g"]
    assert all(isinstance(t["coeff"], str) for t in data["terms"])
    assert MultiPoly.from_json_dict(data) == p


def test_degree_and_support():
    f, g = MultiPoly.variables("f g")
    assert (f * g**2).degree() == 3
    assert MultiPoly.zero("f g").degree() == -1
    assert (f**2 + 1).support_letters() == ("f",)


def test_with_letters_cannot_drop_used():
    f, g = MultiPoly.variables("f g")
    with pytest.raises(ValueError):
        (f * g).with_letters("f")


def test_ring_axioms_random():
    rng = random.Random(20260810)
    letters = tuple("abcde")
    one = MultiPoly.const(letters, 1)
    for _ in range(CASES):
        a = random_poly(rng, letters)
        b = random_poly(rng, letters)
        c = random_poly(rng, letters)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == a
        assert a + 0 == a


def test_leibniz_rule_random():
    rng = random.Random(7)
    letters = ("u", "v", "w")
    for _ in range(CASES):
        a = random_poly(rng, letters)
        b = random_poly(rng, letters)
        x = rng.choice(letters)
        assert (a * b).partial_derivative(x) == \
            a * b.partial_derivative(x) + b * a.partial_derivative(x)


def test_substitute_identity_random():
    rng = random.Random(99)
    letters = ("f", "g", "h")
    for _ in range(CASES):
        p = random_poly(rng, letters)
        x = rng.choice(letters)
        assert p.substitute(x, MultiPoly.variable(letters, x)) == p
