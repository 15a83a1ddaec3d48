from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import agree_to
from volkenborn.functions import evaluate
from volkenborn.padic import PrecisionContext
from volkenborn.parsing import ParseError, parse_function, parse_pair, parse_scalar


class TestScalar:
    @pytest.mark.parametrize(
        "text,want",
        [
            ("1+1*3^2", 10),
            ("1+3^4", 82),
            ("1/2 - 3/4*5^3", Fraction(1, 2) - Fraction(375, 4)),
            ("-7", -7),
            ("1+1*3", 4),
            ("2*5^0", 2),
        ],
    )
    def test_values(self, text, want):
        assert parse_scalar(text) == want

    @pytest.mark.parametrize("text", ["", "1+", "a", "1/0", "3^", "1**2", "1+-"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_scalar(text)

    @given(st.integers(0, 10**6), st.integers(1, 99), st.integers(0, 6))
    def test_round_trip(self, a, b, k):
        assert parse_scalar(f"{a}/{b}*3^{k}") == Fraction(a, b) * 3**k


class TestFunction:
    ctx = PrecisionContext(3)

    def at(self, text, x):
        return evaluate(parse_function(text, 3), x, self.ctx).to_fraction()

    def test_polynomial(self):
        assert self.at("poly:1,0,2", 4) == 33

    def test_constant(self):
        v = evaluate(parse_function("5/2", 3), 7, self.ctx)
        assert agree_to(v, Fraction(5, 2), 3) >= 30

    def test_indicator(self):
        assert self.at("ind:1,1", 4) == 1
        assert self.at("ind:1,1", 3) == 0

    def test_expweight(self):
        assert self.at("expw:4", 3) == 64
        assert self.at("expw:[1+3^2]", 2) == 100

    def test_combinations(self):
        # 2 (x + [x = 0 mod 3]) + x^2 at x = 3
        assert self.at("2*(poly:0,1+ind:0,1)+poly:0,0,1", 3) == 2 * (3 + 1) + 9

    def test_product(self):
        assert self.at("poly:0,1*expw:4", 2) == 2 * 16

    @pytest.mark.parametrize("text", ["", "poly:", "(poly:1", "foo:1", "ind:1", "ind:5,1", "poly:1)"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_function(text, 3)

    def test_empty_coefficients_message(self):
        with pytest.raises(ParseError, match="empty coefficient list"):
            parse_function("poly:", 3)


def test_pair():
    assert parse_pair("0,2") == (0, 2)
    with pytest.raises(ParseError):
        parse_pair("0")
