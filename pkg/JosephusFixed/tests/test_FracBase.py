from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis.strategies import integers, sampled_from

from JosephusFixed.Errors import DomainError, InvalidExpansion
from JosephusFixed.FracBase import (BASE_2_1, BASE_3_2, Expansion, append_suffix, check_partial_sum_identity,
                                    decode, digit_bound, encode, encode_steps, evaluate, format_base, format_digits,
                                    parse_base, parse_digits, theorem_suffix, theorem_trace)

BASES = [(3, 2), (2, 1), (4, 3), (5, 3)]


@pytest.mark.parametrize("n, base, digits", [
    (13, BASE_3_2, "210112"),
    (0, BASE_3_2, "0"),
    (4, BASE_3_2, "212"),
    (1, BASE_3_2, "2"),
    (2, BASE_3_2, "21"),
    (103690, BASE_3_2, "2101121020121020201210201202"),
    (7, BASE_2_1, "111"),
])
def test_encode_examples(n, base, digits):
    assert str(encode(n, base)) == digits


@pytest.mark.parametrize("digits, n", [("21", 2), ("2", 1), ("0", 0), ("210112", 13)])
def test_decode_examples(digits, n):
    assert decode(Expansion.parse(digits, BASE_3_2)) == n


@pytest.mark.parametrize("digits, position", [("22", 1), ("0112", 0), ("23", 1), ("1", 0)])
def test_decode_rejects(digits, position):
    with pytest.raises(InvalidExpansion) as error:
        decode(Expansion.parse(digits, BASE_3_2))
    assert error.value.position == position
    assert error.value.digits == digits


def test_parse_rejects_non_digits():
    with pytest.raises(InvalidExpansion) as error:
        parse_digits("21x", 3)
    assert error.value.position == 2
    with pytest.raises(InvalidExpansion):
        parse_digits("", 3)


@pytest.mark.parametrize("digits, position", [("2²", 1), ("٢١", 0), ("2１", 1), ("21१", 2)])
def test_parse_rejects_non_ascii_digits(digits, position):
    with pytest.raises(InvalidExpansion) as error:
        decode(Expansion.parse(digits, BASE_3_2))
    assert error.value.position == position


def test_base_text():
    assert parse_base("3/2") == BASE_3_2
    assert parse_base(" 2 ") == BASE_2_1
    assert format_base(parse_base("11/10")) == "11/10"
    for text in ["", "3/", "x/2", "4/2", "2/3"]:
        with pytest.raises(DomainError):
            parse_base(text)


@pytest.mark.parametrize("base", [(2, 2), (2, 3), (4, 2), (6, 4), (3, 0)])
def test_invalid_base(base):
    with pytest.raises(DomainError):
        encode(5, base)


def test_negative_rejected():
    with pytest.raises(DomainError):
        encode(-1)


@pytest.mark.parametrize("base", BASES)
def test_round_trip_and_canonicity(base):
    a, _ = base
    for n in range(0, 10**4 + 1):
        expansion = encode(n, base)
        assert all(0 <= d < a for d in expansion.digits)
        assert len(expansion) == 1 or expansion.digits[0] != 0
        assert decode(expansion) == n
        assert encode(decode(expansion), base) == expansion


@pytest.mark.slow
@pytest.mark.parametrize("base", BASES)
def test_round_trip_exhaustive(base):
    for n in range(0, 10**5 + 1):
        expansion = encode(n, base)
        assert decode(expansion) == n
        assert encode(decode(expansion), base) == expansion


@given(integers(0, 10**60), sampled_from(BASES))
def test_round_trip_big(n, base):
    assert decode(encode(n, base)) == n


def test_base_two_is_binary():
    for n in range(1, 10**4 + 1):
        assert str(encode(n, BASE_2_1)) == format(n, "b")


@given(integers(0, 10**30), sampled_from(BASES))
def test_evaluate_matches_decode(n, base):
    expansion = encode(n, base)
    assert evaluate(expansion) == Fraction(n)


def test_evaluate_non_canonical_string_is_not_integral():
    assert evaluate(Expansion.parse("22")) == Fraction(5, 2)


@given(integers(0, 10**30), sampled_from(BASES))
def test_partial_sum_identity(n, base):
    assert check_partial_sum_identity(n, base)


def test_encode_steps_trace():
    # 2*13 = 3*8 + 2, 2*8 = 3*5 + 1, ...
    assert encode_steps(13) == [(13, 2), (8, 1), (5, 1), (3, 0), (2, 1), (1, 2)]
    assert encode_steps(0) == [(0, 0)]


@given(integers(0, 10**40), sampled_from(BASES))
def test_digit_bound(n, base):
    assert len(encode(n, base)) <= digit_bound(n, base)


def test_digit_bound_values():
    assert digit_bound(0) == 1
    assert digit_bound(1) == 3


@pytest.mark.parametrize("m, suffix", [(0, [1]), (1, [0, 2]), (2, [0, 1, 2]), (3, [0, 1, 1, 2]), (7, [0, 1, 1, 1, 1, 1, 1, 2])])
def test_theorem_suffix(m, suffix):
    assert theorem_suffix(m) == suffix
    assert len(theorem_suffix(m)) == m + 1


def test_theorem_suffix_rejects_negative():
    with pytest.raises(DomainError):
        theorem_suffix(-1)


@pytest.mark.parametrize("digits, m, expected", [
    ("2", 0, "21"),
    ("21", 3, "210112"),
    ("21011210201210202012102", 2, "21011210201210202012102012"),
])
def test_append_suffix(digits, m, expected):
    assert str(append_suffix(Expansion.parse(digits), m)) == expected


def test_theorem_trace():
    # 3*2 + 2 = 8 = 2^3
    assert theorem_trace(2, 3) == [1, 2, 4, 8]
    assert theorem_trace(1, 0) == [5]


def test_format_wide_base():
    assert format_digits([10, 0, 3], 11) == "10,0,3"
    assert parse_digits("10,0,3", 11) == (10, 0, 3)
    expansion = encode(1000, (11, 10))
    assert decode(Expansion.parse(str(expansion), (11, 10))) == 1000
