import pytest

from JosephusFixed.Congruence import (BezoutPair, a1_closed_form, a2_closed_form, bezout_table_formula, crt_solve,
                                      extended_gcd_pow, same_lattice_class, verify_link, verify_links, xgcd)
from JosephusFixed.Errors import DomainError, InvariantViolation, UnsupportedCase, UsageError
from JosephusFixed.FixedPoints import generate_sequence


@pytest.fixture(scope="module")
def records():
    return generate_sequence(202)


@pytest.mark.parametrize("p, expected", [(7, 1093), (1, 1), (2, 4)])
def test_a1(p, expected):
    assert a1_closed_form(p) == expected


@pytest.mark.parametrize("q, expected", [(1, 0), (5, 10), (2, 2)])
def test_a2(q, expected):
    assert a2_closed_form(q) == expected


def test_closed_forms_solve_their_congruences():
    for p in range(1, 65):
        assert (2 * a1_closed_form(p) + 1) % 3**p == 0
    for q in range(1, 65):
        a2 = a2_closed_form(q)
        assert (3 * a2 + 2) % 2**q == 0
        assert 0 <= a2 < 2**q


def test_xgcd():
    g, s, t = xgcd(240, 46)
    assert g == 2 and 240 * s + 46 * t == 2


@pytest.mark.parametrize("p, q, x, y", [(7, 1, 1, -1093), (1, 5, 11, -1), (1, 1, 1, -1)])
def test_extended_gcd_pow(p, q, x, y):
    assert extended_gcd_pow(p, q) == BezoutPair(p, q, x, y)


def test_extended_gcd_pow_is_normalised():
    for p in range(1, 30):
        for q in range(1, 30):
            pair = extended_gcd_pow(p, q)
            assert 0 < pair.x < 2**q
            assert 3**p * pair.x + 2**q * pair.y == 1


@pytest.mark.parametrize("p, q, x, y", [(1, 5, 11, -1), (2, 2, 1, -2), (3, 4, 3, -5), (2, 5, -7, 2), (4, 5, -15, 38)])
def test_bezout_table_formula(p, q, x, y):
    assert bezout_table_formula(p, q) == BezoutPair(p, q, x, y)


def test_bezout_table_against_euclid():
    for q in range(1, 6):
        for p in range(1, 65):
            tabulated = bezout_table_formula(p, q)
            assert 3**p * tabulated.x + 2**q * tabulated.y == 1
            assert (tabulated.x - extended_gcd_pow(p, q).x) % 2**q == 0
            assert same_lattice_class(tabulated, extended_gcd_pow(p, q))


def test_bezout_table_unsupported():
    with pytest.raises(UnsupportedCase):
        bezout_table_formula(3, 6)


def test_bezout_pair_checks_identity():
    with pytest.raises(InvariantViolation):
        BezoutPair(1, 1, 1, 1)


def test_domain():
    with pytest.raises(DomainError):
        crt_solve(0, 3)
    with pytest.raises(DomainError):
        a2_closed_form(0)


def test_crt_worked_examples():
    link = crt_solve(7, 1)
    assert (link.a1, link.a2, link.bezout.x, link.bezout.y) == (1093, 0, 1, -1093)
    assert (link.raw_z, link.z, link.modulus) == (-2389298, 3280, 4374)
    link = crt_solve(1, 5)
    assert (link.a1, link.a2, link.bezout.x, link.bezout.y) == (1, 10, 11, -1)
    assert (link.raw_z, link.z, link.modulus) == (298, 10, 96)
    link = crt_solve(1, 1)
    assert (link.z, link.modulus) == (4, 6)


def test_crt_unique_solution():
    for p in range(1, 21):
        for q in range(1, 21):
            link = crt_solve(p, q)
            assert link.z % 3**p == link.a1 % 3**p and link.z % 2**q == link.a2
            if link.modulus <= 10**6:
                solutions = [z for z in range(link.a2, link.modulus, 2**q) if z % 3**p == link.a1]
                assert solutions == [link.z]


def test_verify_link_worked_examples(records):
    report = verify_link(17, records)
    assert report.passed and report.quotient == 23356 and report.n == 102162424
    assert report.as_json() == {"ell": 17, "p": 7, "q": 1, "a1": "1093", "a2": "0", "z": "3280",
                                "modulus": "4374", "pass": True, "quotient": "23356"}
    report = verify_link(13, records)
    assert (report.p, report.q, report.quotient) == (1, 5, 1080) and report.passed


def test_verify_link_skips_when_pq_is_zero(records):
    report = verify_link(1, records)
    assert not report.applicable and not report.passed
    assert report.as_json() == {"ell": 1, "p": 0, "q": 3, "skipped": True}


def test_verify_link_needs_records():
    with pytest.raises(UsageError):
        verify_link(5, generate_sequence(6))


def test_all_links_pass(records):
    reports = verify_links(records, 200)
    applicable = [report for report in reports if report.applicable]
    assert applicable
    assert all(report.passed for report in applicable)
    assert [report.ell for report in reports[:20] if report.applicable] == [4, 7, 8, 11, 12, 13, 16, 17]
