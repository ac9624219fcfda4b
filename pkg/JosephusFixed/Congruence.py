"""
Chinese Remainder Theorem view of consecutive fixed points of J_3.

With p = m_bar(n^(l)) and q = m_bar(n^(l+1)), the fixed point n^(l+1) solves

    x == a1 (mod 3^p),   a1 = (3^p - 1) / 2,
    x == a2 (mod 2^q),   a2 = (2/3)(2^q - 1) or (2/3)(2^(q-1) - 1),

whose solution modulo 3^p 2^q is z = a1 2^q y + a2 3^p x for any Bezout pair
3^p x + 2^q y = 1.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .Errors import DomainError, InvariantViolation, UnsupportedCase, UsageError
from .FixedPoints import FixedPointRecord, check_congruence_conditions
from .Logger import Logger


@dataclass(frozen=True)
class BezoutPair:
    """
    Coefficients with 3^p x + 2^q y = 1.
    """
    p: int
    q: int
    x: int
    y: int

    def __post_init__(self):
        if 3**self.p * self.x + 2**self.q * self.y != 1:
            raise InvariantViolation(f"3^{self.p}*{self.x} + 2^{self.q}*{self.y} != 1")


@dataclass(frozen=True)
class CongruenceLink:
    """
    Everything needed to solve the pair of congruences for given p and q.

    Attributes:
    - p, q (int): Exponents of the moduli 3^p and 2^q.
    - a1 (int): Residue modulo 3^p.
    - a2 (int): Residue modulo 2^q.
    - bezout (BezoutPair): The pair used to build z.
    - raw_z (int): a1 2^q y + a2 3^p x before reduction (may be negative).
    - z (int): raw_z reduced into [0, modulus).
    - modulus (int): 3^p 2^q.
    """
    p: int
    q: int
    a1: int
    a2: int
    bezout: BezoutPair
    raw_z: int
    z: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.z < self.modulus:
            raise InvariantViolation(f"z = {self.z} is not reduced modulo {self.modulus}")
        if self.z % 3**self.p != self.a1 % 3**self.p or self.z % 2**self.q != self.a2 % 2**self.q:
            raise InvariantViolation(f"z = {self.z} does not solve the system for p={self.p}, q={self.q}")


@dataclass(frozen=True)
class LinkReport:
    """
    Outcome of checking one fixed point against its congruence system.

    Attributes:
    - ell (int): Index l; the checked value is n^(l+1).
    - p, q (int): m_bar(n^(l)) and m_bar(n^(l+1)).
    - n (int): n^(l+1).
    - applicable (bool): False when p*q = 0, where the system says nothing.
    - link (CongruenceLink, optional): The solved system (None when not applicable).
    - checks (Dict[str, bool]): Named check outcomes.
    - quotient (int, optional): (n - z) / modulus when it is an integer.
    """
    ell: int
    p: int
    q: int
    n: int
    applicable: bool
    link: Optional[CongruenceLink] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    quotient: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.applicable and all(self.checks.values())

    def as_json(self) -> Dict[str, object]:
        """
        JSON-ready dict. Small indices stay numbers, every potentially large
        value is a decimal string.
        """
        if not self.applicable:
            return {"ell": self.ell, "p": self.p, "q": self.q, "skipped": True}
        return {
            "ell": self.ell,
            "p": self.p,
            "q": self.q,
            "a1": str(self.link.a1),
            "a2": str(self.link.a2),
            "z": str(self.link.z),
            "modulus": str(self.link.modulus),
            "pass": self.passed,
            "quotient": None if self.quotient is None else str(self.quotient),
        }


def _check_exponent(name: str, value: int):
    if value < 1:
        raise DomainError(f"{name} must be >= 1, got {value}")


def a1_closed_form(p: int) -> int:
    """
    (3^p - 1) / 2, the residue with 2 a1 + 1 == 0 (mod 3^p).
    """
    _check_exponent("p", p)
    return (3**p - 1) // 2


def a2_closed_form(q: int) -> int:
    """
    The residue with 3 a2 + 2 == 0 (mod 2^q):
    (2/3)(2^q - 1) for even q, (2/3)(2^(q-1) - 1) for odd q.
    """
    _check_exponent("q", q)
    if q % 2 == 0:
        return 2 * (2**q - 1) // 3
    return 2 * (2**(q - 1) - 1) // 3


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclidean algorithm.

    Args:
    - a (int), b (int): Non-negative integers, not both zero.

    Returns:
    - Tuple[int, int, int]: (g, s, t) with a s + b t = g = gcd(a, b).
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    return old_r, old_s, old_t


def extended_gcd_pow(p: int, q: int) -> BezoutPair:
    """
    Bezout pair for 3^p and 2^q from the extended Euclidean algorithm,
    normalised so that 0 < x < 2^q.

    Args:
    - p (int): p >= 1.
    - q (int): q >= 1.

    Returns:
    - BezoutPair: The normalised pair.
    """
    _check_exponent("p", p)
    _check_exponent("q", q)
    three, two = 3**p, 2**q
    g, x, _ = xgcd(three, two)
    if g != 1:
        raise InvariantViolation(f"gcd(3^{p}, 2^{q}) = {g}")
    x %= two
    y, remainder = divmod(1 - three * x, two)
    if remainder:
        raise InvariantViolation(f"inexact Bezout coefficient for p={p}, q={q}")
    return BezoutPair(p, q, x, y)


# q -> (period of p, {p mod period: (x, numerator of y as a function of 3^p)})
# y = numerator / 2^q, exactly as tabulated.
BEZOUT_TABLE = {
    1: (1, {0: (1, lambda t: 1 - t)}),
    2: (2, {0: (1, lambda t: 1 - t),
            1: (-1, lambda t: 1 + t)}),
    3: (2, {0: (1, lambda t: 1 - t),
            1: (3, lambda t: 1 - 3 * t)}),
    4: (4, {0: (1, lambda t: 1 - t),
            1: (-5, lambda t: 1 + 5 * t),
            2: (-7, lambda t: 1 + 7 * t),
            3: (3, lambda t: 1 - 3 * t)}),
    5: (8, {0: (1, lambda t: 1 - t),
            1: (11, lambda t: 1 - 11 * t),
            2: (-7, lambda t: 1 + 7 * t),
            3: (-13, lambda t: 1 + 13 * t),
            4: (-15, lambda t: 1 + 15 * t),
            5: (-5, lambda t: 1 + 5 * t),
            6: (9, lambda t: 1 - 9 * t),
            7: (3, lambda t: 1 - 3 * t)}),
}


def bezout_table_formula(p: int, q: int) -> BezoutPair:
    """
    Bezout pair from the closed-form case analysis for q = 1..5
    (the case is chosen by p mod 2, 4 or 8).

    Args:
    - p (int): p >= 1.
    - q (int): 1 <= q <= 5.

    Returns:
    - BezoutPair: The tabulated pair; x may be negative.

    Raises:
    - UnsupportedCase: If q is outside 1..5.
    """
    _check_exponent("p", p)
    if q not in BEZOUT_TABLE:
        raise UnsupportedCase(f"closed forms are tabulated for q = 1..5 only, got q = {q}")
    period, cases = BEZOUT_TABLE[q]
    x, numerator = cases[p % period]
    y, remainder = divmod(numerator(3**p), 2**q)
    if remainder:
        raise InvariantViolation(f"table entry for p={p}, q={q} is not integral")
    return BezoutPair(p, q, x, y)


def same_lattice_class(first: BezoutPair, second: BezoutPair) -> bool:
    """
    True if the two pairs differ by an integer multiple of (2^q, -3^p).
    """
    if (first.p, first.q) != (second.p, second.q):
        return False
    steps, remainder = divmod(first.x - second.x, 2**first.q)
    return remainder == 0 and first.y - second.y == -steps * 3**first.p


def crt_solve(p: int, q: int) -> CongruenceLink:
    """
    Solve x == a1(p) (mod 3^p), x == a2(q) (mod 2^q).

    Args:
    - p (int): p >= 1.
    - q (int): q >= 1.

    Returns:
    - CongruenceLink: Residues, Bezout pair, raw and reduced z, modulus.
    """
    a1 = a1_closed_form(p)
    a2 = a2_closed_form(q)
    bezout = extended_gcd_pow(p, q)
    modulus = 3**p * 2**q
    raw_z = a1 * 2**q * bezout.y + a2 * 3**p * bezout.x
    return CongruenceLink(p, q, a1, a2, bezout, raw_z, raw_z % modulus, modulus)


def verify_link(ell: int, seq: Sequence[FixedPointRecord]) -> LinkReport:
    """
    Check n^(l+1) against the system built from p = m_bar_l and q = m_bar_(l+1).

    Checks, when p*q >= 1:
    - residue_a1: n^(l+1) == a1 (mod 3^p)
    - residue_a2: n^(l+1) == a2 (mod 2^q)
    - residue_z: n^(l+1) == z (mod 3^p 2^q)
    - successor_system: 2 n^(l+2) + 1 == 0 (mod 3^q) and 3 n^(l+1) + 2 == 0 (mod 2^q)

    Args:
    - ell (int): Index l >= 1.
    - seq (Sequence[FixedPointRecord]): Records containing l, l+1 and l+2.

    Returns:
    - LinkReport: The outcome; not applicable when p*q = 0.

    Raises:
    - UsageError: If one of the three records is missing.
    """
    by_ell = {record.ell: record for record in seq}
    missing = [index for index in (ell, ell + 1, ell + 2) if index not in by_ell]
    if missing:
        raise UsageError(f"verify_link({ell}) needs records {missing} which are not in the sequence")
    current, middle, after = by_ell[ell], by_ell[ell + 1], by_ell[ell + 2]
    p, q, n = current.m_bar, middle.m_bar, middle.n
    if p * q == 0:
        Logger.debug(f"link l={ell} skipped (p={p}, q={q})")
        return LinkReport(ell, p, q, n, applicable=False)
    link = crt_solve(p, q)
    checks = {
        "residue_a1": (n - link.a1) % 3**p == 0,
        "residue_a2": (n - link.a2) % 2**q == 0,
        "residue_z": (n - link.z) % link.modulus == 0,
        "successor_system": check_congruence_conditions(n, after.n),
    }
    quotient = (n - link.z) // link.modulus if checks["residue_z"] else None
    return LinkReport(ell, p, q, n, True, link, checks, quotient)


def verify_links(seq: Sequence[FixedPointRecord], ell_max: int) -> List[LinkReport]:
    """
    verify_link for every l = 1..ell_max.
    """
    return [verify_link(ell, seq) for ell in range(1, ell_max + 1)]
