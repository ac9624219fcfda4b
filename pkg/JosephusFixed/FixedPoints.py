"""
The fixed points n^(1) = 1, n^(2) = 2, n^(3) = 13, ... of J_3, generated by

    n^(l+1) = (3^m (3 n^(l) + 2) - 2^m) / 2^(m+1),   m = v_2(3 n^(l) + 2),

over Python's arbitrary-precision integers.
"""
from dataclasses import dataclass
from itertools import count as counter, islice
from typing import Dict, Iterator, List

from .Errors import DomainError, InvariantViolation
from .FracBase import BASE_2_1, BASE_3_2, Expansion, encode, format_base, parse_base
from .Josephus import j2_fixed_point
from .Logger import Logger

FIXED_POINT_CHECK_BOUND = 10**7
EXTENDED_CHECK_BOUND = 2 * 10**8


@dataclass(frozen=True)
class FixedPointRecord:
    """
    One row of the fixed-point table.

    Attributes:
    - ell (int): Index l >= 1.
    - n (int): The fixed point n^(l).
    - m_bar (int): v_2(3n + 2) (0 for every J_2 row).
    - expansion (Expansion): Expansion of n (base 3/2 for J_3, base 2/1 for J_2).
    """
    ell: int
    n: int
    m_bar: int
    expansion: Expansion

    def as_row(self) -> Dict[str, object]:
        """
        Serialize for the CLI streams. n and the expansion are strings so that
        big values survive any JSON consumer; the small indices stay ints.

        Returns:
        - Dict[str, object]: Keys ell, n, m_bar, expansion, base ("a/b").
        """
        return {
            "ell": self.ell,
            "n": str(self.n),
            "m_bar": self.m_bar,
            "expansion": str(self.expansion),
            "base": format_base(self.expansion.base),
        }

    @staticmethod
    def from_row(row: Dict[str, object], base=BASE_3_2) -> 'FixedPointRecord':
        """
        Rebuild a record from a dict produced by as_row (or its JSON/CSV form).

        Args:
        - row (Dict[str, object]): Values as strings or ints.
        - base (Tuple[int, int], optional): Base of the expansion column when the row has
          no "base" key (default 3/2).

        Returns:
        - FixedPointRecord: The record; the expansion is parsed, not recomputed.

        Raises:
        - DomainError: If the "base" value is not a usable base.
        """
        if row.get("base"):
            base = parse_base(str(row["base"]))
        return FixedPointRecord(
            ell=int(row["ell"]),
            n=int(row["n"]),
            m_bar=int(row["m_bar"]),
            expansion=Expansion.parse(str(row["expansion"]), base),
        )


def valuation2(x: int) -> int:
    """
    2-adic valuation of x, the largest m with 2^m | x.

    Args:
    - x (int): x >= 1.

    Returns:
    - int: The exponent.

    Raises:
    - DomainError: If x <= 0 (the valuation of 0 is infinite).
    """
    if x < 1:
        raise DomainError(f"valuation2 needs x >= 1, got {x}")
    # lowest set bit
    return (x & -x).bit_length() - 1


def m_bar(n: int) -> int:
    """
    v_2(3n + 2).
    """
    if n < 1:
        raise DomainError(f"m_bar needs n >= 1, got {n}")
    return valuation2(3 * n + 2)


def next_fixed_point(n: int) -> int:
    """
    Successor of n in the fixed-point sequence.

    Args:
    - n (int): A fixed point of J_3 (the formula is total on n >= 1).

    Returns:
    - int: (3^m (3n + 2) - 2^m) / 2^(m+1) with m = m_bar(n).

    Raises:
    - DomainError: If n < 1.
    - InvariantViolation: If the division is not exact or the result breaks
      2^m (2 result + 1) = 3^m (3n + 2).
    """
    m = m_bar(n)
    numerator = 3**m * (3 * n + 2) - 2**m
    successor, remainder = divmod(numerator, 2**(m + 1))
    if remainder:
        raise InvariantViolation(f"inexact division computing the successor of {n}")
    if not check_eq2_identity(n, successor):
        raise InvariantViolation(f"successor {successor} of {n} breaks 2^m (2n' + 1) = 3^m (3n + 2)")
    return successor


def check_eq2_identity(n: int, n_next: int) -> bool:
    """
    2^m (2 n_next + 1) == 3^m (3n + 2), m = m_bar(n).
    """
    m = m_bar(n)
    return 2**m * (2 * n_next + 1) == 3**m * (3 * n + 2)


def check_eq7_identity(n: int, n_next: int) -> bool:
    """
    n_next = (3/2)^(m+1) n + (3/2)^m - 1/2 in integer form:
    2^(m+1) n_next == 3^(m+1) n + 2 * 3^m - 2^m, m = m_bar(n).
    """
    m = m_bar(n)
    return 2**(m + 1) * n_next == 3**(m + 1) * n + 2 * 3**m - 2**m


def check_congruence_conditions(n: int, n_next: int) -> bool:
    """
    The pair of congruences every consecutive pair satisfies:
    2 n_next + 1 == 0 (mod 3^m) and 3n + 2 == 0 (mod 2^m), m = m_bar(n).
    """
    m = m_bar(n)
    return (2 * n_next + 1) % 3**m == 0 and (3 * n + 2) % 2**m == 0


def iter_sequence() -> Iterator[FixedPointRecord]:
    """
    Endless stream of records, each computed from its predecessor, starting at n^(1) = 1.

    Yields:
    - FixedPointRecord: Rows l = 1, 2, 3, ... with base 3/2 expansions.
    """
    n = 1
    for ell in counter(1):
        m = m_bar(n)
        yield FixedPointRecord(ell, n, m, encode(n, BASE_3_2))
        n = next_fixed_point(n)


def generate_sequence(count: int) -> List[FixedPointRecord]:
    """
    The first count rows of the J_3 fixed-point table.

    Args:
    - count (int): Number of rows, count >= 1.

    Returns:
    - List[FixedPointRecord]: Rows l = 1..count.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    Logger.debug(f"generating {count} fixed points of J_3")
    return list(islice(iter_sequence(), count))


def generate_j2_sequence(count: int) -> List[FixedPointRecord]:
    """
    The first count fixed points 2^l - 1 of J_2 with their binary expansions.
    Their m_bar column is 0 throughout: each step appends a single 1.

    Args:
    - count (int): Number of rows, count >= 1.

    Returns:
    - List[FixedPointRecord]: Rows l = 1..count.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    return [FixedPointRecord(ell, j2_fixed_point(ell), 0, encode(j2_fixed_point(ell), BASE_2_1))
            for ell in range(1, count + 1)]
