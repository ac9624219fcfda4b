from dataclasses import dataclass
from typing import List

from .Errors import DomainError
from .Logger import Logger

SIMULATE_MAX_N = 10**6
RECURRENCE_MAX_N = 2 * 10**8


class Methods:
    """
    Names of the survivor computations the CLI can select.
    """
    SIM = "sim"
    RECURRENCE = "recurrence"
    ROTATE2 = "rotate2"
    ALL = (SIM, RECURRENCE, ROTATE2)


@dataclass(frozen=True)
class SurvivorQuery:
    """
    A circle of n people numbered 1..n where every k-th remaining person is eliminated.

    Attributes:
    - n (int): Number of people, n >= 1.
    - k (int): Elimination step, k >= 2.
    """
    n: int
    k: int

    def __post_init__(self):
        _check_domain(self.n, self.k)


def _check_domain(n: int, k: int, bound: int = None):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if bound is not None and n > bound:
        raise DomainError(f"n = {n} exceeds the supported bound {bound}")


def elimination_order(n: int, k: int) -> List[int]:
    """
    Eliminate every k-th person of the circle 1..n and record who leaves, in order.

    Counting starts at seat 1 as "count 1"; after an elimination the next seat
    clockwise is "count 1" of the following round. The circle is an explicit
    successor ring, so the cost is O(n*k).

    Args:
    - n (int): Number of people, 1 <= n <= SIMULATE_MAX_N.
    - k (int): Elimination step, k >= 2.

    Returns:
    - List[int]: Seats in elimination order; the last one is the survivor.

    Raises:
    - DomainError: If n or k is out of range.
    """
    _check_domain(n, k, SIMULATE_MAX_N)
    # successor[s] is the next living seat clockwise from s (1-based, index 0 unused)
    successor = list(range(1, n + 2))
    successor[n] = 1
    order = []
    previous = n
    for _ in range(n - 1):
        for _ in range(k - 1):
            previous = successor[previous]
        victim = successor[previous]
        order.append(victim)
        successor[previous] = successor[victim]
    order.append(successor[previous])
    return order


def survivor_simulate(n: int, k: int) -> int:
    """
    Survivor seat J_k(n) by direct simulation of the circle.

    Args:
    - n (int): Number of people, 1 <= n <= SIMULATE_MAX_N.
    - k (int): Elimination step, k >= 2.

    Returns:
    - int: 1-based seat of the last person standing.
    """
    return elimination_order(n, k)[-1]


def survivor_recurrence(n: int, k: int) -> int:
    """
    Survivor seat J_k(n) through the classic recurrence
    J(1) = 0, J(i) = (J(i-1) + k) mod i, shifted to 1-based seats.

    O(n) time and O(1) space.

    Args:
    - n (int): Number of people, 1 <= n <= RECURRENCE_MAX_N.
    - k (int): Elimination step, k >= 2.

    Returns:
    - int: 1-based seat of the survivor.

    Raises:
    - DomainError: If n or k is out of range.
    """
    _check_domain(n, k, RECURRENCE_MAX_N)
    position = 0
    for size in range(2, n + 1):
        position = (position + k) % size
    return position + 1


def j2_rotate(n: int) -> int:
    """
    J_2(n) from the binary digits of n: move the leading 1 to the least
    significant end. Powers of two rotate to 1.

    Args:
    - n (int): Any positive integer (no size bound).

    Returns:
    - int: J_2(n).

    Raises:
    - DomainError: If n < 1.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    top = 1 << (n.bit_length() - 1)
    return ((n - top) << 1) | 1


def is_fixed_point(n: int, k: int) -> bool:
    """
    Check whether J_k(n) = n using the recurrence oracle.

    Args:
    - n (int): Number of people, 1 <= n <= RECURRENCE_MAX_N.
    - k (int): Elimination step, k >= 2.

    Returns:
    - bool: True if n survives its own circle.
    """
    return survivor_recurrence(n, k) == n


def j2_fixed_point(ell: int) -> int:
    """
    The ell-th fixed point of J_2, 2^ell - 1.

    Args:
    - ell (int): Index, ell >= 1.

    Returns:
    - int: 2^ell - 1.
    """
    if ell < 1:
        raise DomainError(f"ell must be >= 1, got {ell}")
    return (1 << ell) - 1


def survivor(query: SurvivorQuery, method: str = Methods.RECURRENCE) -> int:
    """
    Dispatch a survivor query to one of the three computations.

    Args:
    - query (SurvivorQuery): The circle to solve.
    - method (str): One of Methods.ALL (default "recurrence").

    Returns:
    - int: The survivor seat.

    Raises:
    - DomainError: If method is unknown, or "rotate2" is used with k != 2.
    """
    Logger.debug(f"survivor n={query.n} k={query.k} method={method}")
    if method == Methods.SIM:
        return survivor_simulate(query.n, query.k)
    elif method == Methods.RECURRENCE:
        return survivor_recurrence(query.n, query.k)
    elif method == Methods.ROTATE2:
        if query.k != 2:
            raise DomainError(f"method rotate2 requires k = 2, got k = {query.k}")
        return j2_rotate(query.n)
    else:
        raise DomainError(f"unknown method {method!r}")
