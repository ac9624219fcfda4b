"""
Modular fractional-base numeration.

A natural number N is written in base a/b (1 <= b < a, gcd(a, b) = 1) as

    N = (1/b) * [d_k (a/b)^k + ... + d_1 (a/b) + d_0],   d_i in {0, ..., a-1},

with digits produced by the recursion b*N_i = a*N_(i+1) + d_i, d_i = (b*N_i) mod a,
until N_(i+1) = 0. Base 3/2 is the case of interest; base 2/1 is plain binary.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .Errors import DomainError, InvalidExpansion, InvariantViolation

BASE_3_2 = (3, 2)
BASE_2_1 = (2, 1)


def validate_base(base: Tuple[int, int]) -> Tuple[int, int]:
    """
    Check that (a, b) is a usable base.

    Args:
    - base (Tuple[int, int]): Numerator a and denominator b.

    Returns:
    - Tuple[int, int]: The same pair.

    Raises:
    - DomainError: Unless 1 <= b < a and gcd(a, b) = 1.
    """
    a, b = base
    if not 1 <= b < a:
        raise DomainError(f"base {a}/{b} needs 1 <= b < a")
    if math.gcd(a, b) != 1:
        raise DomainError(f"base {a}/{b} needs gcd(a, b) = 1")
    return a, b


def format_base(base: Tuple[int, int]) -> str:
    return f"{base[0]}/{base[1]}"


def parse_base(text: str) -> Tuple[int, int]:
    """
    Parse "a/b", or a bare "a" meaning a/1.

    Raises:
    - DomainError: If the text is not two integers or the pair is not a usable base.
    """
    numerator, slash, denominator = text.strip().partition("/")
    try:
        base = (int(numerator), int(denominator) if slash else 1)
    except ValueError:
        raise DomainError(f"{text!r} is not a base of the form a/b")
    return validate_base(base)


def format_digits(digits, a: int) -> str:
    """
    Render digits most-significant-first: contiguous for a <= 10, comma separated above.
    """
    if a <= 10:
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def parse_digits(text: str, a: int) -> Tuple[int, ...]:
    """
    Parse a digit string written by format_digits. Only the syntax is checked
    here; range and canonicity are decode's job.

    Args:
    - text (str): The digit string.
    - a (int): Base numerator, selects contiguous or comma-separated syntax.

    Returns:
    - Tuple[int, ...]: Digit values, most significant first.

    Raises:
    - InvalidExpansion: On empty input or a character that is not a digit.
    """
    text = text.strip()
    if not text:
        raise InvalidExpansion("empty digit string", position=0, digits=text)
    tokens = list(text) if a <= 10 else [t.strip() for t in text.split(",")]
    digits = []
    for position, token in enumerate(tokens):
        # ASCII only: str.isdigit also admits superscripts and other scripts
        if not (token.isascii() and token.isdigit()):
            raise InvalidExpansion(f"{token!r} is not a digit", position=position, digits=text)
        digits.append(int(token))
    return tuple(digits)


@dataclass(frozen=True)
class Expansion:
    """
    A digit string in base a/b, most significant digit first.

    Attributes:
    - base_num (int): a.
    - base_den (int): b.
    - digits (Tuple[int, ...]): Digit values, each meant to lie in {0, ..., a-1}.
    """
    base_num: int
    base_den: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        validate_base((self.base_num, self.base_den))
        object.__setattr__(self, "digits", tuple(self.digits))

    @property
    def base(self) -> Tuple[int, int]:
        return self.base_num, self.base_den

    @staticmethod
    def parse(text: str, base: Tuple[int, int] = BASE_3_2) -> 'Expansion':
        """
        Build an Expansion from its textual form (no decoding is done).

        Args:
        - text (str): Digits as produced by format_digits.
        - base (Tuple[int, int], optional): The base (default 3/2).

        Returns:
        - Expansion: The parsed expansion.
        """
        a, b = validate_base(base)
        return Expansion(a, b, parse_digits(text, a))

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return format_digits(self.digits, self.base_num)


def digit_bound(n: int, base: Tuple[int, int] = BASE_3_2) -> int:
    """
    Upper bound ceil(log_{a/b}(n*b)) + 1 on the number of digits of n,
    evaluated with integer powers only.

    Args:
    - n (int): A non-negative integer.
    - base (Tuple[int, int], optional): The base (default 3/2).

    Returns:
    - int: The bound (1 for n = 0).
    """
    a, b = validate_base(base)
    if n == 0:
        return 1
    exponent = 0
    lhs, rhs = 1, n * b
    while lhs < rhs:
        lhs *= a
        rhs *= b
        exponent += 1
    return exponent + 1


def encode_steps(n: int, base: Tuple[int, int] = BASE_3_2) -> List[Tuple[int, int]]:
    """
    Run the digit-extraction recursion and keep every intermediate value.

    Args:
    - n (int): A non-negative integer.
    - base (Tuple[int, int], optional): The base (default 3/2).

    Returns:
    - List[Tuple[int, int]]: Pairs (N_i, d_i) for i = 0, 1, ...; least significant digit first.
      For n = 0 the single pair (0, 0).

    Raises:
    - DomainError: If n < 0 or the base is invalid.
    """
    a, b = validate_base(base)
    if n < 0:
        raise DomainError(f"cannot expand negative number {n}")
    if n == 0:
        return [(0, 0)]
    steps = []
    remaining = n
    while remaining > 0:
        remaining_next, digit = divmod(b * remaining, a)
        steps.append((remaining, digit))
        remaining = remaining_next
    return steps


def encode(n: int, base: Tuple[int, int] = BASE_3_2) -> Expansion:
    """
    Canonical expansion of n in base a/b.

    Args:
    - n (int): A non-negative integer of any size.
    - base (Tuple[int, int], optional): The base (default 3/2).

    Returns:
    - Expansion: The unique canonical digit string; "0" for n = 0.

    Raises:
    - DomainError: If n < 0 or the base is invalid.
    - InvariantViolation: If the digit count exceeds digit_bound(n).
    """
    a, b = validate_base(base)
    digits = tuple(d for _, d in reversed(encode_steps(n, base)))
    if len(digits) > digit_bound(n, base):
        raise InvariantViolation(f"{n} produced {len(digits)} digits in base {a}/{b}, above the bound")
    return Expansion(a, b, digits)


def decode(e: Expansion) -> int:
    """
    Rebuild N from its digits by N <- (a*N + d) / b, most significant first,
    requiring every division to be exact.

    Args:
    - e (Expansion): The expansion to read.

    Returns:
    - int: The decoded value.

    Raises:
    - InvalidExpansion: On an empty string, a leading zero, a digit >= a, or an
      inexact step. `position` names the offending digit.
    """
    a, b = e.base
    text = str(e)
    if not e.digits:
        raise InvalidExpansion("empty digit string", position=0, digits=text)
    if len(e.digits) > 1 and e.digits[0] == 0:
        raise InvalidExpansion("leading zero in a non-canonical expansion", position=0, digits=text)
    value = 0
    for position, digit in enumerate(e.digits):
        if not 0 <= digit < a:
            raise InvalidExpansion(f"digit {digit} out of range for base {a}/{b}", position=position, digits=text)
        numerator = a * value + digit
        if numerator % b:
            raise InvalidExpansion(f"{a}*{value} + {digit} is not divisible by {b}", position=position, digits=text)
        value = numerator // b
    return value


def evaluate(e: Expansion) -> Fraction:
    """
    Evaluate (1/b) * sum d_i (a/b)^i as an exact rational, without any
    canonicity check.
    """
    a, b = e.base
    ratio = Fraction(a, b)
    total = Fraction(0)
    for digit in e.digits:
        total = total * ratio + digit
    return total / b


def check_partial_sum_identity(n: int, base: Tuple[int, int] = BASE_3_2) -> bool:
    """
    Check, at every step i of the encoding of n, the cleared-denominator identity

        b^(i+1) * n = a^(i+1) * N_(i+1) + sum_{j <= i} d_j * a^j * b^(i-j).

    Args:
    - n (int): A non-negative integer.
    - base (Tuple[int, int], optional): The base (default 3/2).

    Returns:
    - bool: True if the identity holds for every step.
    """
    a, b = validate_base(base)
    steps = encode_steps(n, base)
    partial = 0
    a_power, b_power = 1, b
    for i, (_, digit) in enumerate(steps):
        partial = b * partial + digit * a_power
        a_power *= a
        following = steps[i + 1][0] if i + 1 < len(steps) else 0
        if b_power * n != a_power * following + partial:
            return False
        b_power *= b
    return True


def theorem_suffix(m_bar: int) -> List[int]:
    """
    The digits appended to the base 3/2 expansion of a J_3 fixed point to
    obtain the next one.

    Args:
    - m_bar (int): 2-adic valuation of 3n + 2, m_bar >= 0.

    Returns:
    - List[int]: [1] for 0, [0, 2] for 1, [0, 1 x (m_bar - 1), 2] above; always m_bar + 1 digits.
    """
    if m_bar < 0:
        raise DomainError(f"m_bar must be >= 0, got {m_bar}")
    if m_bar == 0:
        return [1]
    return [0] + [1] * (m_bar - 1) + [2]


def append_suffix(e: Expansion, m_bar: int) -> Expansion:
    """
    Append theorem_suffix(m_bar) to the right of e.

    Args:
    - e (Expansion): Base 3/2 expansion of a fixed point n.
    - m_bar (int): m_bar(n).

    Returns:
    - Expansion: The predicted expansion of the next fixed point.
    """
    return Expansion(e.base_num, e.base_den, e.digits + tuple(theorem_suffix(m_bar)))


def theorem_trace(n: int, m_bar: int) -> List[int]:
    """
    The quotients A_i = (3n + 2) / 2^(m_bar - i) for i = 0..m_bar that drive
    the digit-append argument.

    Raises:
    - InvariantViolation: If 2^m_bar does not divide 3n + 2.
    """
    head = 3 * n + 2
    if head % (1 << m_bar):
        raise InvariantViolation(f"2^{m_bar} does not divide 3*{n} + 2")
    return [head >> (m_bar - i) for i in range(m_bar + 1)]
