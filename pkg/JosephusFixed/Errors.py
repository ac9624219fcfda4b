class JosephusError(ValueError):
    """
    Base class for every error raised by JosephusFixed.
    """


class DomainError(JosephusError):
    """
    Raised when an argument lies outside the domain of an operation
    (n = 0, k < 2, an invalid base a/b, a non-positive count...).
    """


class UsageError(JosephusError):
    """
    Raised when an operation is called with inconsistent inputs, such as a
    sequence that lacks the records a verification needs.
    """


class UnsupportedCase(JosephusError):
    """
    Raised when a closed form is requested outside the range it is tabulated for.
    """


class InvalidExpansion(JosephusError):
    def __init__(self, message: str, position: int = None, digits: str = None):
        """
        Initialize an InvalidExpansion error.

        Args:
        - message (str): Human readable reason.
        - position (int, optional): 0-based index (from the most significant end) of the failing digit.
        - digits (str, optional): The digit string that failed to decode.
        """
        super().__init__(message)
        self.position = position
        self.digits = digits


class InvariantViolation(JosephusError, AssertionError):
    """
    Raised when an exact-arithmetic identity that must always hold is broken.
    This means a bug, never bad input.
    """
