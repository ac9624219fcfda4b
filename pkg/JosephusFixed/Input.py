import argparse
from typing import Callable

from .Errors import DomainError
from .FracBase import parse_base


class Input:
    """
    Parsing of the textual values the command line accepts.

    Nested Classes:
    - Parse: Static helpers turning text into typed values.
    """
    class Parse:
        """
        Nested class providing one entry point, parse, dispatched on Types.
        """
        class Types:
            """
            Nested class containing constants representing the accepted value types.
            """
            INTEGER = {"type": "integer"}
            NATURAL = {"type": "natural"}
            POSITIVE = {"type": "positive"}
            BASE = {"type": "base"}

        @staticmethod
        def parse(inputType, text: str):
            """
            Converts text according to inputType.

            Args:
            - inputType: One of Input.Parse.Types.
            - text (str): The raw value.

            Returns:
            - The converted value, or None if text is not valid for inputType:
              int for INTEGER / NATURAL (>= 0) / POSITIVE (>= 1),
              Tuple[int, int] for BASE ("a/b", or "a" meaning a/1).
            """
            text = text.strip()
            if inputType in (Input.Parse.Types.INTEGER, Input.Parse.Types.NATURAL, Input.Parse.Types.POSITIVE):
                try:
                    value = int(text)
                except ValueError:
                    return None
                if inputType == Input.Parse.Types.NATURAL and value < 0:
                    return None
                if inputType == Input.Parse.Types.POSITIVE and value < 1:
                    return None
                return value
            elif inputType == Input.Parse.Types.BASE:
                try:
                    return parse_base(text)
                except DomainError:
                    return None
            else:
                return None

        @staticmethod
        def converter(inputType) -> Callable[[str], object]:
            """
            Wraps parse into an argparse `type=` callable.

            Args:
            - inputType: One of Input.Parse.Types.

            Returns:
            - Callable[[str], object]: Raises argparse.ArgumentTypeError instead of returning None.
            """
            def convert(text: str):
                value = Input.Parse.parse(inputType, text)
                if value is None:
                    raise argparse.ArgumentTypeError(f"invalid {inputType['type']} value: {text!r}")
                return value
            convert.__name__ = inputType["type"]
            return convert
