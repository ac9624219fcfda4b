import csv
import io
import json
from typing import Dict, Iterable, List, Sequence


class OutputFormat:
    """
    Output formats shared by every command.

    Attributes:
    - TEXT: Aligned columns with a header line.
    - JSON: One compact JSON object per line.
    - CSV: Header row followed by comma separated rows.
    """
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    ALL = (TEXT, JSON, CSV)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class Table(list):
    """
    Rows of cells under a header, extended from a list.

    Cells keep their Python value so JSON output can tell numbers, strings and
    booleans apart; text and CSV render every cell with str (booleans as
    true/false, None as an empty cell). Big integers must be handed in as
    strings by the caller.

    Public methods:
    - __init__: Initializes the table.
    - from_dicts: Builds a table from a list of dicts sharing their keys.
    - add_row: Appends one row.
    - get_rows: Returns the number of rows.
    - get_cols: Returns the number of columns.
    - transpose: Returns the columns as rows.
    - column_widths: Widths needed to align the text rendering.
    - render: Renders the table in one of the OutputFormat values.
    """

    def __init__(self, header: Sequence[str], rows: Iterable[Sequence[object]] = None):
        """
        Initializes the table.

        Args:
        - header (Sequence[str]): Column names.
        - rows (Iterable[Sequence[object]], optional): Initial rows.

        Raises:
        - ValueError: If a row does not have one cell per column.
        """
        super().__init__()
        self.header = list(header)
        self.cols = len(self.header)
        for row in rows or []:
            self.add_row(row)

    @staticmethod
    def from_dicts(records: Sequence[Dict[str, object]]) -> 'Table':
        """
        Builds a table whose header is the key order of the first record.

        Args:
        - records (Sequence[Dict[str, object]]): At least one record.

        Returns:
        - Table: One row per record.
        """
        header = list(records[0].keys())
        return Table(header, [[record.get(key) for key in header] for record in records])

    def add_row(self, row: Sequence[object]):
        if len(row) != self.cols:
            raise ValueError(f"row has {len(row)} cells, expected {self.cols}")
        self.append(list(row))

    def get_rows(self) -> int:
        return len(self)

    def get_cols(self) -> int:
        return self.cols

    def transpose(self) -> List[List[object]]:
        """
        Returns the columns of the table, header cell first.

        Returns:
        - List[List[object]]: One list per column.
        """
        return [[self.header[j]] + [row[j] for row in self] for j in range(self.cols)]

    def column_widths(self) -> List[int]:
        return [max(len(_cell(value)) for value in column) for column in self.transpose()]

    def render(self, fmt: str = OutputFormat.TEXT) -> str:
        """
        Renders the table.

        Args:
        - fmt (str): One of OutputFormat.ALL.

        Returns:
        - str: The rendering, each line terminated by a newline.

        Raises:
        - ValueError: If the format is unknown.
        """
        if fmt == OutputFormat.TEXT:
            widths = self.column_widths()
            lines = []
            for row in [self.header] + list(self):
                cells = [_cell(value).rjust(width) for value, width in zip(row, widths)]
                lines.append("  ".join(cells).rstrip())
            return "\n".join(lines) + "\n"
        elif fmt == OutputFormat.CSV:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(self.header)
            for row in self:
                writer.writerow([_cell(value) for value in row])
            return buffer.getvalue()
        elif fmt == OutputFormat.JSON:
            lines = []
            for row in self:
                record = {key: value for key, value in zip(self.header, row) if value is not None}
                lines.append(json.dumps(record, separators=(",", ":")))
            return "".join(line + "\n" for line in lines)
        else:
            raise ValueError(f"unknown output format {fmt!r}")
