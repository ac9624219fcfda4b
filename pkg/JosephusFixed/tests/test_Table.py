import argparse
import io

import pytest

from JosephusFixed.FracBase import format_base
from JosephusFixed.Input import Input
from JosephusFixed.Logger import Logger, Themes, Types
from JosephusFixed.Table import OutputFormat, Table


def sample():
    return Table(["ell", "n", "ok"], [[1, "1", True], [12, "13654", False]])


def test_table_shape():
    table = sample()
    assert table.get_rows() == 2
    assert table.get_cols() == 3
    assert table.transpose()[1] == ["n", "1", "13654"]


def test_table_rejects_ragged_rows():
    with pytest.raises(ValueError):
        Table(["a", "b"], [[1]])


def test_render_text():
    assert sample().render(OutputFormat.TEXT) == "ell      n     ok\n  1      1   true\n 12  13654  false\n"


def test_render_csv():
    assert sample().render(OutputFormat.CSV) == "ell,n,ok\n1,1,true\n12,13654,false\n"


def test_render_json_drops_missing_cells():
    table = Table(["a", "b"], [[1, None], [2, "x"]])
    assert table.render(OutputFormat.JSON) == '{"a":1}\n{"a":2,"b":"x"}\n'


def test_render_unknown_format():
    with pytest.raises(ValueError):
        sample().render("xml")


def test_from_dicts():
    table = Table.from_dicts([{"x": 1, "y": 2}, {"x": 3}])
    assert table.header == ["x", "y"]
    assert list(table) == [[1, 2], [3, None]]


@pytest.mark.parametrize("inputType, text, expected", [
    (Input.Parse.Types.INTEGER, "-4", -4),
    (Input.Parse.Types.NATURAL, "0", 0),
    (Input.Parse.Types.NATURAL, "-1", None),
    (Input.Parse.Types.POSITIVE, "0", None),
    (Input.Parse.Types.POSITIVE, " 12 ", 12),
    (Input.Parse.Types.BASE, "3/2", (3, 2)),
    (Input.Parse.Types.BASE, "2", (2, 1)),
    (Input.Parse.Types.BASE, "4/2", None),
    (Input.Parse.Types.BASE, "x/2", None),
    ({"type": "unknown"}, "1", None),
])
def test_parse(inputType, text, expected):
    assert Input.Parse.parse(inputType, text) == expected


def test_converter_raises_for_argparse():
    convert = Input.Parse.converter(Input.Parse.Types.BASE)
    assert convert("5/3") == (5, 3)
    with pytest.raises(argparse.ArgumentTypeError):
        convert("3/3")
    assert format_base((5, 3)) == "5/3"


def test_logger_filters_and_uses_plain_text_off_tty():
    stream = io.StringIO()
    previous = Logger.stream, Logger.level
    try:
        Logger.stream = stream
        Logger.setLevel(Types.INFO)
        Logger.debug("hidden")
        Logger.info("shown", "SUITE")
        Logger.setLevel(Types.ERROR)
        Logger.warn("hidden too")
        Logger.error("broken")
    finally:
        Logger.stream, Logger.level = previous
    assert stream.getvalue() == "[>] SUITE: shown\n[!] ERROR: broken\n"


def test_logger_format_colored():
    line = Logger.format("message", Themes.SUCCESS)
    assert "SUCCESS" in line and "message" in line and line != "[$] SUCCESS: message"
