import pytest

from sharplrc.codefile import format_code, load_codefile, parse_code, parse_codefile
from sharplrc.errors import DegenerateCode, FieldError, NotPrimitive, ParseError, RankError

from helpers import EX1

HEAD = "field q=3 p=3 m=1 primpoly=1,1\ncode n=4 k=2\nG\n"


def test_example_fixture():
    C = parse_code(EX1)
    assert (C.field.q, C.n, C.k) == (4, 9, 4)
    assert C.G[3].tolist() == [0, 0, 0, 1, 2, 1, 2, 0, 3]


def test_round_trip_is_identity():
    text = "\n".join(l for l in EX1.read_text().splitlines() if not l.startswith("#")) + "\n"
    assert load_codefile(EX1).format() == text
    assert parse_codefile(text).format() == text
    C = parse_code(text)
    assert parse_code(format_code(C, "H")).same_code(C)


def test_zero_column_is_degenerate():
    with pytest.raises(DegenerateCode):
        parse_code(HEAD + "1 0 0 2\n0 1 0 1\n")


def test_rank_mismatch():
    with pytest.raises(RankError):
        parse_code(HEAD + "1 1 1 2\n2 2 2 1\n")


@pytest.mark.parametrize(
    "text,line",
    [
        ("field q=3\ncode n=4 k=2\nG\n", 1),
        ("field q=3 p=3 m=1 primpoly=1,1\ncode n=4\nG\n1 0 1 1\n", 2),
        ("field q=3 p=3 m=1 primpoly=1,1\ncode n=4 k=1\nX\n1 0 1 1\n", 3),
        (HEAD + "1 0 1\n0 1 1 1\n", 4),
        (HEAD + "1 0 1 3\n0 1 1 1\n", 4),
        (HEAD + "1 0 1 x\n0 1 1 1\n", 4),
        (HEAD + "# comment\n\n1 0 1 1\n0 1 1  1\n", 7),
        (HEAD + "1 0 1 1\n", 4),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_codefile(text)
    assert info.value.line == line


def test_field_errors():
    with pytest.raises(FieldError):
        parse_codefile("field q=9 p=3 m=1 primpoly=1,1\ncode n=4 k=1\nG\n1 0 1 1\n")
    with pytest.raises(NotPrimitive):
        parse_codefile("field q=4 p=2 m=2 primpoly=1,0,1\ncode n=4 k=1\nG\n1 0 1 1\n")
