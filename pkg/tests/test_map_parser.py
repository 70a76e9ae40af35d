# tests/test_map_parser.py

import pytest

from models.errors import ParseError
from parsers.map_parser import (
    MapParser,
    format_blossoming_map,
    format_map,
    format_scheme,
    parse_blossoming_map,
    parse_map,
    parse_scheme,
)

TORUS = "darts 4 / sigma (1 2 3 4) / alpha (1 3)(2 4) / root 1"


def test_parse_and_format_a_map(torus_map):
    m = parse_map(TORUS)
    assert m.key == torus_map.key
    assert format_map(m) == TORUS


def test_whitespace_and_commas_are_tolerated(torus_map):
    m = parse_map("darts 4/ sigma ( 1, 2, 3, 4 ) /alpha (1 3) (2 4)/ root   1")
    assert m.key == torus_map.key


@pytest.mark.parametrize("record", [
    "darts 4 / sigma (1 2 3 4) / alpha (1 3)(2 4)",
    "darts 4 / sigma (1 2 3 4) / alpha (1 3)(2 4) / root 1 / root 2",
    "darts four / sigma (1 2 3 4) / alpha (1 3)(2 4) / root 1",
    "darts 4 / sigma 1 2 3 4 / alpha (1 3)(2 4) / root 1",
    "darts 4 / sigma (1 2 3 4) / alpha (1 2 3 4) / root 1",
    "darts 4 / sigma (1 2 3 4) / alpha (1 3)(2 4) / root 9",
    "darts 4 / sigma (1 2)(3 4) / alpha (1 2)(3 4) / root 1",
])
def test_bad_map_records(record):
    with pytest.raises(ParseError):
        parse_map(record)


def test_blossoming_map_round_trip(star_bbll):
    text = format_blossoming_map(star_bbll)
    assert "stems (1,b)(2,b)(3,l)(4,l)" in text
    u = parse_blossoming_map(text)
    assert u.key == star_bbll.key
    assert format_blossoming_map(u) == text


def test_single_leaf_record():
    u = parse_blossoming_map("darts 0 / sigma / alpha / stems / rootbud 0")
    assert u.is_single_leaf
    assert format_blossoming_map(u) == "darts 0 / sigma / alpha / stems / rootbud 0"


def test_stem_kind_must_be_known():
    with pytest.raises(ParseError):
        parse_blossoming_map("darts 4 / sigma (1 2 3 4) / alpha / stems (1,b)(2,x)(3,l)(4,l) / rootbud 1")


def test_schemes_survive_formatting(genus1_schemes):
    for s in genus1_schemes:
        parsed = parse_scheme(format_scheme(s))
        assert parsed.key == s.key
        assert parsed.orientation == s.orientation
        assert parsed.edges == s.edges


def test_scheme_heads_must_orient_every_edge(genus1_schemes):
    s = genus1_schemes[0]
    record = format_scheme(s)
    tail = next(iter(e.tail for e in s.edges))
    broken = record.replace("/ heads ", f"/ heads {tail} ", 1)
    with pytest.raises(ParseError):
        parse_scheme(broken)


def test_scheme_types_are_checked(genus1_schemes):
    s = genus1_schemes[0]
    d = s.map.interior_darts[0]
    wrong = 1 - s.half_edge_type(d)
    head, _, _ = format_scheme(s).partition(" / types ")
    with pytest.raises(ParseError):
        parse_scheme(f"{head} / types ({d}:{wrong})")


def test_file_loader(tmp_path):
    path = tmp_path / "maps.txt"
    path.write_text(f"# two maps\n{TORUS}\n\ndarts 2 / sigma (1 2) / alpha (1 2) / root 1  # a loop\n")
    records = MapParser(str(path)).load()
    assert [m.n_edges for m in records] == [2, 1]


def test_file_loader_reports_the_line(tmp_path):
    path = tmp_path / "maps.txt"
    path.write_text(f"{TORUS}\ndarts 2 / sigma (1 2)\n")
    with pytest.raises(ParseError, match=r"maps.txt:2"):
        MapParser(str(path)).load()


def test_unknown_record_kind(tmp_path):
    with pytest.raises(ParseError):
        MapParser(str(tmp_path / "x.txt"), kind="graph")
