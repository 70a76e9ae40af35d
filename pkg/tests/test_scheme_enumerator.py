# tests/test_scheme_enumerator.py

from collections import defaultdict
from itertools import takewhile

import pytest

import config
from analyzers.closure import canonical_orientation, is_well_oriented
from analyzers.core_scheme import unroot_key
from analyzers.scheme_enumerator import (
    SchemeClass,
    _vertex_range,
    interior_shapes,
    rooted_schemes,
    shape_of,
    shape_report,
)
from models.blossoming_map import blossoming_canonical_form
from models.errors import ResourceLimit
from parsers.map_parser import parse_scheme


def test_genus_one_schemes_are_hexagons(genus1_classes):
    assert genus1_classes
    for c in genus1_classes:
        assert c.genus == 1
        # a rooted scheme needs a stem, so the stemless bouquet never shows up
        assert c.n_vertices == 2
        assert c.n_degree_four == 0
        assert c.trunk_count == 2
        assert c.members


def test_members_share_their_unrooted_key(genus1_classes):
    keys = [c.key for c in genus1_classes]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for c in genus1_classes:
        for s in c.members:
            assert unroot_key(s.map) == c.key


def test_rootings_count_every_trunk(genus1_classes):
    for c in genus1_classes:
        assert len(c.rootings) == c.trunk_count
        assert set(map(id, c.rootings)) == set(map(id, c.members))


def test_rooted_schemes_start_at_a_bud_and_are_eulerian(genus1_schemes):
    for s in genus1_schemes:
        assert s.map.root_is_bud
        assert is_well_oriented(s.map, s.orientation)


def test_rooted_schemes_are_distinct(genus1_schemes):
    keys = [s.map.key for s in genus1_schemes]
    assert len(keys) == len(set(keys))


def test_interior_shapes_of_the_torus():
    shapes = interior_shapes(1)
    # the 4-valent bouquet and the theta-like pair of trivalent vertices
    assert sorted((m.n_vertices, m.n_edges) for m in shapes) == [(1, 2), (2, 3)]


def test_shape_report_counts_every_rooted_scheme(genus1_schemes):
    rows = shape_report(1)
    bouquet = next(r for r in rows if r["vertices"] == 1)
    assert bouquet["classes"] == 0 and bouquet["rooted_schemes"] == 0
    assert sum(r["rooted_schemes"] for r in rows) == len(genus1_schemes)
    shape_keys = {shape_of(s) for s in genus1_schemes}
    assert len(shape_keys) <= len(rows)


def test_genus_outside_the_supported_range():
    with pytest.raises(ResourceLimit):
        list(rooted_schemes(config.scheme_max_genus + 1))
    with pytest.raises(ResourceLimit):
        list(rooted_schemes(0))


def test_vertex_range_reaches_the_trivalent_schemes():
    assert list(_vertex_range(1)) == [2]
    assert list(_vertex_range(2)) == [4, 5, 6]


def test_genus_two_records_are_rooted_schemes(genus2_records, genus2_schemes):
    for record, s in zip(genus2_records, genus2_schemes):
        parsed = parse_scheme(record)
        # the heads in each record are the canonical orientation
        assert parsed.orientation == canonical_orientation(parsed.map)
        assert s.map.genus == 2
        assert (s.n_vertices, s.n_degree_four) == (4, 2)
        assert s.map.root_is_bud
        assert is_well_oriented(s.map, s.orientation)


@pytest.mark.slow
def test_genus_two_four_vertex_schemes(genus2_schemes, monkeypatch):
    monkeypatch.setattr(config, "max_nodes", 100_000_000)
    smallest = list(takewhile(lambda s: s.n_vertices == 4, rooted_schemes(2)))
    keys = {blossoming_canonical_form(s.map).key for s in smallest}
    assert len(keys) == len(smallest)
    for s in genus2_schemes:
        assert blossoming_canonical_form(s.map).key in keys

    groups = defaultdict(list)
    for s in smallest:
        groups[unroot_key(s.map)].append(s)
    for key, members in groups.items():
        c = SchemeClass(key, tuple(members))
        assert c.trunk_count == 2
        assert len(c.rootings) == c.trunk_count
