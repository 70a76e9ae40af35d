# tests/test_map_analyzer.py

import pytest

import config
from analyzers.map_analyzer import (
    MapAnalyzer,
    dual_geodesic_orientation,
    dual_graph,
    has_clockwise_face,
    is_bicolorable,
    verify_propp,
)
from analyzers.map_enumerator import enumerate_rooted_maps
from analyzers.radial import radial, radial_inverse
from models.errors import DomainError, NotBicolorable, NotFourValent, ResourceLimit
from models.rooted_map import Color, Orientation, RootedMap, build_map, canonical_form


def test_loop_is_bicolorable_edge_is_not(loop_map, edge_map):
    assert is_bicolorable(loop_map)
    assert not is_bicolorable(edge_map)


def test_dual_graph_of_the_loop_and_the_torus(loop_map, torus_map):
    dual = dual_graph(loop_map)
    assert (dual.number_of_nodes(), dual.number_of_edges()) == (2, 1)
    # both edges of the torus bouquet bound its single face on both sides
    assert sorted(dual_graph(torus_map).edges()) == [(0, 0), (0, 0)]


def test_face_coloring_puts_the_root_face_in_black(loop_map):
    coloring = MapAnalyzer(loop_map).face_coloring()
    assert coloring.colors[loop_map.root_face] is Color.BLACK
    assert (coloring.n_black, coloring.n_white) == (1, 1)


def test_face_coloring_of_a_non_bicolorable_map(edge_map):
    with pytest.raises(NotBicolorable):
        MapAnalyzer(edge_map).face_coloring()
    with pytest.raises(NotBicolorable):
        dual_geodesic_orientation(edge_map)


def test_dual_geodesic_orientation_has_a_potential():
    for m in enumerate_rooted_maps(0, 3):
        analyzer = MapAnalyzer(m)
        if not analyzer.is_bicolorable():
            continue
        o = analyzer.dual_geodesic_orientation()
        assert o.is_valid_for(m)
        potential = analyzer.face_potential(o)
        assert potential is not None
        assert potential == analyzer.face_heights()
        assert not analyzer.has_clockwise_face(o)


def test_reversed_orientation_moves_the_potential(loop_map):
    analyzer = MapAnalyzer(loop_map)
    o = analyzer.dual_geodesic_orientation()
    # still a potential, with the other face below the root face
    assert analyzer.face_potential(o.reversed(loop_map)) is not None
    assert analyzer.face_potential(o.reversed(loop_map)) != analyzer.face_heights()


def test_propp_on_every_small_bicolorable_map():
    for n in range(1, 4):
        for g in range(n // 2 + 1):
            for m in enumerate_rooted_maps(g, n):
                if is_bicolorable(m):
                    assert verify_propp(m)


def test_propp_brute_force_is_bounded():
    m = next(m for m in enumerate_rooted_maps(0, config.propp_max_edges + 1) if is_bicolorable(m))
    with pytest.raises(ResourceLimit):
        verify_propp(m)


# --- radial ---

def test_radial_of_the_loop(loop_map):
    result = radial(loop_map)
    r = result.map
    assert r.n_vertices == 1 and all(len(c) == 4 for c in r.vertices)
    coloring = MapAnalyzer(r).face_coloring()
    assert (coloring.n_black, coloring.n_white) == (loop_map.n_vertices, loop_map.n_faces)
    assert set(result.vertex_to_black_face) == {0}
    assert all(coloring.colors[f] is Color.BLACK for f in result.vertex_to_black_face.values())
    assert all(coloring.colors[f] is Color.WHITE for f in result.face_to_white_face.values())


def test_radial_round_trip_on_torus(torus_map):
    r = radial(torus_map).map
    assert r.genus == 1
    assert radial_inverse(r).key == canonical_form(torus_map).key


def test_radial_needs_an_edge():
    with pytest.raises(DomainError):
        radial(RootedMap.vertex_map())


def test_radial_inverse_needs_four_valent(edge_map):
    with pytest.raises(NotFourValent):
        radial_inverse(edge_map)


def test_radial_inverse_needs_bicolorable():
    # one 4-valent vertex with two interlaced loops has a single face
    r = build_map(4, [(1, 2, 3, 4)], [(1, 3), (2, 4)], 1)
    with pytest.raises(NotBicolorable):
        radial_inverse(r)


def test_orientation_validity(loop_map):
    assert Orientation(frozenset({2})).is_valid_for(loop_map)
    assert not Orientation(frozenset({1, 2})).is_valid_for(loop_map)


def test_reversing_the_loop_makes_a_clockwise_face(loop_map):
    o = dual_geodesic_orientation(loop_map)
    assert not has_clockwise_face(loop_map, o)
    assert has_clockwise_face(loop_map, o.reversed(loop_map))
