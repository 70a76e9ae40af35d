# tests/test_core_scheme.py

import networkx as nx
import pytest

from analyzers.closure import canonical_orientation, is_well_oriented
from analyzers.core_scheme import (
    binary_bijection,
    classify_edges,
    consistent_naming,
    core_of,
    fibres_of_decorated_cores,
    height_order,
    is_consistent,
    labeled_schemes,
    mirror_order,
    offset_graph,
    prune,
    regraft,
    reroot,
    rootable_stems,
    scheme_of,
    scheme_stats,
    scheme_trunks,
    to_decorated_core,
    truncate,
    unroot_key,
    verify_mirror_statistics,
)
from analyzers.good_maps import good_maps
from models.errors import DomainError, NotRootable
from models.scheme import EdgeClass, LabeledScheme, StemClass


@pytest.fixture(scope="module")
def torus_good_maps():
    return list(good_maps(1, 3))


def test_prune_then_regraft_is_the_identity(torus_good_maps):
    for u in torus_good_maps:
        assert regraft(prune(u)).key == u.key


def test_planar_maps_prune_to_a_single_vertex():
    for u in good_maps(0, 2):
        assert core_of(u).map.n_vertices == 1


def test_cores_have_no_vertex_of_degree_one(torus_good_maps):
    for u in torus_good_maps:
        core = core_of(u)
        assert all(core.map.interior_degree(v) >= 2 for v in range(core.map.n_vertices))
        assert is_well_oriented(core.map, core.orientation)


def test_scheme_of_a_scheme_rooted_core(torus_good_maps):
    seen = 0
    for u in torus_good_maps:
        core = core_of(u)
        if not core.is_scheme_rooted:
            continue
        seen += 1
        l = scheme_of(core)
        assert l.scheme.n_vertices in (1, 2)
        assert l.is_rooted_at_zero
    assert seen > 0


def test_trunk_count_is_2g_minus_degree_four(torus_good_maps):
    for u in torus_good_maps:
        trunks = scheme_trunks(u)
        for tau in trunks:
            scheme = scheme_of(to_decorated_core(u, tau).core).scheme
            assert len(trunks) == 2 - scheme.n_degree_four


def test_planar_maps_have_no_trunks():
    u = next(good_maps(0, 1))
    with pytest.raises(DomainError):
        scheme_trunks(u)


def test_reroot_turns_the_root_bud_into_a_leaf(star_bbll):
    r = reroot(star_bbll, 3)
    assert r.root_dart == 3 and r.root_is_bud
    assert 1 in r.leaves
    assert sorted(rootable_stems(r)) == [1, 3, 4]


def test_reroot_needs_a_rootable_stem(star_bbll):
    with pytest.raises(NotRootable):
        reroot(star_bbll, 2)


def test_unroot_key_is_shared_by_rerootings(star_bbll):
    key = unroot_key(star_bbll)
    for s in rootable_stems(star_bbll):
        assert unroot_key(reroot(star_bbll, s)) == key


def test_decorated_cores_come_in_pairs():
    report = fibres_of_decorated_cores(1, 3)
    assert report.passed
    assert report.checked == 2 * report.details["fibres"]


def test_decorated_cores_use_the_orientation_of_the_rerooted_core(torus_good_maps):
    seen = 0
    for u in torus_good_maps:
        for trunk in scheme_trunks(u):
            core = to_decorated_core(u, trunk).core
            assert core.orientation == canonical_orientation(core.map)
            assert is_well_oriented(core.map, core.orientation)
            seen += 1
    assert seen > 0


@pytest.mark.slow
def test_decorated_cores_come_in_pairs_up_to_four_interior_edges():
    report = fibres_of_decorated_cores(1, 4)
    assert report.passed
    assert report.checked == 2 * report.details["fibres"]


# --- unlabeled schemes ---

def test_offset_graph_is_acyclic_and_naming_consistent(genus1_schemes):
    for s in genus1_schemes:
        assert nx.is_directed_acyclic_graph(offset_graph(s))
        naming = consistent_naming(s)
        assert is_consistent(s, naming)
        assert sorted(naming) == list(range(1, s.n_vertices + 1))


def test_inconsistent_naming_is_detected(genus1_schemes):
    for s in genus1_schemes:
        for u, v in s.offset_arcs:
            if u == v:
                continue
            naming = list(consistent_naming(s))
            naming[u], naming[v] = naming[v], naming[u]
            assert not is_consistent(s, tuple(naming))


def test_edge_and_stem_classes(genus1_schemes):
    for s in genus1_schemes:
        edges, stems = classify_edges(s)
        assert len(edges) == s.n_edges
        assert set(edges.values()) <= set(EdgeClass)
        assert set(stems) == set(s.map.stems)
        assert set(stems.values()) <= set(StemClass)


def test_labeled_schemes_are_rooted_at_zero(genus1_schemes):
    s = genus1_schemes[0]
    labeled = list(labeled_schemes(s, 2))
    assert len(labeled) == 5 ** (s.n_vertices - 1)
    assert all(l.is_rooted_at_zero for l in labeled)


def test_labels_survive_a_round_trip(genus1_schemes):
    for s in genus1_schemes:
        for l in labeled_schemes(s, 1):
            assert LabeledScheme.from_labels(s, l.labels) == l


def test_height_order_and_binary_bijection(genus1_schemes):
    for s in genus1_schemes:
        naming = consistent_naming(s)
        for l in labeled_schemes(s, 2):
            pi = height_order(l, naming)
            bb = binary_bijection(l, naming)
            assert bb.pi == pi
            heights = [l.heights[v] for v in pi]
            assert heights == sorted(heights)
            assert bb.mirror().mirror() == bb


def test_mirror_statistics(genus1_schemes):
    for s in genus1_schemes:
        assert verify_mirror_statistics(s).passed


def test_enclosing_counts_are_positive_between_heights(genus1_schemes):
    for s in genus1_schemes:
        naming = consistent_naming(s)
        stats = scheme_stats(s, tuple(range(s.n_vertices)), naming)
        for k in range(1, s.n_vertices):
            assert stats.C_plus(k) >= 1
            assert stats.C_plus(k) == stats.C_minus(k + 1)


def test_mirror_order_reverses():
    assert mirror_order((2, 0, 1)) == (1, 0, 2)


def test_truncation_at_the_bottom_keeps_everything(genus1_schemes):
    for s in genus1_schemes:
        naming = consistent_naming(s)
        l = next(iter(labeled_schemes(s, 0)))
        t = truncate(l, naming, 1, ascending=True)
        assert len(t.heights) == s.n_vertices
        assert len(t.edges) == s.n_edges
        assert t.normalized().label in (0, 1)
