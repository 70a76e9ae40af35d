# analyzers/good_maps.py
# generation of good maps and exhaustive check of the closure bijection

import sys
from collections.abc import Iterator
from itertools import combinations, product

from analyzers.closure import (
    canonical_labeling,
    canonical_orientation,
    closure,
    closure_by_labels,
    is_well_labeled,
    leaf_colors,
)
from analyzers.map_analyzer import MapAnalyzer
from analyzers.map_enumerator import DartGluer, bivariate_slice, enumerate_4valent_bicolorable
from analyzers.radial import radial_inverse
from models.blossoming_map import BlossomingMap, StemKind
from models.count_table import CountTable
from models.rooted_map import Color, canonical_form
from models.verification import VerificationReport


def good_maps(g: int, n_interior_edges: int, max_nodes: int | None = None) -> Iterator[BlossomingMap]:
    """
    4-valent well-rooted, well-oriented, well-labeled unicellular blossoming maps
    of genus g. the interior is glued first (one face, root dart a stem); stem
    kinds are then forced vertex by vertex so the orientation is eulerian.
    """
    n_vertices = n_interior_edges + 1 - 2 * g
    if n_vertices < 1:
        return
    n_darts = 4 * n_vertices
    n_stems = n_darts - 2 * n_interior_edges
    gluer = DartGluer(
        n_darts, degrees={4}, stems=n_stems, unicellular=True, root_is_stem=True, max_nodes=max_nodes
    )
    for sigma, alpha in gluer.run():
        skeleton = BlossomingMap(
            n_darts=n_darts, sigma=sigma, alpha=alpha, kinds=(None,) * (n_darts + 1), root_dart=1
        )
        yield from _eulerian_stem_kinds(skeleton)


def _eulerian_stem_kinds(skeleton: BlossomingMap) -> Iterator[BlossomingMap]:
    orientation = canonical_orientation(skeleton)
    per_vertex = []
    for cycle in skeleton.vertices:
        stems = [d for d in cycle if skeleton.is_stem(d)]
        outs = sum(1 for d in cycle if not skeleton.is_stem(d) and orientation.is_tail(d))
        n_buds = len(cycle) // 2 - outs
        if not 0 <= n_buds <= len(stems):
            return
        choices = []
        for buds in combinations(stems, n_buds):
            if skeleton.root_dart in stems and skeleton.root_dart not in buds:
                continue
            choices.append({d: StemKind.BUD if d in buds else StemKind.LEAF for d in stems})
        per_vertex.append(choices)

    for assignment in product(*per_vertex):
        kinds = {}
        for part in assignment:
            kinds.update(part)
        u = skeleton.with_kinds(kinds)
        labeling = canonical_labeling(u)
        if labeling.minimum < 0:
            continue
        if is_well_labeled(u, labeling, orientation):
            yield u


def enumerate_good_maps(g: int, n_interior_edges: int) -> CountTable:
    """good maps by (black leaves + 1, white leaves), the root bud counting black"""
    table = CountTable(g, ("L_black", "L_white"))
    for u in good_maps(g, n_interior_edges):
        black, white = leaf_colors(u)
        table.add((black + 1, white))
    return table


def verify_closure_bijection(g: int, max_interior_edges: int, verbose: bool = False) -> VerificationReport:
    """
    close every good map up to the bound and check: both closures agree, images
    are pairwise distinct 4-valent bicolorable maps of genus g, leaf colors match
    face colors, and the censuses agree with the brute-force oracle
    """
    report = VerificationReport(f"closure bijection (genus {g})")
    for n in range(2 * g, max_interior_edges + 1):
        n_vertices = n + 1 - 2 * g
        if verbose:
            print(f"🔍 closing good maps with {n} interior edges...", file=sys.stderr)
        images = set()
        good_table = CountTable(g, ("F_black", "F_white"))
        pulled = CountTable(g, ("V", "F"))
        for u in good_maps(g, n):
            report.checked += 1
            result = closure(u)
            if result.map.key != closure_by_labels(u).map.key:
                report.fail("closure and closure by labels differ", u)
            m = result.map
            key = canonical_form(m).key
            if key in images:
                report.fail("two good maps have the same closure", u)
            images.add(key)

            analyzer = MapAnalyzer(m)
            if m.genus != g or not analyzer.is_bicolorable():
                report.fail("closure is not a bicolorable map of the right genus", u)
                continue
            coloring = analyzer.face_coloring()
            black, white = leaf_colors(u)
            if (black, white) != (coloring.n_black - 1, coloring.n_white):
                report.fail("leaf colors do not match face colors", u)
            colors = coloring.colors
            labels = canonical_labeling(u).stem_labels(u)
            for leaf, face in result.leaf_faces.items():
                expected = Color.BLACK if labels[leaf] % 2 == 0 else Color.WHITE
                if colors[face] is not expected:
                    report.fail(f"leaf {leaf} closes a face of the wrong color", u)
            if result.orientation != analyzer.dual_geodesic_orientation():
                report.fail("closure orientation is not dual-geodesic", u)
            good_table.add((coloring.n_black, coloring.n_white))
            m_prime = radial_inverse(m)
            pulled.add((m_prime.n_vertices, m_prime.n_faces))

        bicolorable = enumerate_4valent_bicolorable(g, n_vertices)
        if good_table != bicolorable:
            report.fail(f"census mismatch at {n_vertices} vertices", (good_table, bicolorable))
        if pulled != bivariate_slice(g, n_vertices):
            report.fail(f"radial pull-back mismatch at {n_vertices} edges")
        report.details[f"vertices={n_vertices}"] = good_table.total
    if verbose:
        status = "✅" if report.passed else "❌"
        print(f"{status} {report.checked} good maps checked", file=sys.stderr)
    return report.raise_for_failure()

