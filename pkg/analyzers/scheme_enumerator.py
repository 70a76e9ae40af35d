# analyzers/scheme_enumerator.py
# rooted 4-valent blossoming schemes of small genus, grouped by unrooted scheme

import sys
from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import config
from analyzers.closure import canonical_orientation, is_well_oriented
from analyzers.core_scheme import reroot, rootable_stems, unroot_key
from analyzers.map_enumerator import DartGluer
from models.blossoming_map import BlossomingMap, StemKind, blossoming_canonical_form
from models.errors import DomainError, ResourceLimit
from models.rooted_map import RootedMap, canonical_form, rootings
from models.scheme import UnlabeledScheme


@dataclass(frozen=True)
class SchemeClass:
    """the rooted schemes sharing one unrooted scheme"""
    key: tuple
    members: tuple[UnlabeledScheme, ...]

    @property
    def n_degree_four(self) -> int:
        return self.members[0].n_degree_four

    @property
    def n_vertices(self) -> int:
        return self.members[0].n_vertices

    @property
    def genus(self) -> int:
        return self.members[0].map.genus

    @property
    def trunk_count(self) -> int:
        """2g - |n2|"""
        return 2 * self.genus - self.n_degree_four

    @cached_property
    def rootings(self) -> tuple[UnlabeledScheme, ...]:
        """
        the member reached by rerooting at each rootable stem, repeats
        included: a symmetric scheme hits the same member more than once
        """
        by_key = {blossoming_canonical_form(s.map).key: s for s in self.members}
        first = self.members[0].map
        found = []
        for stem in rootable_stems(first):
            key = blossoming_canonical_form(reroot(first, stem)).key
            if key not in by_key:
                raise DomainError(f"rerooting at stem {stem} leaves the class")
            found.append(by_key[key])
        return tuple(found)


def _vertex_range(g: int) -> range:
    if g < 1 or g > config.scheme_max_genus:
        raise ResourceLimit(f"schemes are only enumerated for genus 1..{config.scheme_max_genus}")
    # 4g - 2 vertices is the all-trivalent case
    return range(2 * g, 4 * g - 1)


def rooted_schemes(g: int, verbose: bool = False) -> Iterator[UnlabeledScheme]:
    """
    every rooted scheme of genus g: interior degrees 3 or 4, at most one stem
    per vertex, root bud on a stem, canonical orientation eulerian
    """
    for n_vertices in _vertex_range(g):
        n_darts = 4 * n_vertices
        n_stems = 2 * n_vertices - 4 * g + 2
        if verbose:
            print(f"🔍 gluing genus {g} schemes on {n_vertices} vertices...", file=sys.stderr)
        gluer = DartGluer(
            n_darts, degrees={4}, stems=n_stems, max_stems_per_vertex=1, unicellular=True, root_is_stem=True
        )
        for sigma, alpha in gluer.run():
            skeleton = BlossomingMap(
                n_darts=n_darts, sigma=sigma, alpha=alpha, kinds=(None,) * (n_darts + 1), root_dart=1
            )
            if skeleton.genus != g:
                continue
            scheme = _with_forced_kinds(skeleton)
            if scheme is not None:
                yield scheme


def _with_forced_kinds(skeleton: BlossomingMap) -> UnlabeledScheme | None:
    """a stem is a bud exactly when its vertex is one outgoing edge short"""
    orientation = canonical_orientation(skeleton)
    kinds = {}
    for cycle in skeleton.vertices:
        stems = [d for d in cycle if skeleton.is_stem(d)]
        outs = sum(1 for d in cycle if not skeleton.is_stem(d) and orientation.is_tail(d))
        if not stems:
            if outs != 2:
                return None
            continue
        if outs not in (1, 2):
            return None
        kinds[stems[0]] = StemKind.BUD if outs == 1 else StemKind.LEAF
    u = skeleton.with_kinds(kinds)
    if not u.root_is_bud or not is_well_oriented(u, orientation):
        return None
    return UnlabeledScheme(u, orientation)


def enumerate_schemes(g: int, verbose: bool = False) -> list[SchemeClass]:
    """rooted schemes of genus g grouped by unrooted key, classes in key order"""
    groups = defaultdict(list)
    for s in rooted_schemes(g, verbose=verbose):
        groups[unroot_key(s.map)].append(s)
    classes = [SchemeClass(key, tuple(members)) for key, members in sorted(groups.items())]
    if verbose:
        total = sum(len(c.members) for c in classes)
        print(f"✅ {total} rooted schemes of genus {g} in {len(classes)} classes", file=sys.stderr)
    return classes


def all_rooted_schemes(g: int) -> list[UnlabeledScheme]:
    return [s for c in enumerate_schemes(g) for s in c.members]


def interior_shapes(g: int) -> list[RootedMap]:
    """
    unrooted stemless unicellular maps of genus g with vertex degrees 3 and 4,
    one rooted representative each
    """
    shapes = {}
    for n_vertices in range(1, _vertex_range(g).stop):
        n_edges = n_vertices + 2 * g - 1
        if not 3 * n_vertices <= 2 * n_edges <= 4 * n_vertices:
            continue
        gluer = DartGluer(2 * n_edges, degrees={3, 4}, unicellular=True)
        for sigma, alpha in gluer.run():
            m = RootedMap(n_darts=2 * n_edges, sigma=sigma, alpha=alpha, root_dart=1)
            if m.genus != g:
                continue
            key = min(r.key for r in rootings(m))
            shapes.setdefault(key, canonical_form(m))
    return [shapes[k] for k in sorted(shapes)]


def shape_of(s: UnlabeledScheme) -> tuple:
    """unrooted key of the stemless interior of a scheme"""
    u = s.map
    interior = [d for d in u.darts if not u.is_stem(d)]
    new = {d: i + 1 for i, d in enumerate(interior)}
    sigma = [0] * (len(interior) + 1)
    for d in interior:
        e = u.sigma[d]
        while u.is_stem(e):
            e = u.sigma[e]
        sigma[new[d]] = new[e]
    alpha = [0] + [new[u.alpha[d]] for d in interior]
    m = RootedMap(n_darts=len(interior), sigma=tuple(sigma), alpha=tuple(alpha), root_dart=1)
    return min(r.key for r in rootings(m))


def shape_report(g: int) -> list[dict]:
    """each interior shape with the number of scheme classes and rooted schemes it carries"""
    classes = enumerate_schemes(g)
    rows = []
    for shape in interior_shapes(g):
        key = min(r.key for r in rootings(shape))
        carried = [c for c in classes if shape_of(c.members[0]) == key]
        rows.append({
            "vertices": shape.n_vertices,
            "edges": shape.n_edges,
            "classes": len(carried),
            "rooted_schemes": sum(len(c.members) for c in carried),
        })
    return rows
