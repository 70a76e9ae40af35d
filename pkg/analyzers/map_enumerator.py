# analyzers/map_enumerator.py
# exhaustive brute-force enumeration of rooted maps (the counting oracle)

import sys
from collections.abc import Iterator
from itertools import permutations
from math import factorial

import config
from analyzers.map_analyzer import MapAnalyzer, verify_propp
from analyzers.radial import radial, radial_inverse
from models.count_table import CountTable
from models.errors import ResourceLimit
from models.rooted_map import RootedMap, canonical_form
from models.verification import VerificationReport

UNSET = -1
STEM = 0


class DartGluer:
    """
    canonical dart gluing. darts are labelled in the breadth-first order
    (sigma, sigma^-1, alpha) from the root dart 1; processing dart d fixes
    sigma(d), then sigma^-1(d), then alpha(d), each either an already
    labelled dart or the next fresh label. every rooted map (or blossoming
    map) on n_darts darts is produced exactly once, already in canonical form.
    """

    def __init__(
        self,
        n_darts: int,
        degrees: set[int] | None = None,
        stems: int = 0,
        max_stems_per_vertex: int | None = None,
        unicellular: bool = False,
        root_is_stem: bool = False,
        max_nodes: int | None = None,
    ):
        self.n = n_darts
        self.degrees = degrees
        self.max_degree = max(degrees) if degrees else n_darts
        self.stems = stems
        self.max_stems_per_vertex = max_stems_per_vertex
        self.unicellular = unicellular
        self.root_is_stem = root_is_stem
        self.max_nodes = config.max_nodes if max_nodes is None else max_nodes
        self.nodes = 0

        size = n_darts + 2
        self.sigma = [UNSET] * size
        self.sigma_inv = [UNSET] * size
        self.alpha = [UNSET] * size
        self.top = 0
        self.stem_count = 0

    # --- search ---

    def run(self) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """yields (sigma, alpha) as 1-based tuples; alpha is 0 on stems"""
        if self.n <= 0:
            return
        self.top = 1
        yield from self._process(1)

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise ResourceLimit(f"search exceeded {self.max_nodes} nodes (set MAPFORGE_MAX_NODES to raise it)")

    def _process(self, d: int):
        if d > self.top:
            if self.top == self.n and self.stem_count == self.stems:
                yield tuple([0] + self.sigma[1:self.n + 1]), tuple([0] + self.alpha[1:self.n + 1])
            return
        yield from self._choose_sigma(d)

    def _fresh(self) -> int | None:
        return self.top + 1 if self.top < self.n else None

    def _choose_sigma(self, d: int):
        if self.sigma[d] != UNSET:
            yield from self._choose_sigma_inv(d)
            return
        for e in self._candidates(self.sigma_inv):
            self._tick()
            fresh = e > self.top
            if fresh:
                self.top += 1
            self.sigma[d], self.sigma_inv[e] = e, d
            if self._vertex_ok(d) and self._faces_ok(self._phi_sources_after_sigma(d)):
                yield from self._choose_sigma_inv(d)
            self.sigma[d], self.sigma_inv[e] = UNSET, UNSET
            if fresh:
                self.top -= 1

    def _choose_sigma_inv(self, d: int):
        if self.sigma_inv[d] != UNSET:
            yield from self._choose_alpha(d)
            return
        for e in self._candidates(self.sigma):
            self._tick()
            fresh = e > self.top
            if fresh:
                self.top += 1
            self.sigma[e], self.sigma_inv[d] = d, e
            if self._vertex_ok(d) and self._faces_ok(self._phi_sources_after_sigma(e)):
                yield from self._choose_alpha(d)
            self.sigma[e], self.sigma_inv[d] = UNSET, UNSET
            if fresh:
                self.top -= 1

    def _choose_alpha(self, d: int):
        if self.alpha[d] != UNSET:
            yield from self._process(d + 1)
            return
        options = []
        if self.stem_count < self.stems:
            options.append(STEM)
        if not (self.root_is_stem and d == 1):
            options.extend(e for e in self._candidates(self.alpha) if e != d)
        for e in options:
            self._tick()
            if e == STEM:
                self.alpha[d] = STEM
                self.stem_count += 1
                if self._vertex_ok(d) and self._faces_ok([d]):
                    yield from self._process(d + 1)
                self.stem_count -= 1
                self.alpha[d] = UNSET
                continue
            fresh = e > self.top
            if fresh:
                self.top += 1
            self.alpha[d], self.alpha[e] = e, d
            if self._faces_ok([d, e]):
                yield from self._process(d + 1)
            self.alpha[d], self.alpha[e] = UNSET, UNSET
            if fresh:
                self.top -= 1

    def _candidates(self, taken: list[int]) -> list[int]:
        """labelled darts whose slot in `taken` is free, then the fresh label"""
        out = [e for e in range(1, self.top + 1) if taken[e] == UNSET]
        fresh = self._fresh()
        if fresh is not None:
            out.append(fresh)
        return out

    # --- pruning ---

    def _vertex_ok(self, d: int) -> bool:
        """degree and stem bounds on the (possibly open) sigma-chain through d"""
        chain = [d]
        x = d
        closed = False
        while self.sigma[x] != UNSET:
            x = self.sigma[x]
            if x == d:
                closed = True
                break
            chain.append(x)
        if not closed:
            x = d
            while self.sigma_inv[x] != UNSET:
                x = self.sigma_inv[x]
                chain.append(x)
        if closed and self.degrees is not None and len(chain) not in self.degrees:
            return False
        if len(chain) > self.max_degree:
            return False
        if self.max_stems_per_vertex is not None:
            if sum(1 for x in chain if self.alpha[x] == STEM) > self.max_stems_per_vertex:
                return False
        return True

    def _phi_sources_after_sigma(self, a: int) -> list[int]:
        # phi(y) = sigma(alpha(y)), or sigma(y) on a stem
        sources = []
        if self.alpha[a] == STEM:
            sources.append(a)
        elif self.alpha[a] != UNSET:
            sources.append(self.alpha[a])
        return sources

    def _phi(self, y: int) -> int:
        a = self.alpha[y]
        if a == UNSET:
            return UNSET
        return self.sigma[y] if a == STEM else self.sigma[a]

    def _faces_ok(self, sources: list[int]) -> bool:
        """with unicellular set, no face may close before all darts are used"""
        if not self.unicellular:
            return True
        for y in sources:
            length = 1
            x = self._phi(y)
            while x != UNSET and x != y:
                length += 1
                x = self._phi(x)
            if x == y and length < self.n:
                return False
        return True


def enumerate_rooted_maps(g: int, n_edges: int, max_nodes: int | None = None) -> Iterator[RootedMap]:
    """every rooted map of genus g with n_edges edges, once each"""
    if n_edges > config.max_edges:
        raise ResourceLimit(f"{n_edges} edges exceeds the configured bound of {config.max_edges}")
    if n_edges == 0:
        if g == 0:
            yield RootedMap.vertex_map()
        return
    gluer = DartGluer(2 * n_edges, max_nodes=max_nodes)
    for sigma, alpha in gluer.run():
        m = RootedMap(n_darts=2 * n_edges, sigma=sigma, alpha=alpha, root_dart=1)
        if m.genus == g:
            yield m


def count_univariate(g: int, max_edges: int) -> CountTable:
    table = CountTable(g, ("E",))
    for n in range(max_edges + 1):
        table.add((n,), sum(1 for _ in enumerate_rooted_maps(g, n)))
    return table


def count_bivariate(g: int, max_edges: int) -> CountTable:
    """rooted maps of genus g with at most max_edges edges, by (V, F)"""
    table = CountTable(g, ("V", "F"))
    for n in range(max_edges + 1):
        table = table.merge(bivariate_slice(g, n))
    return table


def bivariate_slice(g: int, n_edges: int) -> CountTable:
    """rooted maps of genus g with exactly n_edges edges, by (V, F)"""
    table = CountTable(g, ("V", "F"))
    for m in enumerate_rooted_maps(g, n_edges):
        table.add((m.n_vertices, m.n_faces))
    return table


def enumerate_4valent_bicolorable(g: int, n_vertices: int, max_nodes: int | None = None) -> CountTable:
    """rooted 4-valent bicolorable maps of genus g, by (F_black, F_white)"""
    if 2 * n_vertices > config.max_edges:
        raise ResourceLimit(f"{n_vertices} vertices exceeds the configured bound")
    table = CountTable(g, ("F_black", "F_white"))
    gluer = DartGluer(4 * n_vertices, degrees={4}, max_nodes=max_nodes)
    for sigma, alpha in gluer.run():
        m = RootedMap(n_darts=4 * n_vertices, sigma=sigma, alpha=alpha, root_dart=1)
        if m.genus != g:
            continue
        analyzer = MapAnalyzer(m)
        if analyzer.is_bicolorable():
            coloring = analyzer.face_coloring()
            table.add((coloring.n_black, coloring.n_white))
    return table


def census_by_sigma_scan(n_edges: int) -> dict[int, int]:
    """
    secondary strategy: fix alpha = (1 2)(3 4)..., scan every sigma and count
    transitive pairs by genus; rooted maps = pairs * 2n / (2^n n!)
    """
    if n_edges > 3:
        raise ResourceLimit("the sigma scan is only meant for n_edges <= 3")
    n = 2 * n_edges
    alpha = [0] * (n + 1)
    for k in range(1, n + 1, 2):
        alpha[k], alpha[k + 1] = k + 1, k
    alpha = tuple(alpha)

    pairs: dict[int, int] = {}
    for image in permutations(range(1, n + 1)):
        sigma = (0,) + image
        m = RootedMap(n_darts=n, sigma=sigma, alpha=alpha, root_dart=1)
        if not _transitive(m):
            continue
        pairs[m.genus] = pairs.get(m.genus, 0) + 1

    divisor = 2 ** n_edges * factorial(n_edges)
    return {g: c * n // divisor for g, c in sorted(pairs.items())}


def _transitive(m: RootedMap) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        d = stack.pop()
        for e in (m.sigma[d], m.alpha[d]):
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return len(seen) == m.n_darts


def verify_radial(g: int, max_edges: int, verbose: bool = False) -> VerificationReport:
    """radial is genus-preserving, 4-valent, bicolorable, inverted by radial_inverse, and pushes (V, F) to (F_black, F_white)"""
    report = VerificationReport(f"radial construction (genus {g})")
    for n in range(max(1, 2 * g), max_edges + 1):
        if verbose:
            print(f"🔍 radial images of genus {g} maps with {n} edges...", file=sys.stderr)
        pushed = CountTable(g, ("F_black", "F_white"))
        for m in enumerate_rooted_maps(g, n):
            report.checked += 1
            result = radial(m)
            r = result.map
            if r.genus != g or any(len(c) != 4 for c in r.vertices) or r.n_vertices != n:
                report.fail("radial map has the wrong genus or degrees", m)
                continue
            coloring = MapAnalyzer(r).face_coloring()
            if (coloring.n_black, coloring.n_white) != (m.n_vertices, m.n_faces):
                report.fail("radial face colors do not count vertices and faces", m)
            if radial_inverse(r).key != canonical_form(m).key:
                report.fail("radial_inverse does not undo radial", m)
            pushed.add((coloring.n_black, coloring.n_white))
        # the 4-valent census is only affordable for small sizes
        if 2 * n > config.max_edges:
            report.details[f"edges={n}"] = "census comparison skipped"
        elif pushed != enumerate_4valent_bicolorable(g, n):
            report.fail(f"radial census mismatch at {n} edges", pushed)
    if verbose:
        print(f"{'✅' if report.passed else '❌'} {report.checked} maps checked", file=sys.stderr)
    return report.raise_for_failure()


def verify_propp_census(max_edges: int, verbose: bool = False) -> VerificationReport:
    """verify_propp on every bicolorable rooted map with at most max_edges edges"""
    report = VerificationReport("unique bicolorable orientation without clockwise face")
    for n in range(1, max_edges + 1):
        for g in range(n // 2 + 1):
            for m in enumerate_rooted_maps(g, n):
                if not MapAnalyzer(m).is_bicolorable():
                    continue
                report.checked += 1
                if not verify_propp(m):
                    report.fail(f"orientation count is not one at {n} edges", m)
    if verbose:
        print(f"{'✅' if report.passed else '❌'} {report.checked} bicolorable maps checked", file=sys.stderr)
    return report.raise_for_failure()
