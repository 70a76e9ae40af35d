# analyzers/core_scheme.py
# pruning to cores, schemes and their statistics, rerooting and scheme trunks

import sys
from collections import defaultdict, deque
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations, product

import networkx as nx

from analyzers.closure import (
    canonical_labeling,
    canonical_orientation,
    is_well_labeled,
    is_well_oriented,
    leaf_colors,
)
from models.blossoming_map import SINGLE_LEAF, BlossomingMap, StemKind, blossoming_canonical_form
from models.errors import (
    CyclicOffsetGraph,
    DomainError,
    NotRootable,
    NotSchemeRooted,
)
from models.rooted_map import Orientation
from models.scheme import (
    BinaryBijection,
    BlossomingCore,
    EdgeClass,
    LabeledScheme,
    PruneResult,
    RemovedTree,
    StemClass,
    TruncatedEdge,
    Truncation,
    UnlabeledScheme,
)
from models.verification import VerificationReport

BUD, LEAF = StemKind.BUD, StemKind.LEAF


# --- pruning ---

def prune(u: BlossomingMap, orientation: Orientation | None = None) -> PruneResult:
    """
    remove vertices of interior degree 1 until none is left. the dart left
    behind by each removed edge becomes a stem: a bud if it was a tail, a
    leaf if it was a head.
    """
    o = orientation or canonical_orientation(u)
    degree = [u.interior_degree(v) for v in range(u.n_vertices)]
    removed = [False] * u.n_vertices
    cut = set()
    alive = u.n_vertices
    queue = deque(v for v in range(u.n_vertices) if degree[v] == 1)
    while queue:
        v = queue.popleft()
        if removed[v] or degree[v] != 1 or alive == 1:
            continue
        d = next(x for x in u.vertices[v] if u.alpha[x] and x not in cut)
        x = u.alpha[d]
        removed[v] = True
        alive -= 1
        cut.update((d, x))
        w = u.vertex_of[x]
        degree[w] -= 1
        if degree[w] == 1:
            queue.append(w)

    kept = [d for d in u.darts if not removed[u.vertex_of[d]]]
    new = {d: i + 1 for i, d in enumerate(kept)}
    trees = {}
    root = u.root_dart if not removed[u.vertex_of[u.root_dart]] else None
    for x in kept:
        if x not in cut:
            continue
        tree = _removed_tree(u, x)
        trees[new[x]] = tree
        if u.root_dart in tree.darts:
            root = x

    m = len(kept)
    sigma, alpha, kinds = [0] * (m + 1), [0] * (m + 1), [None] * (m + 1)
    heads = set()
    for d in kept:
        sigma[new[d]] = new[u.sigma[d]]
        if u.is_stem(d):
            kinds[new[d]] = u.kinds[d]
        elif d in cut:
            kinds[new[d]] = BUD if o.is_tail(d) else LEAF
        else:
            alpha[new[d]] = new[u.alpha[d]]
            if o.is_head(d):
                heads.add(new[d])
    core = BlossomingMap(
        n_darts=m, sigma=tuple(sigma), alpha=tuple(alpha), kinds=tuple(kinds), root_dart=new[root]
    )
    return PruneResult(
        core=BlossomingCore(core, canonical_labeling(core), Orientation(frozenset(heads))),
        source={e: d for d, e in new.items()},
        trees=trees,
        n_darts=u.n_darts,
        root_dart=u.root_dart,
    )


def _removed_tree(u: BlossomingMap, x: int) -> RemovedTree:
    """the tree hanging from the core dart x, found by walking away from it"""
    y = u.alpha[x]
    darts = []
    seen = {u.vertex_of[y]}
    stack = [u.vertex_of[y]]
    while stack:
        v = stack.pop()
        for d in u.vertices[v]:
            darts.append(d)
            a = u.alpha[d]
            if a and a != x and u.vertex_of[a] not in seen:
                seen.add(u.vertex_of[a])
                stack.append(u.vertex_of[a])
    darts.sort()
    return RemovedTree(
        attachment=y,
        darts=tuple(darts),
        sigma={d: u.sigma[d] for d in darts},
        alpha={d: (0 if d == y else u.alpha[d]) for d in darts},
        kinds={d: u.kinds[d] for d in darts if u.is_stem(d)},
    )


def regraft(result: PruneResult) -> BlossomingMap:
    """put the removed trees back; inverse of prune"""
    n = result.n_darts
    sigma, alpha, kinds = [0] * (n + 1), [0] * (n + 1), [None] * (n + 1)
    core, source = result.core.map, result.source
    for d, old in source.items():
        sigma[old] = source[core.sigma[d]]
        alpha[old] = source[core.alpha[d]] if core.alpha[d] else 0
        kinds[old] = core.kinds[d]
    for stem, tree in result.trees.items():
        x = source[stem]
        for d in tree.darts:
            sigma[d] = tree.sigma[d]
            alpha[d] = tree.alpha[d]
            kinds[d] = tree.kinds.get(d)
        alpha[x], alpha[tree.attachment] = tree.attachment, x
        kinds[x] = None
    return BlossomingMap(
        n_darts=n, sigma=tuple(sigma), alpha=tuple(alpha), kinds=tuple(kinds), root_dart=result.root_dart
    )


def tree_as_map(tree: RemovedTree, attachment_kind: StemKind, leaf_darts: set[int] = frozenset()) -> BlossomingMap:
    """a removed tree as a blossoming map planted at its attachment dart"""
    new = {d: i + 1 for i, d in enumerate(tree.darts)}
    n = len(tree.darts)
    sigma, alpha, kinds = [0] * (n + 1), [0] * (n + 1), [None] * (n + 1)
    for d in tree.darts:
        sigma[new[d]] = new[tree.sigma[d]]
        if tree.alpha[d]:
            alpha[new[d]] = new[tree.alpha[d]]
        elif d == tree.attachment:
            kinds[new[d]] = attachment_kind
        else:
            kinds[new[d]] = LEAF if d in leaf_darts else tree.kinds[d]
    return BlossomingMap(
        n_darts=n, sigma=tuple(sigma), alpha=tuple(alpha), kinds=tuple(kinds), root_dart=new[tree.attachment]
    )


# --- branches and schemes ---

def follow_branch(u: BlossomingMap, dart: int) -> tuple[list[tuple[int, int]], int]:
    """
    walk from `dart` through vertices of interior degree 2. returns the
    (incoming, outgoing) dart pairs crossed and the dart where the walk
    reaches a vertex of another interior degree.
    """
    passes = []
    x = u.alpha[dart]
    while u.interior_degree(u.vertex_of[x]) == 2:
        y = next(d for d in u.vertices[u.vertex_of[x]] if u.alpha[d] and d != x)
        passes.append((x, y))
        x = u.alpha[y]
        if x == dart or len(passes) > u.n_darts:
            raise DomainError("branch closes on itself without meeting a scheme vertex")
    return passes, x


def is_branch_coherent(core: BlossomingCore, dart: int) -> bool:
    """every edge of the branch leaving `dart` points the same way"""
    o = core.orientation
    outward = o.is_tail(dart)
    passes, head = follow_branch(core.map, dart)
    for incoming, outgoing in passes:
        if o.is_head(incoming) != outward or o.is_tail(outgoing) != outward:
            return False
    return o.is_head(head) == outward


def scheme_of(core: BlossomingCore) -> LabeledScheme:
    """replace every branch by a single edge; scheme vertices keep their corner labels"""
    if not core.is_scheme_rooted:
        raise NotSchemeRooted("the root bud must sit on a vertex of interior degree at least 3")
    u = core.map
    scheme_vertices = set(core.scheme_vertices)
    kept = [d for d in u.darts if u.vertex_of[d] in scheme_vertices]
    new = {d: i + 1 for i, d in enumerate(kept)}
    m = len(kept)
    sigma, alpha, kinds = [0] * (m + 1), [0] * (m + 1), [None] * (m + 1)
    heads = set()
    for d in kept:
        sigma[new[d]] = new[u.sigma[d]]
        if u.is_stem(d):
            kinds[new[d]] = u.kinds[d]
            continue
        if not is_branch_coherent(core, d):
            raise DomainError(f"the branch leaving dart {d} changes orientation")
        _, head = follow_branch(u, d)
        alpha[new[d]] = new[head]
        if core.orientation.is_head(d):
            heads.add(new[d])
    s = BlossomingMap(n_darts=m, sigma=tuple(sigma), alpha=tuple(alpha), kinds=tuple(kinds), root_dart=new[u.root_dart])
    scheme = UnlabeledScheme(s, Orientation(frozenset(heads)))
    return LabeledScheme.from_labels(scheme, {new[d]: core.labeling.labels[d] for d in kept})


def core_of(u: BlossomingMap) -> BlossomingCore:
    return prune(u).core


# --- rerooting and trunks ---

def rootable_stems(u: BlossomingMap) -> list[int]:
    return [d for d in u.stems if u.kinds[d] is LEAF or d == u.root_dart]


def reroot(u: BlossomingMap, stem: int) -> BlossomingMap:
    """the root bud becomes a leaf and `stem` the new root bud"""
    if stem not in rootable_stems(u):
        raise NotRootable(f"dart {stem} is neither a leaf nor the root bud")
    if stem == u.root_dart:
        return u
    return u.with_kinds({u.root_dart: LEAF, stem: BUD}, root_dart=stem)


def unroot_key(u: BlossomingMap) -> tuple:
    """smallest canonical key over the rootings at rootable stems"""
    return min(blossoming_canonical_form(reroot(u, s)).key for s in rootable_stems(u))


def scheme_trunks(o: BlossomingMap) -> list[int]:
    """
    darts at scheme vertices that are either rootable stems or the end of
    an edge that pruning removes
    """
    if o.genus == 0:
        raise DomainError("planar maps have no scheme")
    result = prune(o)
    core = result.core.map
    core_darts = set(result.source.values())
    trunks = []
    for v in result.core.scheme_vertices:
        for d in core.vertices[v]:
            old = result.source[d]
            if o.is_stem(old):
                if o.kinds[old] is LEAF or old == o.root_dart:
                    trunks.append(old)
            elif o.alpha[old] not in core_darts:
                trunks.append(old)
    return sorted(trunks)


@dataclass(frozen=True)
class DecoratedCore:
    """a scheme-rooted core and one planted tree per rootable stem"""
    core: BlossomingCore
    trees: dict[int, BlossomingMap]


def to_decorated_core(o: BlossomingMap, trunk: int) -> DecoratedCore:
    """prune o, reroot the core at the trunk, and hang the removed trees on its rootable stems"""
    if trunk not in scheme_trunks(o):
        raise NotRootable(f"dart {trunk} is not a scheme trunk")
    result = prune(o)
    new_of = {old: d for d, old in result.source.items()}
    r = reroot(result.core.map, new_of[trunk])
    core = BlossomingCore(r, canonical_labeling(r), canonical_orientation(r))

    trees = {}
    for s in rootable_stems(r):
        tree = result.trees.get(s)
        if tree is None:
            trees[s] = SINGLE_LEAF
        else:
            trees[s] = tree_as_map(tree, result.core.map.kinds[s].other, leaf_darts={o.root_dart})
    return DecoratedCore(core, trees)


def marked_key(o: BlossomingMap, trunk: int) -> tuple:
    """o with its root bud turned into a leaf, rooted at the trunk"""
    return blossoming_canonical_form(o.with_kinds({o.root_dart: LEAF}, root_dart=trunk)).key


def fibres_of_decorated_cores(g: int, n_interior_edges: int, verbose: bool = False) -> VerificationReport:
    """
    every (good map, trunk) pair with at most n_interior_edges interior edges
    is sent to its marked key; each key must be hit exactly twice, the two
    maps exchanging black and white leaves
    """
    from analyzers.good_maps import good_maps

    report = VerificationReport(f"decorated cores (genus {g}, up to {n_interior_edges} interior edges)")
    fibres = defaultdict(list)
    maps = (o for n in range(2 * g, n_interior_edges + 1) for o in good_maps(g, n))
    for o in maps:
        colors = leaf_colors(o)
        trunks = scheme_trunks(o)
        for tau in trunks:
            report.checked += 1
            decorated = to_decorated_core(o, tau)
            r = decorated.core
            if not (r.is_scheme_rooted and is_well_oriented(r.map, r.orientation)
                    and is_well_labeled(r.map, r.labeling, r.orientation)):
                report.fail("decorated core is not a well-labeled scheme-rooted core", (o, tau))
                continue
            if r.map.n_darts + sum(t.n_darts for t in decorated.trees.values()) != o.n_darts:
                report.fail("a removed tree is not hung on a rootable stem", (o, tau))
            scheme = scheme_of(r).scheme
            if len(trunks) != 2 * g - scheme.n_degree_four:
                report.fail("trunk count differs from 2g - |n2|", o)
            fibres[marked_key(o, tau)].append(colors)

    for key, members in fibres.items():
        if len(members) != 2:
            report.fail(f"fibre of size {len(members)}", key)
            continue
        (b1, w1), (b2, w2) = members
        if w1 != b2 + 1 or w2 != b1 + 1:
            report.fail("leaf colors are not exchanged within a fibre", key)
    report.details["fibres"] = len(fibres)
    if verbose:
        print(f"{'✅' if report.passed else '❌'} {len(fibres)} fibres from {report.checked} marked maps",
              file=sys.stderr)
    return report


# --- unlabeled schemes ---

def classify_edges(s: UnlabeledScheme) -> tuple[dict[int, EdgeClass], dict[int, StemClass]]:
    """edge classes keyed by tail dart, stem classes keyed by stem"""
    edges = {e.tail: e.edge_class for e in s.edges}
    stems = {d: s.stem_class(d) for d in s.map.stems}
    return edges, stems


def offset_graph(s: UnlabeledScheme) -> nx.MultiDiGraph:
    g = nx.MultiDiGraph()
    g.add_nodes_from(range(s.n_vertices))
    g.add_edges_from(s.offset_arcs)
    return g


def consistent_naming(s: UnlabeledScheme) -> tuple[int, ...]:
    """
    naming[v] in 1..n, a linear extension of the offset graph; ties go to
    the smallest vertex index
    """
    try:
        order = list(nx.lexicographical_topological_sort(offset_graph(s)))
    except nx.NetworkXUnfeasible as exc:
        raise CyclicOffsetGraph(f"offset graph has a cycle: {s.offset_arcs}") from exc
    naming = [0] * s.n_vertices
    for i, v in enumerate(order):
        naming[v] = i + 1
    return tuple(naming)


def is_consistent(s: UnlabeledScheme, naming: tuple[int, ...]) -> bool:
    if sorted(naming) != list(range(1, s.n_vertices + 1)):
        return False
    return all(naming[u] < naming[v] for u, v in s.offset_arcs)


# --- labeled schemes ---

def labeled_schemes(s: UnlabeledScheme, height_bound: int) -> Iterator[LabeledScheme]:
    """every labeling of s with the root corner at 0 and heights in [-bound, bound]"""
    root = s.root_vertex
    root_height = -s.relative_labels[s.map.root_dart]
    others = [v for v in range(s.n_vertices) if v != root]
    for values in product(range(-height_bound, height_bound + 1), repeat=len(others)):
        heights = [0] * s.n_vertices
        heights[root] = root_height
        for v, h in zip(others, values):
            heights[v] = h
        yield LabeledScheme(s, tuple(heights))


def height_order(l: LabeledScheme, naming: tuple[int, ...]) -> tuple[int, ...]:
    """vertices by (height, name)"""
    return tuple(sorted(range(len(l.heights)), key=lambda v: (l.heights[v], naming[v])))


def binary_bijection(l: LabeledScheme, naming: tuple[int, ...]) -> BinaryBijection:
    pi = height_order(l, naming)
    zeta = tuple((l.heights[b] - l.heights[a]) % 2 for a, b in zip(pi, pi[1:]))
    return BinaryBijection(pi, zeta)


def mirror_order(pi: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(reversed(pi))


@dataclass(frozen=True)
class SchemeStats:
    """
    statistics of a scheme under a vertex order pi (k is 1-based):
    discordance, enclosing edge counts, overfitting and underfitting
    edges, and regular/shifted buds at each relative height
    """
    n: int
    delta_plus: tuple[int, ...]                  # k = 1..n-1
    c_plus: tuple[int, ...]                      # k = 1..n
    c_minus: tuple[int, ...]
    overfit: tuple[frozenset[int], ...]          # edge indices, k = 1..n
    underfit: tuple[frozenset[int], ...]
    buds_regular: tuple[int, ...]
    buds_shifted: tuple[int, ...]

    def delta(self, k: int) -> int:
        return self.delta_plus[k - 1]

    def delta_minus(self, k: int) -> int:
        """defined for 2 <= k <= n"""
        return self.delta_plus[k - 2]

    def C_plus(self, k: int) -> int:
        return self.c_plus[k - 1]

    def C_minus(self, k: int) -> int:
        return self.c_minus[k - 1]

    def O(self, k: int) -> int:
        return len(self.overfit[k - 1])

    def U(self, k: int) -> int:
        return len(self.underfit[k - 1])

    @property
    def O_total(self) -> int:
        return sum(len(x) for x in self.overfit)

    @property
    def U_total(self) -> int:
        return sum(len(x) for x in self.underfit)

    def to_json(self) -> dict:
        return {
            "delta_plus": list(self.delta_plus),
            "C_plus": list(self.c_plus),
            "C_minus": list(self.c_minus),
            "O": [len(x) for x in self.overfit],
            "U": [len(x) for x in self.underfit],
            "B": list(self.buds_regular),
            "B_plus": list(self.buds_shifted),
        }


def scheme_stats(s: UnlabeledScheme, pi: tuple[int, ...], naming: tuple[int, ...]) -> SchemeStats:
    n = len(pi)
    pos = {v: k + 1 for k, v in enumerate(pi)}
    c_plus, c_minus = [0] * n, [0] * n
    overfit = [set() for _ in range(n)]
    underfit = [set() for _ in range(n)]
    for i, e in enumerate(s.edges):
        if e.is_loop:
            continue
        lo, hi = sorted((pos[e.tail_vertex], pos[e.head_vertex]))
        for k in range(lo, hi):
            c_plus[k - 1] += 1
        for k in range(lo + 1, hi + 1):
            c_minus[k - 1] += 1
        for v, other in ((e.tail_vertex, e.head_vertex), (e.head_vertex, e.tail_vertex)):
            if e.edge_class is EdgeClass.SHIFTED or e.offset_target == v:
                (overfit if pos[other] < pos[v] else underfit)[pos[v] - 1].add(i)
    return SchemeStats(
        n=n,
        delta_plus=tuple(int(naming[pi[k]] <= naming[pi[k - 1]]) for k in range(1, n)),
        c_plus=tuple(c_plus),
        c_minus=tuple(c_minus),
        overfit=tuple(frozenset(x) for x in overfit),
        underfit=tuple(frozenset(x) for x in underfit),
        buds_regular=tuple(s.buds_at(v, StemClass.REGULAR) for v in pi),
        buds_shifted=tuple(s.buds_at(v, StemClass.SHIFTED) for v in pi),
    )


def verify_mirror_statistics(s: UnlabeledScheme, naming: tuple[int, ...] | None = None) -> VerificationReport:
    """the statistics of the mirrored order are those of the original, read backwards"""
    naming = naming or consistent_naming(s)
    report = VerificationReport("mirror statistics")
    for pi in permutations(range(s.n_vertices)):
        report.checked += 1
        a, b = scheme_stats(s, pi, naming), scheme_stats(s, mirror_order(pi), naming)
        n = a.n
        for k in range(1, n + 1):
            kb = n + 1 - k
            if b.C_plus(k) != a.C_minus(kb):
                report.fail(f"C+ at {k}", pi)
            if b.overfit[k - 1] != a.underfit[kb - 1] or b.underfit[k - 1] != a.overfit[kb - 1]:
                report.fail(f"overfit/underfit at {k}", pi)
            if b.buds_regular[k - 1] != a.buds_regular[kb - 1] or b.buds_shifted[k - 1] != a.buds_shifted[kb - 1]:
                report.fail(f"buds at {k}", pi)
            if k < n and b.delta(k) != 1 - a.delta_minus(kb):
                report.fail(f"discordance at {k}", pi)
        if b.O_total != a.U_total:
            report.fail("total overfit", pi)
    return report


# --- truncations ---

def truncate(l: LabeledScheme, naming: tuple[int, ...], k: int, ascending: bool = True) -> Truncation:
    """
    merge the vertices below (ascending) or above (descending) relative
    height k into pi(k); their half-edges get type 0, stems and the loops
    created by the merge disappear
    """
    pi = height_order(l, naming)
    n = len(pi)
    pos = {v: i + 1 for i, v in enumerate(pi)}
    merged = set(range(1, k)) if ascending else set(range(k + 1, n + 1))
    h_k = l.heights[pi[k - 1]]

    edges = []
    for e in l.scheme.edges:
        pt, ph = pos[e.tail_vertex], pos[e.head_vertex]
        tail_in, head_in = pt in merged, ph in merged
        if (tail_in or pt == k) and (head_in or ph == k) and (tail_in or head_in):
            continue
        edges.append(TruncatedEdge(
            tail=k if tail_in else pt,
            head=k if head_in else ph,
            lambda0=h_k if tail_in else l.lambda0(e),
            lambda1=h_k if head_in else l.lambda1(e),
        ))
    return Truncation(
        position=k,
        ascending=ascending,
        heights=tuple((p, l.heights[pi[p - 1]]) for p in range(1, n + 1) if p not in merged),
        edges=tuple(sorted(edges)),
    )
