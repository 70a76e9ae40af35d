# analyzers/closure.py
# contour, canonical labeling and the closure of blossoming maps

from dataclasses import dataclass

from models.blossoming_map import BlossomingMap, CornerLabeling, StemKind
from models.errors import NotUnicellular, NotWellRooted, UnbalancedStems
from models.rooted_map import Orientation, RootedMap


@dataclass(frozen=True)
class ClosureResult:
    """the closed map, the face created by each leaf, and the edge partition"""
    map: RootedMap
    leaf_faces: dict[int, int]  # leaf dart -> face index in the closed map
    orientation: Orientation
    closure_edges: tuple[tuple[int, int], ...]  # (bud, leaf) pairs

    @property
    def proper_edges(self) -> list[tuple[int, int]]:
        closing = {frozenset(e) for e in self.closure_edges}
        return [e for e in self.map.edges if frozenset(e) not in closing]


def clockwise_contour(u: BlossomingMap) -> list[int]:
    """
    corners in contour order from the root corner, the face kept on the right.
    from corner c the walk follows dart c: across the edge to sigma(alpha(c)),
    or, for a stem, straight on to sigma(c).
    """
    if u.is_single_leaf:
        return []
    corners = [u.root_dart]
    c = _next_corner(u, u.root_dart)
    while c != u.root_dart:
        corners.append(c)
        c = _next_corner(u, c)
    if len(corners) != u.n_darts:
        raise NotUnicellular(f"contour visits {len(corners)} of {u.n_darts} corners")
    return corners


def _next_corner(u: BlossomingMap, c: int) -> int:
    return u.sigma[c] if u.is_stem(c) else u.sigma[u.alpha[c]]


def canonical_labeling(u: BlossomingMap) -> CornerLabeling:
    """label 0 at the root corner, +1 after each bud, -1 after each leaf"""
    labels = {}
    value = 0
    for c in clockwise_contour(u):
        labels[c] = value
        if u.is_stem(c):
            value += 1 if u.kinds[c] is StemKind.BUD else -1
    if value != 0:
        raise UnbalancedStems(f"labels end at {value} after a full contour")
    return CornerLabeling(labels)


def is_well_rooted(u: BlossomingMap) -> bool:
    if not u.root_is_bud:
        return False
    return canonical_labeling(u).minimum >= 0


def canonical_orientation(u: BlossomingMap) -> Orientation:
    """the first traversal of each edge along the contour points away from its head"""
    heads = set()
    oriented = set()
    for c in clockwise_contour(u):
        if u.is_stem(c):
            continue
        edge = frozenset((c, u.alpha[c]))
        if edge not in oriented:
            oriented.add(edge)
            heads.add(c)
    return Orientation(frozenset(heads))


def is_well_oriented(u: BlossomingMap, orientation: Orientation | None = None) -> bool:
    """the canonical orientation, buds out and leaves in, is eulerian"""
    o = orientation or canonical_orientation(u)
    for cycle in u.vertices:
        outs = 0
        for d in cycle:
            if u.is_stem(d):
                outs += u.kinds[d] is StemKind.BUD
            else:
                outs += o.is_tail(d)
        if 2 * outs != len(cycle):
            return False
    return True


def is_well_labeled(u: BlossomingMap, labeling: CornerLabeling | None = None,
                    orientation: Orientation | None = None) -> bool:
    """around each vertex, crossing an outgoing edge ccw raises the label by one"""
    lam = (labeling or canonical_labeling(u)).labels
    o = orientation or canonical_orientation(u)
    if lam[u.root_dart] != 0:
        return False
    for d in u.interior_darts:
        step = 1 if o.is_tail(d) else -1
        if lam[u.sigma[d]] != lam[d] + step:
            return False
    return True


def closure(u: BlossomingMap) -> ClosureResult:
    """
    match every leaf with the last unmatched bud before it along the contour
    (parenthesis matching from the root); the root bud closes last.
    """
    contour = clockwise_contour(u)
    if not u.root_is_bud:
        raise NotWellRooted("the root corner must precede a bud")
    stack = []
    pairs = []
    for c in contour:
        if not u.is_stem(c):
            continue
        if u.kinds[c] is StemKind.BUD:
            stack.append(c)
        elif not stack:
            raise NotWellRooted(f"leaf {c} would be matched across the root")
        else:
            pairs.append((stack.pop(), c))
    if stack:
        raise UnbalancedStems(f"{len(stack)} buds left unmatched")
    return _closed(u, pairs)


def closure_by_labels(u: BlossomingMap) -> ClosureResult:
    """match each bud with the first following leaf carrying the same label"""
    labeling = canonical_labeling(u)
    if not u.root_is_bud or labeling.minimum < 0:
        raise NotWellRooted("closure by labels needs a well-rooted map")
    stem_labels = labeling.stem_labels(u)
    contour = clockwise_contour(u)
    stems = [c for c in contour if u.is_stem(c)]
    pairs = []
    for i, bud in enumerate(stems):
        if u.kinds[bud] is not StemKind.BUD:
            continue
        for leaf in stems[i + 1:]:
            if u.kinds[leaf] is StemKind.LEAF and stem_labels[leaf] == stem_labels[bud]:
                pairs.append((bud, leaf))
                break
        else:
            raise NotWellRooted(f"bud {bud} has no matching leaf before the root")
    return _closed(u, pairs)


def _closed(u: BlossomingMap, pairs: list[tuple[int, int]]) -> ClosureResult:
    alpha = list(u.alpha)
    for bud, leaf in pairs:
        alpha[bud], alpha[leaf] = leaf, bud
    m = RootedMap(n_darts=u.n_darts, sigma=u.sigma, alpha=tuple(alpha), root_dart=u.root_dart)
    heads = set(canonical_orientation(u).heads) | {leaf for _, leaf in pairs}
    return ClosureResult(
        map=m,
        leaf_faces={leaf: m.face_of[leaf] for _, leaf in pairs},
        orientation=Orientation(frozenset(heads)),
        closure_edges=tuple(sorted(pairs)),
    )


def leaf_colors(u: BlossomingMap, labeling: CornerLabeling | None = None) -> tuple[int, int]:
    """(black, white) leaves; a leaf is black when its label is even"""
    stem_labels = (labeling or canonical_labeling(u)).stem_labels(u)
    black = sum(1 for d in u.leaves if stem_labels[d] % 2 == 0)
    return black, len(u.leaves) - black
