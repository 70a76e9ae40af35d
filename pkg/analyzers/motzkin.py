# analyzers/motzkin.py
# weighted motzkin walks: enumeration, generating series, and the branch encoding

from collections.abc import Iterator
from itertools import product

from models.blossoming_map import BlossomingMap, CornerLabeling, StemKind
from models.errors import DomainError, HeightMismatch, ResourceLimit
from models.motzkin_walk import Branch, BranchVertex, FlatType, MotzkinWalk, Step
from models.series import TruncatedSeries

T_VARIABLES = ("t_black", "t_white")
T_UNIVARIATE = ("t",)

# longest walk the plain enumerators will produce
MAX_ENUMERATED_LENGTH = 12

BUD, LEAF = StemKind.BUD, StemKind.LEAF

# branch vertex shape for every (step, type)
VERTEX_OF_STEP = {
    (Step.UP, None): BranchVertex(left=(LEAF,), right=(BUD,)),
    (Step.DOWN, None): BranchVertex(left=(BUD,), right=(LEAF,)),
    (Step.FLAT, FlatType.A): BranchVertex(left=(), right=(LEAF, BUD)),
    (Step.FLAT, FlatType.B): BranchVertex(left=(BUD, LEAF), right=()),
    (Step.FLAT, FlatType.C): BranchVertex(left=(), right=(BUD, LEAF)),
    (Step.FLAT, FlatType.D): BranchVertex(left=(LEAF, BUD), right=()),
}
STEP_OF_VERTEX = {v: k for k, v in VERTEX_OF_STEP.items()}


def markers(order: int, univariate: bool = False) -> tuple[TruncatedSeries, TruncatedSeries]:
    """(t_black, t_white) as series; both are t in univariate mode"""
    if univariate:
        t = TruncatedSeries.variable(T_UNIVARIATE, order, "t")
        return t, t
    return (
        TruncatedSeries.variable(T_VARIABLES, order, "t_black"),
        TruncatedSeries.variable(T_VARIABLES, order, "t_white"),
    )


# --- enumeration ---

def walks(start: int, length: int, min_height: int | None = None) -> Iterator[MotzkinWalk]:
    """untyped walks of exactly `length` steps, never stepping from below min_height"""
    if length > MAX_ENUMERATED_LENGTH:
        raise ResourceLimit(f"walks longer than {MAX_ENUMERATED_LENGTH} are not enumerated")
    for steps in product((Step.UP, Step.FLAT, Step.DOWN), repeat=length):
        w = MotzkinWalk(start, steps)
        if min_height is None or w.min_height >= min_height:
            yield w


def typed_walks(start: int, length: int, min_height: int | None = None) -> Iterator[MotzkinWalk]:
    """walks whose horizontal steps carry one of the four types"""
    for w in walks(start, length, min_height):
        flats = [k for k, s in enumerate(w.steps) if s is Step.FLAT]
        for choice in product(list(FlatType), repeat=len(flats)):
            types = [None] * len(w.steps)
            for k, t in zip(flats, choice):
                types[k] = t
            yield MotzkinWalk(start, w.steps, tuple(types))


def walk_weight(w: MotzkinWalk, order: int, univariate: bool = False) -> TruncatedSeries:
    """
    product over steps: t_black for a step taken from an even height, t_white
    from an odd one; an untyped horizontal step weighs 2 (t_black + t_white)
    """
    tb, tw = markers(order, univariate)
    flat = 2 * (tb + tw)
    weight = TruncatedSeries.constant(tb.variables, order)
    for k, (s, h) in enumerate(zip(w.steps, w.heights)):
        if s is Step.FLAT and not w.is_typed:
            weight = weight * flat
            continue
        shift = w.types[k].parity_shift if s is Step.FLAT else 0
        weight = weight * (tb if (h + shift) % 2 == 0 else tw)
    return weight


# --- generating series ---

def series_W(start: int, end: int, order: int, min_height: int | None = None,
             univariate: bool = False) -> TruncatedSeries:
    """
    sum of walk weights over all walks start -> end of length <= order.
    every step has degree one, so longer walks do not contribute.
    """
    tb, tw = markers(order, univariate)
    flat = 2 * (tb + tw)
    zero = TruncatedSeries.zero(tb.variables, order)
    current = {start: TruncatedSeries.constant(tb.variables, order)}
    total = current[start] if start == end else zero
    for _ in range(order):
        following: dict[int, TruncatedSeries] = {}
        for h, s in current.items():
            if min_height is not None and h < min_height:
                continue
            t = tb if h % 2 == 0 else tw
            for dh, w in ((1, t), (0, flat), (-1, t)):
                following[h + dh] = following.get(h + dh, zero) + s * w
        current = following
        total = total + current.get(end, zero)
    return total


def typed_series_W(start: int, end: int, order: int, min_height: int | None = None,
                   univariate: bool = False) -> TruncatedSeries:
    """series_W by explicit enumeration of typed walks (small orders only)"""
    tb, _ = markers(order, univariate)
    total = TruncatedSeries.zero(tb.variables, order)
    for length in range(order + 1):
        for w in typed_walks(start, length, min_height):
            if w.end_height == end:
                total = total + walk_weight(w, order, univariate)
    return total


def series_D_bullet(order: int, univariate: bool = False) -> TruncatedSeries:
    """primitive walks from height 0"""
    return series_W(0, -1, order, min_height=0, univariate=univariate)


def series_D_circ(order: int, univariate: bool = False) -> TruncatedSeries:
    """primitive walks from height 1"""
    return series_W(1, 0, order, min_height=1, univariate=univariate)


def series_B(order: int, univariate: bool = False) -> TruncatedSeries:
    """bridges from height 0"""
    return series_W(0, 0, order, univariate=univariate)


def first_passage(k: int, order: int, univariate: bool = False) -> TruncatedSeries:
    """walks k -> k-1 that never step from below k"""
    return series_W(k, k - 1, order, min_height=k, univariate=univariate)


# --- branches ---

def encode_branch(branch: Branch) -> MotzkinWalk:
    """typed walk of length n_edges - 1 along the labels on the right of the branch"""
    steps, types = [], []
    for v in branch.vertices:
        try:
            step, flat_type = STEP_OF_VERTEX[v]
        except KeyError:
            raise DomainError(f"{v} is not an eulerian branch vertex") from None
        steps.append(step)
        types.append(flat_type)
    return MotzkinWalk(branch.start_label, tuple(steps), tuple(types))


def decode_branch(walk: MotzkinWalk, label_start: int, label_end: int) -> Branch:
    if walk.start_height != label_start or walk.end_height != label_end:
        raise HeightMismatch(
            f"walk runs {walk.start_height} -> {walk.end_height}, branch needs {label_start} -> {label_end}"
        )
    if not walk.is_typed:
        raise DomainError("only typed walks decode to branches")
    vertices = tuple(
        VERTEX_OF_STEP[(s, t if s is Step.FLAT else None)] for s, t in zip(walk.steps, walk.types)
    )
    return Branch(label_start, vertices)


def branch_leaf_labels(branch: Branch) -> list[int]:
    """labels of the leaves of a branch, read off the corners around each vertex"""
    labels = []
    for v, h in zip(branch.vertices, branch.right_labels()):
        # ccw from the incoming dart: right stems, outgoing dart, left stems
        corner = h
        for kind in v.right:
            if kind is LEAF:
                labels.append(corner)
            corner += 1 if kind is BUD else -1
        corner += 1  # crossing the outgoing dart
        for kind in v.left:
            if kind is LEAF:
                labels.append(corner)
            corner += 1 if kind is BUD else -1
    return labels


def branch_leaf_colors(branch: Branch) -> tuple[int, int]:
    """(black, white) leaves on the branch"""
    labels = branch_leaf_labels(branch)
    black = sum(1 for x in labels if x % 2 == 0)
    return black, len(labels) - black


def branch_of(u: BlossomingMap, tail: int, labeling: CornerLabeling) -> tuple[Branch, int]:
    """
    the branch leaving a scheme vertex through the tail dart `tail`, and the
    head dart where it reaches the next scheme vertex
    """
    from analyzers.core_scheme import follow_branch

    passes, head = follow_branch(u, tail)
    vertices = []
    for incoming, outgoing in passes:
        right, left = [], []
        side = right
        d = u.sigma[incoming]
        while d != incoming:
            if d == outgoing:
                side = left
            else:
                side.append(u.kinds[d])
            d = u.sigma[d]
        vertices.append(BranchVertex(left=tuple(left), right=tuple(right)))
    return Branch(labeling.labels[tail], tuple(vertices)), head
