# models/blossoming_map.py
# blossoming maps: maps with unmatched stems (buds and leaves)

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from models.errors import BadRoot, FixedPointInAlpha, NotConnected, NotInvolution
from models.rooted_map import canonical_order, cycles_of, inverse, perm_from_cycles, relabel


class StemKind(Enum):
    BUD = "bud"      # outgoing stem
    LEAF = "leaf"    # incoming stem

    @property
    def other(self) -> "StemKind":
        return StemKind.LEAF if self is StemKind.BUD else StemKind.BUD


@dataclass(frozen=True)
class BlossomingMap:
    """
    a map whose darts are either paired by alpha (interior darts) or left
    unmatched (stems, alpha = 0). kinds[d] is the StemKind of a stem, None otherwise.
    the root corner is the corner preceding root_dart, normally the root bud.
    """
    n_darts: int
    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    kinds: tuple[StemKind | None, ...]
    root_dart: int

    @property
    def darts(self) -> range:
        return range(1, self.n_darts + 1)

    @property
    def is_single_leaf(self) -> bool:
        """the tree made of a single leaf and no vertex"""
        return self.n_darts == 0

    def is_stem(self, d: int) -> bool:
        return self.alpha[d] == 0

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        return inverse(self.sigma)

    @cached_property
    def stems(self) -> list[int]:
        return [d for d in self.darts if self.alpha[d] == 0]

    @cached_property
    def buds(self) -> list[int]:
        return [d for d in self.stems if self.kinds[d] is StemKind.BUD]

    @cached_property
    def leaves(self) -> list[int]:
        return [d for d in self.stems if self.kinds[d] is StemKind.LEAF]

    @cached_property
    def interior_darts(self) -> list[int]:
        return [d for d in self.darts if self.alpha[d]]

    @property
    def n_interior_edges(self) -> int:
        return len(self.interior_darts) // 2

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        return cycles_of(self.sigma)

    @cached_property
    def vertex_of(self) -> dict[int, int]:
        return {d: i for i, cycle in enumerate(self.vertices) for d in cycle}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def interior_degree(self, vertex: int) -> int:
        return sum(1 for d in self.vertices[vertex] if self.alpha[d])

    @property
    def genus(self) -> int:
        """genus of the interior, assuming it is unicellular"""
        if self.is_single_leaf:
            return 0
        return (1 - self.n_vertices + self.n_interior_edges) // 2

    @property
    def root_is_bud(self) -> bool:
        return self.kinds[self.root_dart] is StemKind.BUD

    def with_kinds(self, changes: dict[int, StemKind], root_dart: int | None = None) -> "BlossomingMap":
        kinds = list(self.kinds)
        for d, kind in changes.items():
            kinds[d] = kind
        return BlossomingMap(
            n_darts=self.n_darts,
            sigma=self.sigma,
            alpha=self.alpha,
            kinds=tuple(kinds),
            root_dart=self.root_dart if root_dart is None else root_dart,
        )

    @cached_property
    def key(self) -> tuple:
        return (self.sigma, self.alpha, tuple(k.value if k else "" for k in self.kinds), self.root_dart)

    def __repr__(self) -> str:
        return (
            f"BlossomingMap("
            f"V={self.n_vertices if self.n_darts else 0}, "
            f"E={self.n_interior_edges}, "
            f"buds={len(self.buds)}, "
            f"leaves={len(self.leaves)}, "
            f"root={self.root_dart}"
            ")"
        )


SINGLE_LEAF = BlossomingMap(n_darts=0, sigma=(0,), alpha=(0,), kinds=(None,), root_dart=0)


@dataclass(frozen=True)
class CornerLabeling:
    """corner labels along the contour; corner d precedes dart d ccw"""
    labels: dict[int, int]

    def stem_labels(self, u: BlossomingMap) -> dict[int, int]:
        """a stem with adjacent corner labels i-1 and i is labelled i"""
        return {d: max(self.labels[d], self.labels[u.sigma[d]]) for d in u.stems}

    @property
    def minimum(self) -> int:
        return min(self.labels.values())

    def shifted(self, delta: int) -> "CornerLabeling":
        return CornerLabeling({d: v + delta for d, v in self.labels.items()})


def build_blossoming_map(n_darts: int, sigma, alpha_cycles, kinds: dict[int, StemKind], root_dart: int) -> BlossomingMap:
    """validate and build a blossoming map; alpha is given as pairs over the interior darts"""
    sigma = perm_from_cycles(n_darts, [tuple(c) for c in sigma]) if not _is_tuple_perm(sigma, n_darts) else tuple(sigma)
    if sorted(sigma[1:]) != list(range(1, n_darts + 1)):
        raise NotInvolution("sigma is not a permutation")
    if _is_tuple_perm(alpha_cycles, n_darts):
        alpha = tuple(alpha_cycles)
    else:
        alpha = perm_from_cycles(n_darts, [tuple(c) for c in alpha_cycles], fill_identity=False)
    for d in range(1, n_darts + 1):
        a = alpha[d]
        if a == d:
            raise FixedPointInAlpha(f"dart {d} is a fixed point of alpha")
        if a and alpha[a] != d:
            raise NotInvolution(f"alpha(alpha({d})) != {d}")
        if not a and d not in kinds:
            raise BadRoot(f"stem {d} has no kind")
        if a and d in kinds:
            raise BadRoot(f"dart {d} is paired but also declared a stem")
    if not 1 <= root_dart <= n_darts or alpha[root_dart]:
        raise BadRoot(f"root dart {root_dart} must be a stem")

    seen = {1}
    stack = [1]
    while stack:
        d = stack.pop()
        for e in (sigma[d], alpha[d]):
            if e and e not in seen:
                seen.add(e)
                stack.append(e)
    if len(seen) != n_darts:
        raise NotConnected("blossoming map is not connected")

    return BlossomingMap(
        n_darts=n_darts,
        sigma=sigma,
        alpha=alpha,
        kinds=(None,) + tuple(kinds.get(d) for d in range(1, n_darts + 1)),
        root_dart=root_dart,
    )


def _is_tuple_perm(value, n: int) -> bool:
    return isinstance(value, tuple) and len(value) == n + 1 and value[0] == 0


def blossoming_canonical_form(u: BlossomingMap) -> BlossomingMap:
    """relabel darts in breadth-first order from the root (stems skip alpha)"""
    if u.is_single_leaf:
        return u
    order = canonical_order(u.sigma, u.sigma_inv, u.alpha, u.root_dart)
    new_label = {d: i + 1 for i, d in enumerate(order)}
    kinds = [None] * (u.n_darts + 1)
    for d, e in new_label.items():
        kinds[e] = u.kinds[d]
    return BlossomingMap(
        n_darts=u.n_darts,
        sigma=relabel(u.sigma, new_label),
        alpha=relabel(u.alpha, new_label),
        kinds=tuple(kinds),
        root_dart=1,
    )
