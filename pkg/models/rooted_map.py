# models/rooted_map.py
# rooted maps as rotation systems (sigma, alpha) on 1-based darts

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from models.errors import (
    BadDartCount,
    BadRoot,
    ConventionError,
    FixedPointInAlpha,
    NotConnected,
    NotInvolution,
)


class Color(Enum):
    BLACK = "black"
    WHITE = "white"

    @property
    def other(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


def cycles_of(perm: tuple[int, ...], darts=None) -> list[tuple[int, ...]]:
    """cycles of a 1-based permutation, each starting at its smallest dart, sorted"""
    darts = range(1, len(perm)) if darts is None else sorted(darts)
    seen = set()
    result = []
    for start in darts:
        if start in seen:
            continue
        cycle = []
        d = start
        while d not in seen:
            seen.add(d)
            cycle.append(d)
            d = perm[d]
        result.append(tuple(cycle))
    return result


def perm_from_cycles(n: int, cycles: list[tuple[int, ...]], fill_identity: bool = True) -> tuple[int, ...]:
    """build a 1-based permutation tuple (index 0 unused) from cycle notation"""
    perm = [0] * (n + 1)
    for cycle in cycles:
        for i, d in enumerate(cycle):
            perm[d] = cycle[(i + 1) % len(cycle)]
    if fill_identity:
        for d in range(1, n + 1):
            if perm[d] == 0:
                perm[d] = d
    return tuple(perm)


def inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for d in range(1, len(perm)):
        if perm[d]:
            inv[perm[d]] = d
    return tuple(inv)


@dataclass(frozen=True)
class RootedMap:
    """a connected map on an orientable surface with a marked corner"""
    n_darts: int
    sigma: tuple[int, ...]  # ccw rotation, sigma[0] unused
    alpha: tuple[int, ...]  # edge involution, alpha[0] unused
    root_dart: int  # the root corner sits just before this dart (ccw)

    @classmethod
    def vertex_map(cls) -> "RootedMap":
        """the map with one vertex and no edge"""
        return cls(n_darts=0, sigma=(0,), alpha=(0,), root_dart=0)

    @property
    def darts(self) -> range:
        return range(1, self.n_darts + 1)

    @property
    def is_vertex_map(self) -> bool:
        return self.n_darts == 0

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        return inverse(self.sigma)

    @cached_property
    def phi(self) -> tuple[int, ...]:
        """face permutation: phi(d) = sigma(alpha(d))"""
        return (0,) + tuple(self.sigma[self.alpha[d]] for d in self.darts)

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        return cycles_of(self.sigma)

    @cached_property
    def faces(self) -> list[tuple[int, ...]]:
        """faces as cycles of corners (corner d = between sigma^-1(d) and d)"""
        return cycles_of(self.phi)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return [(d, self.alpha[d]) for d in self.darts if d < self.alpha[d]]

    @cached_property
    def vertex_of(self) -> dict[int, int]:
        return {d: i for i, cycle in enumerate(self.vertices) for d in cycle}

    @cached_property
    def face_of(self) -> dict[int, int]:
        return {d: i for i, cycle in enumerate(self.faces) for d in cycle}

    @property
    def n_vertices(self) -> int:
        return 1 if self.is_vertex_map else len(self.vertices)

    @property
    def n_edges(self) -> int:
        return self.n_darts // 2

    @property
    def n_faces(self) -> int:
        return 1 if self.is_vertex_map else len(self.faces)

    @property
    def root_face(self) -> int:
        return self.face_of[self.root_dart]

    @property
    def root_vertex(self) -> int:
        return self.vertex_of[self.root_dart]

    @property
    def genus(self) -> int:
        twice = 2 - self.n_vertices + self.n_edges - self.n_faces
        if twice % 2 or twice < 0:
            raise ConventionError(f"euler characteristic gives genus {twice}/2")
        return twice // 2

    def degree(self, vertex: int) -> int:
        return len(self.vertices[vertex])

    @cached_property
    def key(self) -> tuple:
        """hashable identity of the labelled map (use canonical_form for isomorphism)"""
        return (self.sigma, self.alpha, self.root_dart)

    def __repr__(self) -> str:
        return (
            f"RootedMap("
            f"V={self.n_vertices}, "
            f"E={self.n_edges}, "
            f"F={self.n_faces}, "
            f"g={self.genus}, "
            f"root={self.root_dart}"
            ")"
        )


@dataclass(frozen=True)
class Orientation:
    """an orientation, given by the set of head darts (one per edge)"""
    heads: frozenset[int] = field(default_factory=frozenset)

    def is_head(self, dart: int) -> bool:
        return dart in self.heads

    def is_tail(self, dart: int) -> bool:
        return dart not in self.heads

    def reversed(self, m: RootedMap) -> "Orientation":
        return Orientation(frozenset(m.alpha[d] for d in self.heads))

    def is_valid_for(self, m: RootedMap) -> bool:
        return all((a in self.heads) != (b in self.heads) for a, b in m.edges)


@dataclass(frozen=True)
class FaceColoring:
    """proper two-coloring of the faces, root face black"""
    colors: tuple[Color, ...]  # indexed like RootedMap.faces

    @property
    def n_black(self) -> int:
        return sum(1 for c in self.colors if c is Color.BLACK)

    @property
    def n_white(self) -> int:
        return sum(1 for c in self.colors if c is Color.WHITE)


def build_map(n_darts: int, sigma, alpha, root_dart: int) -> RootedMap:
    """
    validate a rotation system and return the rooted map.
    sigma and alpha may be given as cycle lists or as 1-based tuples.
    """
    if n_darts <= 0 or n_darts % 2:
        raise BadDartCount(f"a map needs a positive even number of darts, got {n_darts}")
    sigma = _as_perm(n_darts, sigma, "sigma")
    alpha = _as_perm(n_darts, alpha, "alpha")

    for d in range(1, n_darts + 1):
        if alpha[alpha[d]] != d:
            raise NotInvolution(f"alpha(alpha({d})) = {alpha[alpha[d]]}")
        if alpha[d] == d:
            raise FixedPointInAlpha(f"dart {d} is a fixed point of alpha")
    if not 1 <= root_dart <= n_darts:
        raise BadRoot(f"root dart {root_dart} not in 1..{n_darts}")
    if len(_orbit(1, (sigma, alpha))) != n_darts:
        raise NotConnected("sigma and alpha do not act transitively")

    m = RootedMap(n_darts=n_darts, sigma=sigma, alpha=alpha, root_dart=root_dart)
    m.genus  # raises on a broken convention
    return m


def _as_perm(n: int, perm, name: str) -> tuple[int, ...]:
    if isinstance(perm, tuple) and len(perm) == n + 1 and perm and perm[0] == 0:
        values = perm[1:]
    elif isinstance(perm, (list, tuple)) and all(isinstance(c, (list, tuple)) for c in perm):
        perm = perm_from_cycles(n, [tuple(c) for c in perm])
        values = perm[1:]
    else:
        raise NotInvolution(f"{name} is neither a 1-based tuple nor a cycle list")
    if sorted(values) != list(range(1, n + 1)):
        raise NotInvolution(f"{name} is not a permutation of 1..{n}")
    return tuple(perm)


def _orbit(start: int, perms) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        d = stack.pop()
        for p in perms:
            e = p[d]
            if e and e not in seen:
                seen.add(e)
                stack.append(e)
    return seen


def face_permutation(m: RootedMap) -> tuple[int, ...]:
    return m.phi


def genus(m: RootedMap) -> int:
    return m.genus


def canonical_order(sigma, sigma_inv, alpha, root: int) -> list[int]:
    """
    breadth-first discovery order of darts from the root using the
    alphabet (sigma, sigma^-1, alpha); alpha is skipped on stems (alpha = 0)
    """
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        d = queue.popleft()
        for e in (sigma[d], sigma_inv[d], alpha[d]):
            if e and e not in seen:
                seen.add(e)
                order.append(e)
                queue.append(e)
    return order


def relabel(perm: tuple[int, ...], new_label: dict[int, int]) -> tuple[int, ...]:
    """conjugate a 1-based permutation by a relabelling; 0 stays 0"""
    out = [0] * len(perm)
    for d, e in new_label.items():
        out[e] = new_label[perm[d]] if perm[d] else 0
    return tuple(out)


def canonical_form(m: RootedMap) -> RootedMap:
    if m.is_vertex_map:
        return m
    order = canonical_order(m.sigma, m.sigma_inv, m.alpha, m.root_dart)
    new_label = {d: i + 1 for i, d in enumerate(order)}
    return RootedMap(
        n_darts=m.n_darts,
        sigma=relabel(m.sigma, new_label),
        alpha=relabel(m.alpha, new_label),
        root_dart=1,
    )


def is_isomorphic_rooted(m1: RootedMap, m2: RootedMap) -> bool:
    return canonical_form(m1).key == canonical_form(m2).key


def reroot(m: RootedMap, dart: int) -> RootedMap:
    if not 1 <= dart <= m.n_darts:
        raise BadRoot(f"dart {dart} not in 1..{m.n_darts}")
    return RootedMap(n_darts=m.n_darts, sigma=m.sigma, alpha=m.alpha, root_dart=dart)


def rootings(m: RootedMap) -> list[RootedMap]:
    """all re-rootings of m, duplicates (up to isomorphism) removed"""
    seen = {}
    for d in m.darts:
        c = canonical_form(reroot(m, d))
        seen.setdefault(c.key, c)
    return list(seen.values())
