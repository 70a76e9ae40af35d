# models/scheme.py
# cores, schemes (labeled and unlabeled), binary bijections and truncations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from models.blossoming_map import BlossomingMap, CornerLabeling, StemKind, blossoming_canonical_form
from models.errors import DomainError
from models.rooted_map import Orientation


class EdgeClass(Enum):
    BALANCED = "balanced"  # two half-edges of type 0
    SHIFTED = "shifted"    # two half-edges of type 1
    OFFSET = "offset"      # one of each, offset toward the type-1 end


class StemClass(Enum):
    REGULAR = "regular"    # relative label 1
    SHIFTED = "shifted"    # relative label 2


@dataclass(frozen=True)
class BlossomingCore:
    """a blossoming map without vertex of interior degree 1, with its inherited orientation"""
    map: BlossomingMap
    labeling: CornerLabeling
    orientation: Orientation

    @cached_property
    def scheme_vertices(self) -> list[int]:
        return [v for v in range(self.map.n_vertices) if self.map.interior_degree(v) >= 3]

    @property
    def is_scheme_rooted(self) -> bool:
        u = self.map
        return u.root_is_bud and u.vertex_of[u.root_dart] in self.scheme_vertices

    @cached_property
    def n_branch_vertices(self) -> int:
        return sum(1 for v in range(self.map.n_vertices) if self.map.interior_degree(v) == 2)


@dataclass(frozen=True)
class RemovedTree:
    """a tree cut off by pruning, kept with the original dart numbers"""
    attachment: int                  # dart of the tree paired with the core stem
    darts: tuple[int, ...]
    sigma: dict[int, int]
    alpha: dict[int, int]
    kinds: dict[int, StemKind]

    @property
    def n_vertices(self) -> int:
        return len(self.darts) // 4 if self.darts else 0


@dataclass(frozen=True)
class PruneResult:
    """
    the core of u and the trees removed from it. core darts are renumbered
    1..m; `source` maps each core dart back to its dart in u and `trees`
    is keyed by the core stems that replaced an edge.
    """
    core: BlossomingCore
    source: dict[int, int]
    trees: dict[int, RemovedTree]
    n_darts: int
    root_dart: int                   # root of u, in u's numbering

    @property
    def is_trivial(self) -> bool:
        return not self.trees


@dataclass(frozen=True)
class SchemeEdge:
    """an oriented scheme edge with the types of its two half-edges"""
    tail: int
    head: int
    tail_vertex: int
    head_vertex: int
    tail_type: int
    head_type: int

    @property
    def is_loop(self) -> bool:
        return self.tail_vertex == self.head_vertex

    @property
    def edge_class(self) -> EdgeClass:
        if self.tail_type == self.head_type:
            return EdgeClass.BALANCED if self.tail_type == 0 else EdgeClass.SHIFTED
        return EdgeClass.OFFSET

    @property
    def offset_target(self) -> int | None:
        """vertex the edge is offset toward, if any"""
        if self.edge_class is not EdgeClass.OFFSET:
            return None
        return self.head_vertex if self.head_type else self.tail_vertex

    @property
    def offset_source(self) -> int | None:
        if self.edge_class is not EdgeClass.OFFSET:
            return None
        return self.tail_vertex if self.head_type else self.head_vertex


@dataclass(frozen=True)
class UnlabeledScheme:
    """
    a rooted blossoming scheme with an orientation. relative labels are read
    around each vertex: +1 across a tail or a bud, -1 across a head or a leaf,
    normalized so that the smallest corner at each vertex is 0.
    """
    map: BlossomingMap
    orientation: Orientation

    @property
    def n_vertices(self) -> int:
        return self.map.n_vertices

    @property
    def root_vertex(self) -> int:
        return self.map.vertex_of[self.map.root_dart]

    @cached_property
    def relative_labels(self) -> dict[int, int]:
        u = self.map
        rel = {}
        for cycle in u.vertices:
            value, raw = 0, {}
            for d in cycle:
                raw[d] = value
                value += 1 if self._is_out(d) else -1
            if value != 0:
                raise DomainError(f"vertex {cycle} is not eulerian")
            low = min(raw.values())
            rel.update({d: x - low for d, x in raw.items()})
        return rel

    def _is_out(self, d: int) -> bool:
        if self.map.is_stem(d):
            return self.map.kinds[d] is StemKind.BUD
        return self.orientation.is_tail(d)

    def half_edge_type(self, d: int) -> int:
        rel = self.relative_labels
        return min(rel[d], rel[self.map.sigma[d]])

    @cached_property
    def edges(self) -> tuple[SchemeEdge, ...]:
        u, vertex_of = self.map, self.map.vertex_of
        out = []
        for d in u.interior_darts:
            if self.orientation.is_head(d):
                continue
            h = u.alpha[d]
            out.append(SchemeEdge(
                tail=d,
                head=h,
                tail_vertex=vertex_of[d],
                head_vertex=vertex_of[h],
                tail_type=self.half_edge_type(d),
                head_type=self.half_edge_type(h),
            ))
        return tuple(out)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def n_degree_four(self) -> int:
        """|n2|: vertices of interior degree 4"""
        return sum(1 for v in range(self.n_vertices) if self.map.interior_degree(v) == 4)

    @cached_property
    def rootable_stems(self) -> list[int]:
        u = self.map
        return [d for d in u.stems if u.kinds[d] is StemKind.LEAF or d == u.root_dart]

    def stem_class(self, d: int) -> StemClass:
        return StemClass.SHIFTED if self.half_edge_type(d) else StemClass.REGULAR

    def buds_at(self, vertex: int, stem_class: StemClass) -> int:
        u = self.map
        return sum(
            1 for d in u.vertices[vertex]
            if u.is_stem(d) and u.kinds[d] is StemKind.BUD and self.stem_class(d) is stem_class
        )

    @cached_property
    def offset_arcs(self) -> list[tuple[int, int]]:
        """one arc u -> v per edge offset toward v"""
        return [(e.offset_source, e.offset_target) for e in self.edges if e.offset_target is not None]

    @cached_property
    def key(self) -> tuple:
        return blossoming_canonical_form(self.map).key

    def to_json(self) -> dict:
        return {
            "vertices": self.n_vertices,
            "edges": [
                {"tail": e.tail, "head": e.head, "class": e.edge_class.value, "toward": e.offset_target}
                for e in self.edges
            ],
            "stems": {d: self.stem_class(d).value for d in self.map.stems},
            "degree_four": self.n_degree_four,
        }


@dataclass(frozen=True)
class LabeledScheme:
    """an unlabeled scheme together with the height of each vertex"""
    scheme: UnlabeledScheme
    heights: tuple[int, ...]

    def __post_init__(self):
        if len(self.heights) != self.scheme.n_vertices:
            raise DomainError("one height per scheme vertex is required")

    @classmethod
    def from_labels(cls, scheme: UnlabeledScheme, labels: dict[int, int]) -> "LabeledScheme":
        rel = scheme.relative_labels
        heights = []
        for cycle in scheme.map.vertices:
            h = min(labels[d] for d in cycle)
            if any(labels[d] - h != rel[d] for d in cycle):
                raise DomainError(f"corner labels at {cycle} disagree with the orientation")
            heights.append(h)
        return cls(scheme, tuple(heights))

    @cached_property
    def labels(self) -> dict[int, int]:
        vertex_of = self.scheme.map.vertex_of
        return {d: self.heights[vertex_of[d]] + r for d, r in self.scheme.relative_labels.items()}

    def lambda0(self, e: SchemeEdge) -> int:
        """label on the right of the tail"""
        return self.heights[e.tail_vertex] + e.tail_type

    def lambda1(self, e: SchemeEdge) -> int:
        """label on the right of the edge at its head"""
        return self.heights[e.head_vertex] + e.head_type

    def is_increasing(self, e: SchemeEdge) -> bool:
        return self.lambda0(e) <= self.lambda1(e)

    def stem_parity(self, d: int) -> int:
        """parity of the corner preceding a stem; 0 means black"""
        return self.labels[d] % 2

    def shifted(self, delta: int) -> "LabeledScheme":
        return LabeledScheme(self.scheme, tuple(h + delta for h in self.heights))

    @property
    def is_rooted_at_zero(self) -> bool:
        return self.labels[self.scheme.map.root_dart] == 0


@dataclass(frozen=True)
class BinaryBijection:
    """pi[k - 1] is the vertex at relative height k; zeta[k - 1] the parity of the k-th gap"""
    pi: tuple[int, ...]
    zeta: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.pi) != list(range(len(self.pi))):
            raise DomainError(f"{self.pi} is not a permutation of the vertices")
        if len(self.zeta) != max(len(self.pi) - 1, 0) or any(z not in (0, 1) for z in self.zeta):
            raise DomainError("zeta needs one parity per consecutive pair")

    @property
    def n(self) -> int:
        return len(self.pi)

    @cached_property
    def positions(self) -> dict[int, int]:
        """vertex -> relative height (1-based)"""
        return {v: k + 1 for k, v in enumerate(self.pi)}

    def vertex(self, k: int) -> int:
        return self.pi[k - 1]

    def gap(self, k: int) -> int:
        """zeta(k), for 1 <= k < n"""
        return self.zeta[k - 1]

    def mirror(self) -> "BinaryBijection":
        return BinaryBijection(tuple(reversed(self.pi)), tuple(reversed(self.zeta)))

    def parity_at(self, k: int, reference_parity: int, reference: int = 1) -> int:
        """parity of h(pi(k)) knowing the parity of h(pi(reference))"""
        lo, hi = sorted((k, reference))
        return (reference_parity + sum(self.zeta[lo - 1:hi - 1])) % 2

    def to_json(self) -> dict:
        return {"pi": list(self.pi), "zeta": list(self.zeta)}


@dataclass(frozen=True, order=True)
class TruncatedEdge:
    """edge of a truncation, endpoints given by relative height"""
    tail: int
    head: int
    lambda0: int
    lambda1: int


@dataclass(frozen=True)
class Truncation:
    """
    what remains of a labeled scheme once the vertices below (ascending) or
    above (descending) relative height `position` are merged into it
    """
    position: int
    ascending: bool
    heights: tuple[tuple[int, int], ...]      # (relative height, height) of the kept vertices
    edges: tuple[TruncatedEdge, ...] = field(default_factory=tuple)

    @property
    def label(self) -> int:
        return dict(self.heights)[self.position]

    def translated(self, delta: int) -> "Truncation":
        return Truncation(
            position=self.position,
            ascending=self.ascending,
            heights=tuple((k, h + delta) for k, h in self.heights),
            edges=tuple(
                TruncatedEdge(e.tail, e.head, e.lambda0 + delta, e.lambda1 + delta) for e in self.edges
            ),
        )

    def normalized(self) -> "Truncation":
        """the translate by an even amount whose merged vertex sits at height 0 or 1"""
        return self.translated(-2 * (self.label // 2))
