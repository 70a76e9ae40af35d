# models/motzkin_walk.py
# motzkin walks, typed walks and the branches they encode

from dataclasses import dataclass
from enum import Enum

from models.blossoming_map import StemKind


class Step(Enum):
    UP = 1
    FLAT = 0
    DOWN = -1


class FlatType(Enum):
    """
    decoration of a horizontal step, i.e. of a branch vertex whose two stems
    sit on the same side. a and b leave a leaf of the parity of the current
    height, c and d one of the opposite parity.
    """
    A = "a"  # right side: leaf then bud
    B = "b"  # left side: bud then leaf
    C = "c"  # right side: bud then leaf
    D = "d"  # left side: leaf then bud

    @property
    def parity_shift(self) -> int:
        return 0 if self in (FlatType.A, FlatType.B) else 1


@dataclass(frozen=True)
class MotzkinWalk:
    """a walk from start_height; types[k] decorates steps[k] when it is horizontal"""
    start_height: int
    steps: tuple[Step, ...] = ()
    types: tuple[FlatType | None, ...] | None = None

    def __post_init__(self):
        if self.types is not None and len(self.types) != len(self.steps):
            raise ValueError("one type slot per step is required")

    @property
    def is_typed(self) -> bool:
        return self.types is not None

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def heights(self) -> list[int]:
        """height before each step"""
        out = []
        h = self.start_height
        for s in self.steps:
            out.append(h)
            h += s.value
        return out

    @property
    def end_height(self) -> int:
        return self.start_height + self.increment

    @property
    def increment(self) -> int:
        return sum(s.value for s in self.steps)

    @property
    def n_flat(self) -> int:
        return sum(1 for s in self.steps if s is Step.FLAT)

    @property
    def n_even(self) -> int:
        """non-horizontal steps taken from an even height"""
        return sum(1 for s, h in zip(self.steps, self.heights) if s is not Step.FLAT and h % 2 == 0)

    @property
    def n_odd(self) -> int:
        return sum(1 for s, h in zip(self.steps, self.heights) if s is not Step.FLAT and h % 2)

    @property
    def min_height(self) -> int:
        return min(self.heights, default=self.start_height)

    def is_bridge(self) -> bool:
        return self.increment == 0

    def is_primitive(self) -> bool:
        """increment -1 and no step taken below the starting height"""
        return self.increment == -1 and self.min_height >= self.start_height

    def __repr__(self) -> str:
        glyph = {Step.UP: "U", Step.DOWN: "D", Step.FLAT: "H"}
        body = "".join(
            glyph[s] if not self.types or self.types[k] is None else self.types[k].value
            for k, s in enumerate(self.steps)
        )
        return f"MotzkinWalk({self.start_height}:{body or '-'})"


@dataclass(frozen=True)
class BranchVertex:
    """
    a vertex of interior degree 2 inside a branch. going ccw from the outgoing
    dart: the left stems, the incoming dart, then the right stems.
    """
    left: tuple[StemKind, ...]
    right: tuple[StemKind, ...]


@dataclass(frozen=True)
class Branch:
    """
    a maximal chain of branch vertices, read along its orientation.
    start_label is the label on the right of the first edge at its tail.
    """
    start_label: int
    vertices: tuple[BranchVertex, ...] = ()

    @property
    def n_edges(self) -> int:
        return len(self.vertices) + 1

    def right_labels(self) -> list[int]:
        """labels on the right of each edge of the branch"""
        labels = [self.start_label]
        for v in self.vertices:
            delta = sum(1 if k is StemKind.BUD else -1 for k in v.right)
            labels.append(labels[-1] + delta)
        return labels

    @property
    def end_label(self) -> int:
        return self.right_labels()[-1]
