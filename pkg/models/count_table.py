# models/count_table.py
# exact census tables keyed by index tuples

from dataclasses import dataclass, field

import pandas as pd


@dataclass
class CountTable:
    """
    counts of rooted objects of one genus, indexed by a tuple of statistics.
    axis names the coordinates, e.g. ("V", "F") or ("F_black", "F_white").
    """
    genus: int
    axis: tuple[str, ...]
    counts: dict[tuple[int, ...], int] = field(default_factory=dict)

    def add(self, index: tuple[int, ...], amount: int = 1):
        self.counts[index] = self.counts.get(index, 0) + amount

    def merge(self, other: "CountTable") -> "CountTable":
        """commutative sum of two tables with the same axis"""
        merged = CountTable(self.genus, self.axis, dict(self.counts))
        for index, c in other.counts.items():
            merged.add(index, c)
        return merged

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def get(self, *index: int) -> int:
        return self.counts.get(tuple(index), 0)

    def nonzero(self) -> dict[tuple[int, ...], int]:
        return {k: v for k, v in self.counts.items() if v}

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        return self.genus == other.genus and self.nonzero() == other.nonzero()

    def rows(self) -> list[list[int]]:
        """[[i1, ..., ik, count], ...] in lexicographic index order"""
        return [list(k) + [v] for k, v in sorted(self.nonzero().items())]

    def to_json(self) -> dict:
        return {"genus": self.genus, "axis": list(self.axis), "counts": self.rows()}

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows(), columns=list(self.axis) + ["count"])

    def __repr__(self) -> str:
        return f"CountTable(genus={self.genus}, axis={self.axis}, total={self.total}, cells={len(self.nonzero())})"
