"""Integer partitions and the cell statistics of their diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

# Series never go beyond this weight; enforced by hyperjack, not here.
MAX_WEIGHT_CAP = 64


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are never stored."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for p, q in zip(parts, parts[1:]):
            if p < q:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part ``kappa_i``; zero beyond the length."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        return self.parts + (0,) * max(0, n - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"Partition{self.parts!r}"


EMPTY = Partition()


@dataclass(frozen=True)
class DiagramCell:
    row: int
    col: int
    arm: int
    coarm: int
    leg: int
    coleg: int


def _gen(n: int, max_part: int, max_length: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest = n - first
        # the remaining parts are each <= first and there are at most max_length-1 of them
        if rest > first * (max_length - 1):
            break
        for tail in _gen(rest, first, max_length - 1):
            yield (first,) + tail


@lru_cache(maxsize=4096)
def _enumerate_cached(weight: int, max_length: int, max_part: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _gen(weight, max_part, max_length))


def enumerate_partitions(weight: int, max_length: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``weight`` with length <= max_length and parts <= max_part.

    Order is reverse-lexicographic, e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    ``None`` means unbounded.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative")
    ml = weight if max_length is None else max(0, min(max_length, weight))
    mp = weight if max_part is None else max(0, min(max_part, weight))
    return list(_enumerate_cached(weight, ml, mp))


def partition_count(n: int) -> int:
    """Number of partitions of n by the standard coin-change recurrence."""
    table = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            table[m] += table[m - k]
    return table[n]


def diagram_cells(kappa: Partition | Sequence[int]) -> list[DiagramCell]:
    """Cells (i, j) of the diagram in row-major order with arm/coarm/leg/coleg."""
    kappa = kappa if isinstance(kappa, Partition) else Partition(tuple(kappa))
    conj = kappa.conjugate().parts
    cells = []
    for i, row in enumerate(kappa.parts, start=1):
        for j in range(1, row + 1):
            cells.append(DiagramCell(i, j, arm=row - j, coarm=j - 1, leg=conj[j - 1] - i, coleg=i - 1))
    return cells
