"""
Partitions, standard tableaux, contents and hook data.

Boxes are 1-based ``(row, column)`` pairs with rows increasing downwards.
A tableau is stored row by row; the reading word is the concatenation of
its rows from top to bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterator, Sequence

__all__ = [
    "Partition", "PartitionData", "StandardTableau", "parse_partition",
    "partitions", "partition_analyze", "hook_tableau", "contents",
    "entry_groups", "standard_tableaux", "adjacent_swap", "num_standard_tableaux",
    "hook_lengths", "GROUP_MODES",
]

GROUP_MODES = ("hook", "row", "column")


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, 1):
            for j in range(1, row + 1):
                yield i, j

    def conjugate(self) -> Partition:
        return Partition([sum(1 for p in self if p >= j) for j in range(1, self[0] + 1)])

    def __repr__(self):
        return f"Partition({list(self)})"


def parse_partition(text: str) -> Partition:
    """Parse "3,3,2" into a partition."""
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise ValueError(f"invalid partition {text!r}") from exc
    return Partition(parts)


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    out = []

    def rec(rest: int, cap: int, acc: list[int]):
        if rest == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + [p])

    if n >= 1:
        rec(n, n, [])
    return out


@dataclass(frozen=True)
class PartitionData:
    durfee: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    hooks: tuple[int, ...]


def partition_analyze(p: Sequence[int]) -> PartitionData:
    """Durfee side, Frobenius coordinates (alpha | beta) and principal hook lengths.

    alpha_k counts boxes strictly right of the diagonal in row k and beta_k
    counts boxes on or below the diagonal in column k, so the k-th principal
    hook has alpha_k + beta_k boxes.
    """
    p = Partition(p)
    conj = p.conjugate()
    d = sum(1 for k, part in enumerate(p, 1) if part >= k)
    alpha = tuple(p[k] - (k + 1) for k in range(d))
    beta = tuple(conj[k] - k for k in range(d))
    return PartitionData(d, alpha, beta, tuple(a + b for a, b in zip(alpha, beta)))


def hook_lengths(p: Sequence[int]) -> dict[tuple[int, int], int]:
    """Hook length of every box."""
    p = Partition(p)
    conj = p.conjugate()
    return {(i, j): (p[i - 1] - j) + (conj[j - 1] - i) + 1 for i, j in p.boxes()}


def num_standard_tableaux(p: Sequence[int]) -> int:
    """f^lambda by the hook-length formula."""
    p = Partition(p)
    return factorial(p.n) // prod(hook_lengths(p).values())


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = Partition([len(r) for r in rows])
        n = shape.n
        if sorted(v for r in rows for v in r) != list(range(1, n + 1)):
            raise ValueError(f"entries must be 1..{n} exactly once: {rows}")
        for r in rows:
            if any(r[k] >= r[k + 1] for k in range(len(r) - 1)):
                raise ValueError(f"rows must increase: {rows}")
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    raise ValueError(f"columns must increase: {rows}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> StandardTableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return Partition([len(r) for r in self.rows])

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """entry -> (row, column), 1-based."""
        return {v: (i, j) for i, r in enumerate(self.rows, 1) for j, v in enumerate(r, 1)}

    def __getitem__(self, box: tuple[int, int]) -> int:
        i, j = box
        return self.rows[i - 1][j - 1]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for r in self.rows for v in r)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self.rows)


def hook_tableau(p: Sequence[int]) -> StandardTableau:
    """Fill the diagram hook by hook: each principal hook's column, then its row."""
    p = Partition(p)
    conj = p.conjugate()
    d = partition_analyze(p).durfee
    grid = [[0] * part for part in p]
    nxt = 1
    for k in range(1, d + 1):
        for i in range(k, conj[k - 1] + 1):
            grid[i - 1][k - 1] = nxt
            nxt += 1
        for j in range(k + 1, p[k - 1] + 1):
            grid[k - 1][j - 1] = nxt
            nxt += 1
    return StandardTableau.from_rows(grid)


def contents(T: StandardTableau) -> tuple[int, ...]:
    """(c_1, ..., c_n) with c_a = column - row of the box holding a."""
    pos = T.positions
    return tuple(pos[a][1] - pos[a][0] for a in range(1, T.n + 1))


def entry_groups(T: StandardTableau, mode: str) -> tuple[int, ...]:
    """0-based principal hook / row / column index of each entry 1..n."""
    pos = T.positions
    if mode == "hook":
        key = lambda b: min(b) - 1
    elif mode == "row":
        key = lambda b: b[0] - 1
    elif mode == "column":
        key = lambda b: b[1] - 1
    else:
        raise ValueError(f"unknown grouping mode {mode!r}")
    return tuple(key(pos[a]) for a in range(1, T.n + 1))


def standard_tableaux(p: Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux of shape p, sorted lexicographically by reading word."""
    p = Partition(p)
    n = p.n
    out = []
    filled = [0] * len(p)
    grid = [[0] * part for part in p]

    def place(v: int):
        if v > n:
            out.append(StandardTableau.from_rows(grid))
            return
        for i in range(len(p)):
            j = filled[i]
            if j < p[i] and (i == 0 or filled[i - 1] > j):
                grid[i][j] = v
                filled[i] += 1
                place(v + 1)
                filled[i] -= 1
                grid[i][j] = 0

    place(1)
    out.sort(key=StandardTableau.reading_word)
    return out


def adjacent_swap(T: StandardTableau, k: int) -> StandardTableau:
    """Exchange the entries k and k+1; they must not share a row or column."""
    n = T.n
    if not 1 <= k < n:
        raise ValueError(f"entry {k} has no successor in a tableau of size {n}")
    (i1, j1), (i2, j2) = T.positions[k], T.positions[k + 1]
    if i1 == i2 or j1 == j2:
        raise ValueError(f"swapping {k} and {k + 1} does not give a standard tableau")
    rows = T.to_lists()
    rows[i1 - 1][j1 - 1], rows[i2 - 1][j2 - 1] = k + 1, k
    return StandardTableau.from_rows(rows)
