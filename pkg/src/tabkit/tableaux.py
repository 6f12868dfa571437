"""Partitions, increasing tableaux, enumeration and hook-length counting.

An increasing tableau of shape ``lambda`` (a partition of ``N``) has strictly
increasing rows and columns, and its entry set is exactly ``{1, ..., N - k}``
for some deficit ``k >= 0``. Deficit zero gives the standard Young tableaux.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import MissingValue, NotIncreasing, NotStandard, ShapeMismatch, TabkitError

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise TabkitError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise TabkitError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def rectangle(cls, m: int, n: int) -> "Partition":
        """The ``m x n`` rectangle ``(n, n, ..., n)`` with ``m`` rows."""
        if m < 0 or n < 0:
            raise TabkitError("rectangle dimensions must be non-negative")
        if m == 0 or n == 0:
            return cls(())
        return cls((n,) * m)

    @classmethod
    def hook(cls, N: int, r: int) -> "Partition":
        """The hook ``(N - r, 1^r)``: a row of ``N - r`` cells over ``r`` more in column one."""
        if N < 1 or not 0 <= r <= N - 1:
            raise TabkitError(f"invalid hook parameters N={N}, r={r}")
        return cls((N - r,) + (1,) * r)

    @property
    def N(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> list[tuple[int, int]]:
        """Cells in row-major reading order."""
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    @property
    def is_hook(self) -> bool:
        return len(self.parts) > 0 and all(p == 1 for p in self.parts[1:])

    @property
    def is_rectangle(self) -> bool:
        return len(set(self.parts)) <= 1

    def hook_params(self) -> tuple[int, int]:
        """Return ``(N, r)`` for a hook shape ``(N - r, 1^r)``."""
        if not self.is_hook:
            raise TabkitError(f"{self.parts} is not a hook")
        return self.N, len(self.parts) - 1

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class IncreasingTableau:
    """An element of ``Inc_k(shape)``.

    Instances should come from :func:`validate` (or the enumerators), which
    check the defining conditions and compute ``k``.
    """

    shape: Partition
    rows: Rows
    k: int

    @property
    def N(self) -> int:
        return self.shape.N

    @property
    def max_entry(self) -> int:
        return self.N - self.k

    @property
    def is_standard(self) -> bool:
        return self.k == 0

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.rows[i][j]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows if len(row) > j)

    def positions(self, value: int) -> list[tuple[int, int]]:
        """Cells holding ``value``, in reading order."""
        return [(i, j) for i, row in enumerate(self.rows) for j, v in enumerate(row) if v == value]

    def sort_key(self) -> tuple:
        return (self.shape.parts, self.reading_word())

    def __lt__(self, other: "IncreasingTableau") -> bool:
        return self.sort_key() < other.sort_key()

    def to_text(self) -> str:
        return ";".join(",".join(map(str, row)) for row in self.rows)

    def to_dict(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows], "k": self.k}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_text(cls, text: str) -> "IncreasingTableau":
        text = text.strip()
        if not text:
            return validate([])
        try:
            rows = [[int(x) for x in part.split(",")] for part in text.split(";")]
        except ValueError as exc:
            raise TabkitError(f"cannot parse tableau text {text!r}") from exc
        return validate(rows)

    @classmethod
    def from_dict(cls, data: dict) -> "IncreasingTableau":
        t = validate(data["rows"], Partition(tuple(data["shape"])))
        if "k" in data and int(data["k"]) != t.k:
            raise TabkitError(f"stored k={data['k']} disagrees with computed k={t.k}")
        return t

    @classmethod
    def from_json(cls, text: str) -> "IncreasingTableau":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Content:
    """Multiplicity vector: ``alpha[i]`` counts the entries equal to ``i + 1``."""

    alpha: tuple[int, ...]

    @property
    def N(self) -> int:
        return sum(self.alpha)

    def rotate(self, times: int = 1) -> "Content":
        """Apply the cycle ``(2 3 ... N-k)`` on places: ``(a1, a3, ..., a_last, a2)``."""
        if len(self.alpha) <= 2:
            return self
        tail = self.alpha[1:]
        s = times % len(tail)
        return Content(self.alpha[:1] + tail[s:] + tail[:s])


def validate(rows: Sequence[Sequence[int]], shape: Partition | None = None) -> IncreasingTableau:
    """Check a filling and return it as an :class:`IncreasingTableau`.

    If ``shape`` is omitted it is read off the row lengths.
    """
    rows_t: Rows = tuple(tuple(int(v) for v in row) for row in rows)
    lengths = tuple(len(r) for r in rows_t)
    if shape is None:
        try:
            shape = Partition(lengths)
        except TabkitError as exc:
            raise ShapeMismatch(f"row lengths {lengths} do not form a partition") from exc
    elif lengths != shape.parts:
        raise ShapeMismatch(f"row lengths {lengths} do not match shape {shape.parts}")

    for i, row in enumerate(rows_t):
        for j, v in enumerate(row):
            if v < 1:
                raise NotIncreasing(f"entry {v} at ({i},{j}) is not positive")
            if j > 0 and row[j - 1] >= v:
                raise NotIncreasing(f"row {i} not strictly increasing at column {j}")
            if i > 0 and rows_t[i - 1][j] >= v:
                raise NotIncreasing(f"column {j} not strictly increasing at row {i}")

    values = {v for row in rows_t for v in row}
    top = max(values, default=0)
    missing = sorted(set(range(1, top + 1)) - values)
    if missing:
        raise MissingValue(f"values {missing} are absent")
    return IncreasingTableau(shape, rows_t, shape.N - top)


def _chain_lengths(shape: Partition) -> dict[tuple[int, int], int]:
    # longest right/down chain strictly after each cell
    out: dict[tuple[int, int], int] = {}
    for i in reversed(range(len(shape))):
        for j in reversed(range(shape[i])):
            best = 0
            if j + 1 < shape[i]:
                best = out[(i, j + 1)] + 1
            if i + 1 < len(shape) and j < shape[i + 1]:
                best = max(best, out[(i + 1, j)] + 1)
            out[(i, j)] = best
    return out


def iter_inc(shape: Partition, k: int) -> Iterator[IncreasingTableau]:
    """Yield ``Inc_k(shape)`` in lexicographic order of reading words."""
    N = shape.N
    top = N - k
    if N == 0:
        if k == 0:
            yield IncreasingTableau(shape, (), 0)
        return
    if k < 0 or top < 1:
        return
    cells = shape.cells()
    after = _chain_lengths(shape)
    if after[(0, 0)] + 1 > top:
        return
    grid = [[0] * p for p in shape.parts]
    used = [0] * (top + 2)
    n_cells = len(cells)

    def rec(idx: int, distinct: int) -> Iterator[IncreasingTableau]:
        if idx == n_cells:
            if distinct == top:
                yield IncreasingTableau(shape, tuple(tuple(r) for r in grid), k)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1] + 1
        if i > 0 and grid[i - 1][j] >= lo:
            lo = grid[i - 1][j] + 1
        hi = top - after[(i, j)]
        remaining = n_cells - idx - 1
        for v in range(lo, hi + 1):
            fresh = used[v] == 0
            d = distinct + fresh
            if top - d > remaining:
                continue
            grid[i][j] = v
            used[v] += 1
            yield from rec(idx + 1, d)
            used[v] -= 1
        grid[i][j] = 0

    yield from rec(0, 0)


def enumerate_inc(shape: Partition, k: int) -> list[IncreasingTableau]:
    """All of ``Inc_k(shape)``, empty when ``k`` is infeasible."""
    return list(iter_inc(shape, k))


def enumerate_all_inc(shape: Partition) -> list[IncreasingTableau]:
    """Every increasing tableau of ``shape``, grouped by ascending ``k``."""
    out: list[IncreasingTableau] = []
    for k in range(shape.N):
        out.extend(iter_inc(shape, k))
    if shape.N == 0:
        out.extend(iter_inc(shape, 0))
    return out


def hook_lengths(shape: Partition) -> dict[tuple[int, int], int]:
    conj = shape.conjugate()
    return {(i, j): (shape[i] - j - 1) + (conj[j] - i - 1) + 1 for i, j in shape.cells()}


def hook_length_count(shape: Partition) -> int:
    """``|SYT(shape)|`` via the Frame-Robinson-Thrall hook length formula."""
    denom = 1
    for h in hook_lengths(shape).values():
        denom *= h
    return factorial(shape.N) // denom


def content(t: IncreasingTableau) -> Content:
    counts = [0] * t.max_entry
    for row in t.rows:
        for v in row:
            counts[v - 1] += 1
    return Content(tuple(counts))


def row_index(t: IncreasingTableau) -> dict[int, int]:
    """Map each value of a standard tableau to its row."""
    return {v: i for i, row in enumerate(t.rows) for v in row}


def ascent_set(t: IncreasingTableau) -> set[int]:
    """Values ``i`` that sit in a strictly higher row than ``i - 1``."""
    if not t.is_standard:
        raise NotStandard("ascents are defined for standard tableaux only")
    where = row_index(t)
    return {i for i in range(2, t.N + 1) if where[i] < where[i - 1]}


def is_row_increasing(rows: Iterable[Sequence[int]]) -> bool:
    return all(a < b for row in rows for a, b in zip(row, row[1:]))
