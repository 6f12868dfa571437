"""Maps between increasing tableaux, standard tableaux and lattice paths."""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Sequence

from .errors import AlreadyStandard, NotSmall, TabkitError
from .paths import LatticePath, SchroderPath
from .tableaux import IncreasingTableau, Partition, ascent_set, is_row_increasing, validate


def _shift(t: IncreasingTableau, threshold: int, delta: int, keep: tuple[int, int] | None = None) -> list[list[int]]:
    rows = [list(r) for r in t.rows]
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v >= threshold and (i, j) != keep:
                row[j] = v + delta
    return rows


def minimal_repeated(t: IncreasingTableau) -> int | None:
    counts = Counter(t.reading_word())
    return min((v for v, c in counts.items() if c > 1), default=None)


def phi_step(t: IncreasingTableau) -> IncreasingTableau:
    """Separate the smallest repeated value.

    Every entry ``>= a`` goes up by one, except the occurrence of ``a`` in the
    leftmost column (which is also the lowest row among the copies of ``a``).
    """
    if t.is_standard:
        raise AlreadyStandard("tableau has no repeated entries")
    a = minimal_repeated(t)
    keep = min(t.positions(a), key=lambda c: (c[1], c[0]))
    return validate(_shift(t, a, 1, keep), t.shape)


def phi(t: IncreasingTableau) -> IncreasingTableau:
    """Compose ``phi_step`` down to a standard tableau."""
    while not t.is_standard:
        t = phi_step(t)
    return t


def phi_fiber(s: IncreasingTableau, k: int) -> list[IncreasingTableau]:
    """All deficit-``k`` tableaux mapping to the standard tableau ``s`` under :func:`phi`.

    Each ``k``-subset of the ascent set gives one preimage: merge each chosen
    ascent ``c`` with ``c - 1`` by decrementing everything ``>= c``, largest first.
    """
    asc = sorted(ascent_set(s))
    out = []
    for subset in combinations(asc, k):
        t = s
        for c in reversed(subset):
            t = validate(_shift(t, c, -1), s.shape)
        out.append(t)
    return sorted(out)


def path_to_syt(p: LatticePath) -> IncreasingTableau:
    rows: list[list[int]] = [[] for _ in range(p.m)]
    for i, s in enumerate(p.steps, start=1):
        rows[s - 1].append(i)
    return validate(rows, Partition.rectangle(p.m, p.n))


def syt_to_path(t: IncreasingTableau) -> LatticePath:
    if not t.is_standard or not t.shape.is_rectangle:
        raise TabkitError("expected a standard rectangular tableau")
    where = {v: i for i, row in enumerate(t.rows) for v in row}
    m, n = len(t.shape), (t.shape[0] if len(t.shape) else 0)
    return LatticePath(m, n, tuple(where[v] + 1 for v in range(1, t.N + 1)))


def _rows_to_masks(rows: Sequence[Sequence[int]], top: int) -> tuple[int, ...]:
    masks = [0] * top
    for j, row in enumerate(rows):
        for v in row:
            masks[v - 1] |= 1 << j
    return tuple(masks)


def _masks_to_rows(p: SchroderPath) -> list[list[int]]:
    rows: list[list[int]] = [[] for _ in range(p.m)]
    for i, s in enumerate(p.steps, start=1):
        for j in range(p.m):
            if s >> j & 1:
                rows[j].append(i)
    return rows


def inc_to_schroder(t: IncreasingTableau) -> SchroderPath:
    """Step ``i`` records which rows of ``t`` contain ``i``."""
    if not t.shape.is_rectangle or not len(t.shape):
        raise TabkitError("expected a rectangular increasing tableau")
    m, n = len(t.shape), t.shape[0]
    return SchroderPath(m, n, _rows_to_masks(t.rows, t.max_entry))


def schroder_to_inc(p: SchroderPath) -> IncreasingTableau:
    if not p.is_small:
        raise NotSmall("path moves two equal consecutive coordinates together")
    return validate(_masks_to_rows(p), Partition.rectangle(p.m, p.n))


def validate_row_increasing(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Check a rectangular filling with strictly increasing rows, weakly
    increasing columns and an initial segment ``{1, ..., M}`` of entries."""
    rows_t = tuple(tuple(int(v) for v in r) for r in rows)
    if not rows_t or len({len(r) for r in rows_t}) != 1 or not rows_t[0]:
        raise TabkitError("expected a non-empty rectangular filling")
    if not is_row_increasing(rows_t):
        raise TabkitError("rows must be strictly increasing")
    for upper, lower in zip(rows_t, rows_t[1:]):
        if any(a > b for a, b in zip(upper, lower)):
            raise TabkitError("columns must be weakly increasing")
    values = {v for r in rows_t for v in r}
    if values != set(range(1, max(values) + 1)):
        raise TabkitError("entries must form an initial segment 1..M")
    return rows_t


def row_increasing_to_large(rows: Sequence[Sequence[int]] | IncreasingTableau) -> SchroderPath:
    if isinstance(rows, IncreasingTableau):
        rows = rows.rows
    rows_t = validate_row_increasing(rows)
    top = max(v for r in rows_t for v in r)
    return SchroderPath(len(rows_t), len(rows_t[0]), _rows_to_masks(rows_t, top))


def large_to_row_increasing(p: SchroderPath) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in _masks_to_rows(p))


def enumerate_row_increasing(m: int, n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Brute force over fillings with strictly increasing rows, weakly increasing
    columns and entries ``{1, ..., M}``; lexicographic in the reading word."""
    out = []
    for top in range(n, m * n + 1):
        choices = list(combinations(range(1, top + 1), n))

        def rec(prefix: list[tuple[int, ...]]):
            if len(prefix) == m:
                if set().union(*prefix) == set(range(1, top + 1)):
                    out.append(tuple(prefix))
                return
            for row in choices:
                if prefix and any(a > b for a, b in zip(prefix[-1], row)):
                    continue
                prefix.append(row)
                rec(prefix)
                prefix.pop()

        rec([])
    return sorted(out, key=lambda rows: tuple(v for r in rows for v in r))
