"""K-jeu-de-taquin promotion on increasing tableaux and its orbit structure."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import lcm
from typing import Callable, Iterable, Sequence

from .errors import NotHook, NotStandard, TabkitError
from .tableaux import IncreasingTableau, Partition, content, enumerate_inc, validate

DOT = 0


def k_promote(t: IncreasingTableau) -> IncreasingTableau:
    """Thomas-Yong K-promotion.

    The 1s become dots. For each value ``a = 2, 3, ...`` every dot with an
    ``a`` directly right of or below it takes the value ``a`` and every such
    ``a`` cell becomes a dot, all at once. Finally the dots are filled with
    the old maximum and every other entry drops by one.
    """
    if t.N == 0:
        return t
    grid = [list(r) for r in t.rows]
    top = t.max_entry
    dots = {(i, j) for i, row in enumerate(grid) for j, v in enumerate(row) if v == 1}
    for i, j in dots:
        grid[i][j] = DOT

    def value(i: int, j: int) -> int | None:
        if 0 <= i < len(grid) and 0 <= j < len(grid[i]):
            return grid[i][j]
        return None

    for a in range(2, top + 1):
        filled = set()
        vacated = set()
        for i, j in dots:
            for ni, nj in ((i, j + 1), (i + 1, j)):
                if value(ni, nj) == a:
                    filled.add((i, j))
                    vacated.add((ni, nj))
        if not filled:
            continue
        for i, j in filled:
            grid[i][j] = a
        for i, j in vacated:
            grid[i][j] = DOT
        dots = (dots - filled) | vacated

    rows = [[top if v == DOT else v - 1 for v in row] for row in grid]
    return validate(rows, t.shape)


def _hook_arms(t: IncreasingTableau) -> tuple[list[int], list[int]]:
    if not t.shape.is_hook:
        raise NotHook(f"shape {t.shape.parts} is not a hook")
    return list(t.rows[0]), [row[0] for row in t.rows[1:]]


def k_promote_hook(t: IncreasingTableau) -> IncreasingTableau:
    """K-promotion on a hook using only the three corner rules.

    Away from the corner each arm is a single line, so a dot there simply
    travels to the end of its arm.
    """
    row, col = _hook_arms(t)
    top = t.max_entry
    right = row[1] if len(row) > 1 else None
    below = col[0] if col else None
    # which arms the corner dot escapes into
    if right is None and below is None:
        row_dot, col_dot = False, False
    elif below is None or (right is not None and right < below):
        row_dot, col_dot = True, False
    elif right is None or below < right:
        row_dot, col_dot = False, True
    else:
        row_dot, col_dot = True, True

    if row_dot:
        new_row = row[1:] + [None]
        corner = row[1]
    else:
        new_row = [None] + row[1:]
    if col_dot:
        new_col = col[1:] + [None]
        corner = col[0]
    else:
        new_col = list(col)
    if not row_dot and not col_dot:
        corner = None
    new_row[0] = corner

    def finish(v):
        return top if v is None else v - 1

    rows = [[finish(v) for v in new_row]] + [[finish(v)] for v in new_col]
    return validate(rows, t.shape)


def promote_power(t: IncreasingTableau, m: int, action: Callable = k_promote) -> IncreasingTableau:
    for _ in range(m):
        t = action(t)
    return t


def psi(t: IncreasingTableau) -> IncreasingTableau:
    """Drop from the first row of a hook every value repeated in its column."""
    row, col = _hook_arms(t)
    in_col = set(col)
    kept = [v for v in row if v not in in_col]
    return validate([kept] + [[v] for v in col])


def psi_fiber(s: IncreasingTableau, k: int) -> list[IncreasingTableau]:
    """Every deficit-``k`` hook tableau ``T`` with ``psi(T) == s``."""
    row, col = _hook_arms(s)
    if not s.is_standard:
        raise NotStandard("psi fibers are taken over standard hooks")
    out = []
    for extra in combinations(col, k):
        out.append(validate([sorted(row + list(extra))] + [[v] for v in col]))
    return sorted(out)


def gamma(s: IncreasingTableau) -> frozenset[int]:
    """Entries of the first column strictly below the corner."""
    _, col = _hook_arms(s)
    if not s.is_standard:
        raise NotStandard("gamma is defined on standard hooks")
    return frozenset(col)


def theta(values: Iterable[int], N: int) -> frozenset[int]:
    """Apply ``(2 3 ... N)^-1``: ``2 -> N`` and ``i -> i - 1`` otherwise."""
    return frozenset(N if v == 2 else v - 1 for v in values)


def content_rotation_check(t: IncreasingTableau) -> bool:
    return content(k_promote(t)) == content(t).rotate()


@dataclass(frozen=True)
class PromotionOrbit:
    representative: IncreasingTableau
    members: tuple[IncreasingTableau, ...]

    @property
    def period(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {"period": self.period, "size": len(self.members), "representative": self.representative.to_text()}


def orbits(elements: Sequence[IncreasingTableau], action: Callable = k_promote) -> list[PromotionOrbit]:
    """Split ``elements`` into cycles of ``action``, keyed by their smallest member.

    Raises :class:`TabkitError` if ``action`` does not permute ``elements``.
    """
    universe = set(elements)
    seen: set[IncreasingTableau] = set()
    out = []
    for start in sorted(universe):
        if start in seen:
            continue
        cycle = [start]
        cur = action(start)
        while cur != start:
            if cur not in universe or cur in seen or len(cycle) > len(universe):
                raise TabkitError("action is not a permutation of the given set")
            cycle.append(cur)
            cur = action(cur)
        seen.update(cycle)
        # start is the minimum of its orbit because we scan in sorted order
        out.append(PromotionOrbit(start, tuple(cycle)))
    return out


def orbit_decomposition(shape: Partition, k: int, action: Callable = k_promote) -> list[PromotionOrbit]:
    return orbits(enumerate_inc(shape, k), action)


def order_of(orbit_list: Iterable[PromotionOrbit]) -> int:
    return reduce(lcm, (o.period for o in orbit_list), 1)


def promotion_order(shape: Partition, k: int) -> int:
    """Least ``l`` with ``k_promote**l`` the identity on ``Inc_k(shape)``."""
    return order_of(orbit_decomposition(shape, k))


def order_witness(shape: Partition, k: int) -> PromotionOrbit | None:
    """An orbit of maximal period."""
    return max(orbit_decomposition(shape, k), key=lambda o: o.period, default=None)


def fixed_from_orbits(orbit_list: Iterable[PromotionOrbit], m: int) -> int:
    """Number of points fixed by the ``m``-th power, read off orbit periods."""
    return sum(o.period for o in orbit_list if m % o.period == 0)


def fixed_count(shape: Partition, k: int, m: int) -> int:
    return fixed_from_orbits(orbit_decomposition(shape, k), m)

