"""Batch verification of the counting, bijection, promotion and sieving results.

Each check is exact and bounded by a cell budget so that the whole run fits
on a laptop in well under a minute.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Callable

from .bijections import (
    enumerate_row_increasing,
    inc_to_schroder,
    large_to_row_increasing,
    phi_fiber,
    phi_step,
    row_increasing_to_large,
    schroder_to_inc,
)
from .csp import (
    hook_csp_report,
    lemma2_fiber_count,
    q_binomial_at_root,
    rect_counterexample,
)
from .paths import (
    ascents,
    enumerate_chain_paths,
    enumerate_schroder,
    narayana_closed,
    narayana_polynomial,
    narayana_row,
)
from .promotion import k_promote, orbits, order_of, promote_power, psi, psi_fiber
from .tableaux import (
    Partition,
    content,
    enumerate_all_inc,
    enumerate_inc,
    hook_length_count,
    validate,
)

RECT_GRID = [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (3, 4), (4, 2)]
HOOK_MAX_N = 8


@dataclass
class CriterionResult:
    number: int
    name: str
    group: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"criterion": self.number, "name": self.name, "group": self.group,
                "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3)}

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:>2} {self.name}: {self.detail}"


def rect_params(max_cells: int) -> list[tuple[int, int]]:
    return [(m, n) for m, n in RECT_GRID if m * n <= max_cells]


def small_rects(limit: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(2, limit + 1) for n in range(1, limit // m + 1)]


def hook_params(max_n: int) -> list[tuple[int, int, int]]:
    return [(N, r, k) for N in range(3, max_n + 1) for r in range(1, N - 1)
            for k in range(0, min(r, N - r - 1) + 1)]


def _fail(failures: list[str], msg: str) -> None:
    if len(failures) < 5:
        failures.append(msg)


def check_cardinality(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    checked = 0
    for m, n in rect_params(max_cells):
        row = narayana_row(m, n)
        for k in range(m * n):
            predicted = sum(comb(ell, k) * row[ell] for ell in range(k, len(row)))
            got = len(enumerate_inc(Partition.rectangle(m, n), k))
            checked += 1
            if got != predicted:
                _fail(failures, f"{m}x{n} k={k}: {got} != {predicted}")
    return not failures, "; ".join(failures) or f"{checked} (shape, k) pairs agree"


def check_inc_one(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    for m, n in rect_params(max_cells):
        got = len(enumerate_inc(Partition.rectangle(m, n), 1))
        syt = hook_length_count(Partition.rectangle(m, n))
        if 2 * got != (m - 1) * (n - 1) * syt:
            _fail(failures, f"{m}x{n}: {got} vs ({m - 1})({n - 1})/2*{syt}")
    if max_cells >= 9 and len(enumerate_inc(Partition.rectangle(3, 3), 1)) != 84:
        _fail(failures, "|Inc_1(3x3)| != 84")
    return not failures, "; ".join(failures) or "|Inc_1| = (m-1)(n-1)/2 |SYT| on the grid"


def check_small_schroder_total(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    for m, n in rect_params(max_cells):
        total = len(enumerate_all_inc(Partition.rectangle(m, n)))
        if total != narayana_polynomial(m, n)(2):
            _fail(failures, f"{m}x{n}: {total} != {narayana_polynomial(m, n)(2)}")
    if max_cells >= 6 and len(enumerate_all_inc(Partition.rectangle(2, 3))) != 11:
        _fail(failures, "2x3 total != 11")
    return not failures, "; ".join(failures) or "totals equal N_{m,n}(2)"


def check_schroder_bijection(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    for m, n in small_rects(min(9, max_cells)):
        tabs = enumerate_all_inc(Partition.rectangle(m, n))
        small = enumerate_schroder(m, n, small=True)
        if len(tabs) != len(small):
            _fail(failures, f"{m}x{n}: {len(tabs)} tableaux vs {len(small)} small paths")
        images = set()
        for t in tabs:
            p = inc_to_schroder(t)
            images.add(p)
            if not p.is_small or schroder_to_inc(p) != t or p.excess() != t.k:
                _fail(failures, f"{m}x{n}: round trip fails at {t}")
        if images != set(small):
            _fail(failures, f"{m}x{n}: image is not the set of small paths")
    return not failures, "; ".join(failures) or "round trips and counts agree for m*n <= 9"


def check_large_schroder(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    for m, n in small_rects(min(6, max_cells)):
        large = enumerate_schroder(m, n)
        if len(large) != 2 ** (m - 1) * narayana_polynomial(m, n)(2):
            _fail(failures, f"{m}x{n}: {len(large)} large paths")
        fillings = enumerate_row_increasing(m, n)
        if len(fillings) != len(large):
            _fail(failures, f"{m}x{n}: {len(fillings)} row-increasing fillings vs {len(large)} paths")
        for rows in fillings:
            if large_to_row_increasing(row_increasing_to_large(rows)) != rows:
                _fail(failures, f"{m}x{n}: round trip fails at {rows}")
        if {row_increasing_to_large(r) for r in fillings} != set(large):
            _fail(failures, f"{m}x{n}: image is not the set of large paths")
    return not failures, "; ".join(failures) or "large counts and round trips agree for m*n <= 6"


PHI_START = [[1, 3, 4], [2, 4, 5], [4, 5, 6]]
PHI_CHAIN = ["1,3,5;2,5,6;4,6,7", "1,3,6;2,5,7;4,7,8", "1,3,6;2,5,8;4,7,9"]
PHI_FIBER = {"1,2,3;2,3,5;3,4,6", "1,2,4;2,4,5;3,5,6", "1,2,4;2,3,5;3,5,6", "1,3,4;2,4,5;4,5,6"}
TWO_ROW_T = [[1, 3, 4, 5], [2, 4, 5, 6]]
TWO_ROW_CORNERS = [(0, 0), (1, 0), (1, 1), (2, 1), (4, 3), (4, 4)]
FOUR_ROW_T = [[1, 2, 4, 5], [2, 4, 5, 7], [3, 6, 9, 10], [4, 8, 10, 11]]
FOUR_ROW_STEPS = [(1, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 0), (1, 1, 0, 1), (1, 1, 0, 0)]
FOUR_ROW_POSITIONS = [(1, 0, 0, 0), (2, 1, 0, 0), (2, 1, 1, 0), (3, 2, 1, 1), (4, 3, 1, 1)]


def polyline_corners(positions: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Drop interior points of straight runs from a path's vertex list."""
    pts = [tuple(0 for _ in positions[0])] + positions
    out = [pts[0]]
    for prev, cur, nxt in zip(pts, pts[1:], pts[2:]):
        d1 = tuple(b - a for a, b in zip(prev, cur))
        d2 = tuple(b - a for a, b in zip(cur, nxt))
        if d1 != d2:
            out.append(cur)
    out.append(pts[-1])
    return out


def check_goldens(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    t = validate(PHI_START)
    chain = []
    while not t.is_standard:
        t = phi_step(t)
        chain.append(t.to_text())
    if chain != PHI_CHAIN:
        _fail(failures, f"phi chain {chain}")
    s = validate([[1, 3, 6], [2, 5, 8], [4, 7, 9]])
    fiber = {x.to_text() for x in phi_fiber(s, 3)}
    if fiber != PHI_FIBER:
        _fail(failures, f"fiber {sorted(fiber)}")
    p2 = inc_to_schroder(validate(TWO_ROW_T))
    if polyline_corners(p2.positions()) != TWO_ROW_CORNERS:
        _fail(failures, f"2x4 corners {polyline_corners(p2.positions())}")
    p3 = inc_to_schroder(validate(FOUR_ROW_T))
    if p3.vectors()[:5] != FOUR_ROW_STEPS or p3.positions()[:5] != FOUR_ROW_POSITIONS:
        _fail(failures, "4x4 steps/positions differ")
    return not failures, "; ".join(failures) or "phi chain, 4-element fiber, 2x4 and 4x4 paths as printed"


def check_narayana(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    count = 0
    for m, n in small_rects(min(12, max_cells)):
        hist = [0] * ((m - 1) * (n - 1) + 1)
        for p in enumerate_chain_paths(m, n):
            hist[len(ascents(p))] += 1
        closed = [narayana_closed(m, n, ell) for ell in range(len(hist))]
        count += 1
        if closed != hist:
            _fail(failures, f"({m},{n}): closed {closed} vs brute {hist}")
        if closed != closed[::-1]:
            _fail(failures, f"({m},{n}): row not symmetric")
    return not failures, "; ".join(failures) or f"closed form = brute force and symmetric on {count} (m,n)"


def check_promotion_order(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    params = hook_params(min(HOOK_MAX_N, max_cells))
    for N, r, k in params:
        elements = enumerate_inc(Partition.hook(N, r), k)
        order = order_of(orbits(elements))
        if order != N - k - 1:
            _fail(failures, f"Inc_{k}({N - r},1^{r}): order {order}")
        for t in elements:
            if psi(k_promote(t)) != k_promote(psi(t)):
                _fail(failures, f"psi does not commute at {t}")
    return not failures, "; ".join(failures) or f"order N-k-1 and psi commutation on {len(params)} hook families"


HOOK_S = [[1, 4, 8], [2], [3], [5], [6], [7], [9]]
HOOK_FIXED = {"1,2,4,6,8;2;3;5;6;7;9", "1,3,4,7,8;2;3;5;6;7;9", "1,4,5,8,9;2;3;5;6;7;9"}


def check_hook_csp(max_cells: int) -> tuple[bool, str]:
    failures: list[str] = []
    params = hook_params(min(HOOK_MAX_N, max_cells))
    lemma_checks = 0
    for N, r, k in params:
        report = hook_csp_report(N, r, k)
        if not report.overall or not report.congruent:
            _fail(failures, f"CSP fails for Inc_{k}({N - r},1^{r})")
        L = N - k - 1
        for s in enumerate_inc(Partition.hook(N - k, r), 0):
            for m in range(L):
                if promote_power(s, m) != s:
                    continue
                lemma_checks += 1
                if lemma2_fiber_count(s, N, r, k, m) != q_binomial_at_root(r, k, L, m):
                    _fail(failures, f"fiber count at {s}, m={m}")
    s = validate(HOOK_S)
    fiber = psi_fiber(s, 2)
    fixed = {t.to_text() for t in fiber if content(t) == content(promote_power(t, 4))}
    if len(fiber) != 15 or fixed != HOOK_FIXED or lemma2_fiber_count(s, 11, 6, 2, 4) != 3:
        _fail(failures, "(5,1^6) fiber goldens differ")
    return not failures, ("; ".join(failures)
                          or f"CSP on {len(params)} hook families, {lemma_checks} fiber counts, (5,1^6) fiber goldens")


def check_counterexample(max_cells: int) -> tuple[bool, str]:
    if max_cells < 9:
        return True, "skipped (needs 9 cells)"
    rec = rect_counterexample()
    ok = (rec.order == 8 and rec.fixed_by_square == 4 and rec.value_at_one == 84
          and rec.value_at_omega2.gaussian == (2, -2) and not rec.value_at_omega2.is_integer
          and not rec.report.overall)
    detail = (f"order {rec.order}, {rec.fixed_by_square} fixed by square, X(1)={rec.value_at_one}, "
              f"X(w^2)={rec.value_at_omega2.describe()}, CSP {'holds' if rec.report.overall else 'fails'}")
    return ok, detail


CRITERIA: list[tuple[int, str, str, Callable[[int], tuple[bool, str]]]] = [
    (1, "increasing tableaux as Narayana combination", "counting", check_cardinality),
    (2, "single repeated entry count", "counting", check_inc_one),
    (3, "small Schroder totals", "counting", check_small_schroder_total),
    (4, "tableaux <-> small Schroder paths", "schroder", check_schroder_bijection),
    (5, "large Schroder paths <-> row-increasing fillings", "schroder", check_large_schroder),
    (6, "worked examples", "goldens", check_goldens),
    (7, "Narayana closed form and symmetry", "narayana", check_narayana),
    (8, "hook promotion order and psi commutation", "promotion", check_promotion_order),
    (9, "hook cyclic sieving", "csp", check_hook_csp),
    (10, "3x3 counterexample", "csp", check_counterexample),
]


def selected(only: str | None) -> list[tuple[int, str, str, Callable]]:
    if not only:
        return list(CRITERIA)
    wanted = {w.strip() for w in only.split(",") if w.strip()}
    return [c for c in CRITERIA if str(c[0]) in wanted or c[2] in wanted]


def run_all(max_cells: int = 12, only: str | None = None) -> list[CriterionResult]:
    out = []
    for number, name, group, fn in selected(only):
        start = time.perf_counter()
        passed, detail = fn(max_cells)
        out.append(CriterionResult(number, name, group, passed, detail, time.perf_counter() - start))
    return out
