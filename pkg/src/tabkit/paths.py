"""Chain-region lattice paths, m-Narayana numbers and m-Schroder paths.

All paths run from the origin to ``(n, ..., n)`` in ``m`` dimensions and stay
in the region ``0 <= x_m <= ... <= x_1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from .errors import DomainError, TabkitError
from .polynomial import QPolynomial


@dataclass(frozen=True)
class LatticePath:
    """Path with unit steps; ``steps[i] == j`` means step ``i + 1`` is ``X_j``."""

    m: int
    n: int
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))
        if len(self.steps) != self.m * self.n:
            raise TabkitError(f"expected {self.m * self.n} steps, got {len(self.steps)}")
        pos = [0] * self.m
        for s in self.steps:
            if not 1 <= s <= self.m:
                raise TabkitError(f"step index {s} outside 1..{self.m}")
            pos[s - 1] += 1
            if s > 1 and pos[s - 1] > pos[s - 2]:
                raise TabkitError(f"path leaves the chain region at {tuple(pos)}")

    def positions(self) -> list[tuple[int, ...]]:
        pos = [0] * self.m
        out = []
        for s in self.steps:
            pos[s - 1] += 1
            out.append(tuple(pos))
        return out

    def to_text(self) -> str:
        if self.m > 9:
            return ".".join(map(str, self.steps))
        return "".join(map(str, self.steps))

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "steps": list(self.steps)}

    @classmethod
    def from_text(cls, text: str, m: int) -> "LatticePath":
        text = text.strip()
        steps = [int(x) for x in (text.split(".") if "." in text else text)]
        if len(steps) % m:
            raise TabkitError(f"{len(steps)} steps is not a multiple of m={m}")
        return cls(m, len(steps) // m, tuple(steps))

    @classmethod
    def from_dict(cls, data: dict) -> "LatticePath":
        return cls(int(data["m"]), int(data["n"]), tuple(data["steps"]))


@dataclass(frozen=True)
class SchroderPath:
    """Path with nonzero 0/1 steps, each encoded as a bitmask (bit ``j - 1`` is ``xi_j``)."""

    m: int
    n: int
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))
        full = (1 << self.m) - 1
        pos = [0] * self.m
        for s in self.steps:
            if not 1 <= s <= full:
                raise TabkitError(f"step mask {s} is not a nonzero 0/1 vector of length {self.m}")
            for j in range(self.m):
                if s >> j & 1:
                    pos[j] += 1
            if pos[0] > self.n or any(pos[j + 1] > pos[j] for j in range(self.m - 1)):
                raise TabkitError(f"path leaves the chain region at {tuple(pos)}")
        if pos != [self.n] * self.m:
            raise TabkitError(f"path ends at {tuple(pos)}, not at ({self.n},)*{self.m}")

    def vectors(self) -> list[tuple[int, ...]]:
        return [step_vector(s, self.m) for s in self.steps]

    def positions(self) -> list[tuple[int, ...]]:
        pos = [0] * self.m
        out = []
        for s in self.steps:
            for j in range(self.m):
                pos[j] += s >> j & 1
            out.append(tuple(pos))
        return out

    @property
    def is_small(self) -> bool:
        pos = [0] * self.m
        for s in self.steps:
            if not _small_step_ok(pos, s, self.m):
                return False
            for j in range(self.m):
                pos[j] += s >> j & 1
        return True

    def multi_steps(self) -> int:
        """Number of steps that move more than one coordinate."""
        return sum(1 for s in self.steps if s & (s - 1))

    def excess(self) -> int:
        """Coordinates moved beyond one per step; equals the deficit of the matching tableau."""
        return sum(bin(s).count("1") - 1 for s in self.steps)

    def to_text(self) -> str:
        return ",".join(map(str, self.steps))

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "steps": list(self.steps)}

    @classmethod
    def from_text(cls, text: str, m: int) -> "SchroderPath":
        steps = tuple(int(x) for x in text.strip().split(",") if x.strip())
        n = sum(s & 1 for s in steps)
        return cls(m, n, steps)

    @classmethod
    def from_dict(cls, data: dict) -> "SchroderPath":
        return cls(int(data["m"]), int(data["n"]), tuple(data["steps"]))


def step_vector(mask: int, m: int) -> tuple[int, ...]:
    return tuple(mask >> j & 1 for j in range(m))


def step_mask(vector: tuple[int, ...]) -> int:
    return sum(1 << j for j, x in enumerate(vector) if x)


def _small_step_ok(pos: list[int], mask: int, m: int) -> bool:
    for j in range(m - 1):
        if pos[j] == pos[j + 1] and mask >> j & 1 and mask >> (j + 1) & 1:
            return False
    return True


def iter_chain_paths(m: int, n: int) -> Iterator[LatticePath]:
    """Yield ``C(m, n)`` in lexicographic order of step words."""
    if m < 1 or n < 0:
        raise DomainError("need m >= 1 and n >= 0")
    pos = [0] * m
    word: list[int] = []
    total = m * n

    def rec() -> Iterator[LatticePath]:
        if len(word) == total:
            yield LatticePath(m, n, tuple(word))
            return
        for j in range(m):
            if pos[j] < n and (j == 0 or pos[j] < pos[j - 1]):
                pos[j] += 1
                word.append(j + 1)
                yield from rec()
                word.pop()
                pos[j] -= 1

    yield from rec()


def enumerate_chain_paths(m: int, n: int) -> list[LatticePath]:
    return list(iter_chain_paths(m, n))


def ascents(p: LatticePath) -> set[int]:
    """Positions ``i`` (1-based) with ``steps[i-1] = X_j``, ``steps[i] = X_r`` and ``r < j``."""
    s = p.steps
    return {i + 1 for i in range(1, len(s)) if s[i - 1] > s[i]}


def narayana_closed(m: int, n: int, ell: int) -> int:
    """``N(m, n, ell)`` by Sulanke's alternating sum, in exact rationals."""
    if m < 2 or n < 1:
        raise DomainError(f"closed form needs m >= 2 and n >= 1, got m={m}, n={n}")
    if not 0 <= ell <= (m - 1) * (n - 1):
        raise DomainError(f"ell={ell} outside [0, {(m - 1) * (n - 1)}]")
    total = Fraction(0)
    for j in range(ell + 1):
        prod = Fraction(1)
        for i in range(m):
            prod *= Fraction(comb(n + i + j, n), comb(n + i, n))
        total += (-1) ** (ell - j) * comb(m * n + 1, ell - j) * prod
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral Narayana value {total}")
    return int(total)


def narayana_row(m: int, n: int) -> list[int]:
    return [narayana_closed(m, n, ell) for ell in range((m - 1) * (n - 1) + 1)]


def narayana_polynomial(m: int, n: int) -> QPolynomial:
    """``N_{m,n}(t) = sum_ell N(m, n, ell) t**ell``."""
    return QPolynomial(narayana_row(m, n))


def m_catalan(m: int, n: int) -> int:
    """``N_{m,n}(1)``, the number of standard ``m x n`` tableaux."""
    return narayana_polynomial(m, n)(1)


def small_schroder_number(m: int, n: int) -> int:
    return narayana_polynomial(m, n)(2)


def large_schroder_number(m: int, n: int) -> int:
    return 2 ** (m - 1) * small_schroder_number(m, n)


def iter_schroder(m: int, n: int, small: bool = False) -> Iterator[SchroderPath]:
    """Yield large (or small) m-Schroder paths in lexicographic order of mask words."""
    if m < 2 or n < 0:
        raise DomainError("need m >= 2 and n >= 0")
    pos = [0] * m
    word: list[int] = []
    full = (1 << m) - 1

    def rec() -> Iterator[SchroderPath]:
        if pos[m - 1] == n:
            yield SchroderPath(m, n, tuple(word))
            return
        for mask in range(1, full + 1):
            if small and not _small_step_ok(pos, mask, m):
                continue
            new = [pos[j] + (mask >> j & 1) for j in range(m)]
            if new[0] > n or any(new[j + 1] > new[j] for j in range(m - 1)):
                continue
            saved = pos[:]
            pos[:] = new
            word.append(mask)
            yield from rec()
            word.pop()
            pos[:] = saved

    yield from rec()


def enumerate_schroder(m: int, n: int, small: bool = False) -> list[SchroderPath]:
    return list(iter_schroder(m, n, small))


def path_json(p: LatticePath | SchroderPath) -> str:
    return json.dumps(p.to_dict(), separators=(",", ":"))
