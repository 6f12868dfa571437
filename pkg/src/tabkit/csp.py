"""q-binomials, exact evaluation at roots of unity and cyclic sieving checks.

Values at ``w**m`` (``w = exp(2*pi*i/L)``) are never computed in floating
point for a verdict. A polynomial is reduced modulo ``q**L - 1`` after the
substitution ``q -> q**m`` and then modulo the cyclotomic polynomial ``Phi_L``,
which gives a canonical coordinate vector in the basis ``1, w, w**2, ...``.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, gcd
from typing import Callable, Sequence

from .errors import ActionOrderMismatch, DomainError, NotFixed, NotHook, NotStandard
from .polynomial import QPolynomial, cyclotomic, format_poly, q_minus_one
from .promotion import (
    PromotionOrbit,
    fixed_from_orbits,
    k_promote,
    orbits,
    order_of,
    promote_power,
    psi_fiber,
)
from .tableaux import IncreasingTableau, Partition, content, enumerate_inc


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPolynomial:
    """Gaussian binomial ``[a choose b]_q`` via ``[a,b] = [a-1,b-1] + q**b [a-1,b]``."""
    if not 0 <= b <= a:
        raise DomainError(f"q-binomial needs 0 <= b <= a, got a={a}, b={b}")
    if b == 0 or b == a:
        return QPolynomial.constant(1)
    return q_binomial(a - 1, b - 1) + QPolynomial.monomial(b) * q_binomial(a - 1, b)


@dataclass(frozen=True)
class RootOfUnityValue:
    """Exact value of a polynomial at ``w**m`` with ``w`` a primitive ``N``-th root."""

    N: int
    m: int
    residue: tuple[int, ...]
    canonical: tuple[int, ...]
    approx: complex = field(compare=False)
    gaussian: tuple[int, int] | None = None

    @property
    def order(self) -> int:
        """Multiplicative order ``d`` of ``w**m``."""
        return self.N // gcd(self.N, self.m)

    @property
    def is_integer(self) -> bool:
        return len(self.canonical) <= 1

    def as_int(self) -> int:
        if not self.is_integer:
            raise DomainError(f"value {self.describe()} is not an integer")
        return self.canonical[0] if self.canonical else 0

    def describe(self) -> str:
        if self.is_integer:
            return str(self.as_int())
        if self.gaussian is not None:
            re, im = self.gaussian
            return f"{re}{'+' if im >= 0 else '-'}{abs(im)}i"
        return format_poly(QPolynomial(self.canonical), "w")

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "m": self.m,
            "exact": self.describe(),
            "integer": self.is_integer,
            "canonical": list(self.canonical),
            "approx": [round(self.approx.real, 12), round(self.approx.imag, 12)],
        }


def _eval_gaussian(poly: QPolynomial, e: int) -> tuple[int, int]:
    # q = i**e, exactly
    re = im = 0
    powers = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    for j, c in enumerate(poly.coeffs):
        pr, pi = powers[(j * e) % 4]
        re += c * pr
        im += c * pi
    return re, im


def evaluate_at_root(poly: QPolynomial, N: int, m: int) -> RootOfUnityValue:
    """Evaluate ``poly`` at ``w**m`` where ``w = exp(2*pi*i/N)``."""
    if N < 1:
        raise DomainError("root order must be positive")
    m %= N
    residue = poly.compose_power(m).reduce_cyclic(N)
    canonical = (QPolynomial(residue) % cyclotomic(N)).coeffs
    w = cmath.exp(2j * cmath.pi / N)
    approx = sum(c * w**j for j, c in enumerate(canonical)) if canonical else 0j
    gaussian = None
    if (4 * m) % N == 0:
        gaussian = _eval_gaussian(poly, 4 * m // N)
    return RootOfUnityValue(N, m, residue, canonical, complex(approx), gaussian)


def q_binomial_at_root(a: int, b: int, N: int, m: int) -> int:
    """``[a choose b]_q`` at ``q = w**m``, ``w`` a primitive ``N``-th root of unity.

    With ``d`` the order of ``w**m``, the q-Lucas rule gives
    ``C(a // d, b // d) * [a % d choose b % d]`` at a primitive ``d``-th root.
    When ``d`` divides ``a`` this is ``C(a/d, b/d)`` if ``d | b`` and 0 otherwise.
    The leftover factor is evaluated exactly when it is not trivially 0 or 1;
    a :class:`DomainError` is raised if the value is not rational.
    """
    if not 0 <= b <= a:
        raise DomainError(f"q-binomial needs 0 <= b <= a, got a={a}, b={b}")
    d = N // gcd(N, m % N)
    a1, a0 = divmod(a, d)
    b1, b0 = divmod(b, d)
    if b0 > a0:
        return 0
    base = comb(a1, b1)
    if b0 == 0 or b0 == a0:
        return base
    leftover = evaluate_at_root(q_binomial(a0, b0), d, 1)
    if not leftover.is_integer:
        raise DomainError(f"[{a} {b}]_q at a primitive {d}-th root is {leftover.describe()}, not rational")
    return base * leftover.as_int()


def _check_hook_params(N: int, r: int, k: int) -> None:
    if not (N >= 1 and 0 <= r <= N - 1 and 0 <= k <= r and k <= N - r - 1):
        raise DomainError(f"no increasing hook tableaux for N={N}, r={r}, k={k}")


def hook_csp_polynomial(N: int, r: int, k: int) -> QPolynomial:
    """``[N-k-1 choose r]_q * [r choose k]_q``."""
    _check_hook_params(N, r, k)
    return q_binomial(N - k - 1, r) * q_binomial(r, k)


@dataclass(frozen=True)
class CspRow:
    m: int
    value: RootOfUnityValue
    fixed: int

    @property
    def match(self) -> bool:
        return self.value.is_integer and self.value.as_int() == self.fixed

    def to_dict(self) -> dict:
        return {"m": self.m, "value": self.value.describe(), "fixed": self.fixed,
                "verdict": "match" if self.match else "mismatch"}


@dataclass(frozen=True)
class CspReport:
    descriptor: str
    order: int
    polynomial: QPolynomial
    rows: tuple[CspRow, ...]
    congruent: bool
    orbit_periods: tuple[int, ...] = ()

    @property
    def overall(self) -> bool:
        return all(row.match for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "set": self.descriptor,
            "order": self.order,
            "polynomial": format_poly(self.polynomial),
            "size": sum(self.orbit_periods),
            "rows": [row.to_dict() for row in self.rows],
            "congruent": self.congruent,
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        lines = [f"{self.descriptor}: cyclic group of order {self.order}, X(q) = {format_poly(self.polynomial)}",
                 f"{'m':>3}  {'X(w^m)':>12}  {'fixed':>6}  verdict"]
        for row in self.rows:
            lines.append(f"{row.m:>3}  {row.value.describe():>12}  {row.fixed:>6}  "
                         f"{'match' if row.match else 'MISMATCH'}")
        lines.append(f"CSP {'holds' if self.overall else 'fails'}")
        return "\n".join(lines)


def orbit_residue(orbit_list: Sequence[PromotionOrbit], L: int) -> tuple[int, ...]:
    """``sum over orbits of (1 + q**(L/p) + ... + q**(L - L/p))`` reduced mod ``q**L - 1``."""
    out = [0] * L
    for o in orbit_list:
        for j in range(0, L, L // o.period):
            out[j] += 1
    return tuple(out)


def csp_verify(
    elements: Sequence[IncreasingTableau],
    poly: QPolynomial,
    action: Callable = k_promote,
    order: int | None = None,
    descriptor: str = "",
) -> CspReport:
    """Compare ``poly`` at every power of a primitive ``order``-th root with fixed-point counts.

    ``order`` defaults to the order of ``action`` on ``elements``; an explicit
    order that the action's orbits do not divide raises :class:`ActionOrderMismatch`.
    """
    orbs = orbits(elements, action)
    L = order_of(orbs) if order is None else order
    bad = [o.period for o in orbs if L % o.period]
    if bad:
        raise ActionOrderMismatch(f"action^{L} is not the identity (orbit periods {sorted(set(bad))})")
    rows = tuple(CspRow(m, evaluate_at_root(poly, L, m), fixed_from_orbits(orbs, m)) for m in range(L))
    congruent = poly.reduce_cyclic(L) == orbit_residue(orbs, L)
    return CspReport(descriptor, L, poly, rows, congruent, tuple(o.period for o in orbs))


def hook_csp_report(N: int, r: int, k: int) -> CspReport:
    """The hook CSP check with group order ``N - k - 1``."""
    _check_hook_params(N, r, k)
    elements = enumerate_inc(Partition.hook(N, r), k)
    return csp_verify(elements, hook_csp_polynomial(N, r, k), order=N - k - 1,
                      descriptor=f"Inc_{k}({N - r},1^{r})")


def lemma2_fiber_count(s: IncreasingTableau, N: int, r: int, k: int, m: int) -> int:
    """Count ``T`` in ``Inc_k(N-r, 1^r)`` with ``psi(T) == s`` whose content is fixed by ``m`` promotions."""
    _check_hook_params(N, r, k)
    if not s.shape.is_hook or s.shape != Partition.hook(N - k, r):
        raise NotHook(f"expected a standard tableau of shape ({N - r - k},1^{r})")
    if not s.is_standard:
        raise NotStandard("lemma2_fiber_count takes a standard hook")
    if promote_power(s, m) != s:
        raise NotFixed(f"tableau is not fixed by {m} promotions")
    return sum(1 for t in psi_fiber(s, k) if content(t) == content(promote_power(t, m)))


@dataclass(frozen=True)
class CounterexampleRecord:
    polynomial: QPolynomial
    value_at_one: int
    order: int
    fixed_by_square: int
    value_at_omega2: RootOfUnityValue
    report: CspReport

    def to_dict(self) -> dict:
        return {
            "polynomial": format_poly(self.polynomial),
            "X(1)": self.value_at_one,
            "promotion_order": self.order,
            "fixed_by_square": self.fixed_by_square,
            "X(w^2)": self.value_at_omega2.to_dict(),
            "csp": self.report.to_dict(),
        }


def rect33_q_analogue() -> QPolynomial:
    """``(q^9-1)(q^8-1)(q^7-1)(q^6-1) / ((q^4-1)(q^3-1)^2(q-1))``, divided exactly."""
    num = q_minus_one(9) * q_minus_one(8) * q_minus_one(7) * q_minus_one(6)
    den = q_minus_one(4) * q_minus_one(3) * q_minus_one(3) * q_minus_one(1)
    return num.exact_div(den)


def rect_counterexample() -> CounterexampleRecord:
    """The q-analogue of ``|Inc_1(3x3)| = 84`` is not a sieving polynomial for K-promotion."""
    poly = rect33_q_analogue()
    elements = enumerate_inc(Partition.rectangle(3, 3), 1)
    orbs = orbits(elements)
    L = order_of(orbs)
    report = csp_verify(elements, poly, order=L, descriptor="Inc_1(3x3)")
    return CounterexampleRecord(
        polynomial=poly,
        value_at_one=poly(1),
        order=L,
        fixed_by_square=fixed_from_orbits(orbs, 2),
        value_at_omega2=evaluate_at_root(poly, L, 2),
        report=report,
    )
