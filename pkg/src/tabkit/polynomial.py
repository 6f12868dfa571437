"""Integer-coefficient polynomials in one variable, exact arithmetic only."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import DivisionNotExact

Number = Union[int, Fraction, complex]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QPolynomial:
    """``coeffs[i]`` is the coefficient of ``q**i``; the zero polynomial has ``coeffs == ()``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "QPolynomial":
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "QPolynomial | int") -> "QPolynomial":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "QPolynomial | int") -> "QPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "QPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPolynomial":
        out = QPolynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, divisor: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division over the integers.

        Raises :class:`DivisionNotExact` if a quotient coefficient would not be
        an integer.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return QPolynomial(), self
        quot = [0] * (len(rem) - dd)
        for shift in reversed(range(len(quot))):
            c = rem[shift + dd]
            if c == 0:
                continue
            if c % lead:
                raise DivisionNotExact(f"leading coefficient {lead} does not divide {c}")
            f = c // lead
            quot[shift] = f
            for i, d in enumerate(divisor.coeffs):
                rem[shift + i] -= f * d
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, divisor: "QPolynomial") -> "QPolynomial":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise DivisionNotExact(f"nonzero remainder {r.coeffs}")
        return q

    def __floordiv__(self, divisor: "QPolynomial") -> "QPolynomial":
        return self.exact_div(divisor)

    def __mod__(self, divisor: "QPolynomial") -> "QPolynomial":
        return self.divmod(divisor)[1]

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, m: int) -> "QPolynomial":
        """``p(q**m)``."""
        if m == 0:
            return QPolynomial.constant(self(1))
        out = [0] * (m * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return QPolynomial(out)

    def reduce_cyclic(self, L: int) -> tuple[int, ...]:
        """Residue modulo ``q**L - 1`` as a length-``L`` vector."""
        out = [0] * L
        for i, c in enumerate(self.coeffs):
            out[i % L] += c
        return tuple(out)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(x: "QPolynomial | int") -> QPolynomial:
    return x if isinstance(x, QPolynomial) else QPolynomial.constant(x)


def format_poly(p: QPolynomial, var: str = "q") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            x = var if i == 1 else f"{var}^{i}"
            body = x if mag == 1 else f"{mag}{x}"
        terms.append(("-" if c < 0 else "+", body))
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def q_minus_one(n: int) -> QPolynomial:
    """``q**n - 1``."""
    return QPolynomial.monomial(n) - 1


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> QPolynomial:
    """The ``n``-th cyclotomic polynomial, by dividing ``q**n - 1`` by the smaller ones."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = q_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p
