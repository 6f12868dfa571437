import pytest
from hypothesis import given, strategies as st

from tabkit.errors import DivisionNotExact
from tabkit.polynomial import QPolynomial, cyclotomic, format_poly, q_minus_one

coeff_lists = st.lists(st.integers(-20, 20), max_size=8)


def test_trailing_zeros_trimmed():
    assert QPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPolynomial((0, 0)).is_zero()
    assert QPolynomial().degree == -1


def test_arithmetic():
    p = QPolynomial((1, 1))
    assert (p * p).coeffs == (1, 2, 1)
    assert (p - p).is_zero()
    assert (p + 3).coeffs == (4, 1)
    assert (p ** 3)(1) == 8


def test_exact_division():
    num = q_minus_one(6)
    assert num.exact_div(q_minus_one(3)).coeffs == (1, 0, 0, 1)
    with pytest.raises(DivisionNotExact):
        num.exact_div(q_minus_one(4))
    with pytest.raises(DivisionNotExact):
        QPolynomial((1, 1)).exact_div(QPolynomial((1, 2)))


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divmod_identity(a, b):
    p, d = QPolynomial(a), QPolynomial(b)
    if abs(d.coeffs[-1]) != 1:
        d = d + QPolynomial.monomial(d.degree + 1)
    quot, rem = p.divmod(d)
    assert quot * d + rem == p
    assert rem.degree < d.degree


@given(coeff_lists, st.integers(1, 9))
def test_cyclic_reduction_preserves_root_values(a, L):
    import cmath

    p = QPolynomial(a)
    residue = QPolynomial(p.reduce_cyclic(L))
    w = cmath.exp(2j * cmath.pi / L)
    for m in range(L):
        assert abs(p(w**m) - residue(w**m)) < 1e-6


@pytest.mark.parametrize("n,coeffs", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic(n, coeffs):
    assert cyclotomic(n).coeffs == coeffs


def test_compose_power():
    p = QPolynomial((1, 2, 3))
    assert p.compose_power(2).coeffs == (1, 0, 2, 0, 3)
    assert p.compose_power(0).coeffs == (6,)


def test_format():
    assert format_poly(QPolynomial((1, 3, 1)), "t") == "1 + 3t + t^2"
    assert format_poly(QPolynomial((0, -1, 2))) == "-q + 2q^2"
    assert format_poly(QPolynomial()) == "0"
