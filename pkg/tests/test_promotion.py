import pytest

from tabkit.errors import NotHook, NotStandard, TabkitError
from tabkit.promotion import (
    content_rotation_check,
    fixed_count,
    gamma,
    k_promote,
    k_promote_hook,
    orbit_decomposition,
    orbits,
    order_witness,
    promote_power,
    promotion_order,
    psi,
    psi_fiber,
    theta,
)
from tabkit.tableaux import Content, Partition, content, enumerate_inc, validate

H = Partition.hook


def hook_families(max_n):
    for N in range(3, max_n + 1):
        for r in range(1, N - 1):
            for k in range(0, min(r, N - r - 1) + 1):
                yield N, r, k


HOOKS_8 = list(hook_families(8))


class TestHookPromotion:
    def test_worked_example(self):
        t = validate([[1, 2, 4, 5], [2], [3], [5]])
        expected = ((1, 3, 4, 5), (2,), (4,), (5,))
        assert k_promote_hook(t).rows == expected
        assert k_promote(t).rows == expected

    @pytest.mark.parametrize("N", range(2, 9))
    def test_general_rule_agrees_on_hooks(self, N):
        for r in range(N):
            for k in range(N):
                for t in enumerate_inc(H(N, r), k):
                    assert k_promote(t) == k_promote_hook(t)

    def test_rejects_non_hook(self):
        with pytest.raises(NotHook):
            k_promote_hook(validate([[1, 2], [3, 4]]))

    def test_single_cell(self):
        t = validate([[1]])
        assert k_promote_hook(t) == t == k_promote(t)

    @pytest.mark.parametrize("N,r,k", [(6, 2, 1), (7, 3, 2), (8, 3, 2), (8, 4, 3)])
    def test_extremal_content_has_full_period(self, N, r, k):
        target = (1,) + (2,) * k + (1,) * (N - 2 * k - 1)
        found = 0
        for o in orbit_decomposition(H(N, r), k):
            for t in o.members:
                if content(t).alpha == target:
                    found += 1
                    assert o.period == N - k - 1
        assert found > 0


class TestPsiGamma:
    def test_psi_example(self):
        s = validate([[1, 4, 8], [2], [3], [5], [6], [7], [9]])
        for rows in ([[1, 2, 4, 6, 8]], [[1, 3, 4, 7, 8]], [[1, 4, 5, 8, 9]]):
            t = validate(rows + [[2], [3], [5], [6], [7], [9]])
            assert t.k == 2
            assert psi(t) == s

    def test_psi_fiber_size(self):
        s = validate([[1, 4, 8], [2], [3], [5], [6], [7], [9]])
        fiber = psi_fiber(s, 2)
        assert len(fiber) == 15
        assert all(psi(t) == s and t.shape == Partition((5, 1, 1, 1, 1, 1, 1)) for t in fiber)

    def test_psi_identity_on_standard(self):
        for s in enumerate_inc(H(6, 2), 0):
            assert psi(s) == s

    @pytest.mark.parametrize("N,r,k", [(6, 2, 1), (7, 3, 2), (8, 3, 1)])
    def test_psi_onto_with_binomial_fibers(self, N, r, k):
        from math import comb

        images: dict = {}
        for t in enumerate_inc(H(N, r), k):
            images.setdefault(psi(t), []).append(t)
        targets = enumerate_inc(H(N - k, r), 0)
        assert set(images) == set(targets)
        for s in targets:
            assert sorted(images[s]) == psi_fiber(s, k)
            assert len(images[s]) == comb(r, k)

    def test_gamma_example(self):
        s = validate([[1, 4, 8], [2], [3], [5], [6], [7], [9]])
        assert gamma(s) == {2, 3, 5, 6, 7, 9}

    def test_gamma_errors(self):
        with pytest.raises(NotHook):
            gamma(validate([[1, 2], [3, 4]]))
        with pytest.raises(NotStandard):
            gamma(validate([[1, 2], [2]]))

    @pytest.mark.parametrize("N", range(3, 9))
    def test_gamma_equivariance(self, N):
        for r in range(1, N - 1):
            for s in enumerate_inc(H(N, r), 0):
                assert gamma(k_promote(s)) == theta(gamma(s), N)

    def test_gamma_equivariance_4_1_1(self):
        tabs = enumerate_inc(Partition((4, 1, 1)), 0)
        assert len(tabs) == 10
        for s in tabs:
            assert gamma(k_promote(s)) == theta(gamma(s), 6)

    @pytest.mark.parametrize("N,r,k", HOOKS_8)
    def test_psi_commutes_with_promotion(self, N, r, k):
        for t in enumerate_inc(H(N, r), k):
            assert psi(k_promote(t)) == k_promote(psi(t))


class TestContentRotation:
    def test_example(self):
        t = validate([[1, 2, 4, 5], [2], [3], [5]])
        assert content(t) == Content((1, 2, 1, 1, 2))
        assert content(k_promote(t)) == Content((1, 1, 1, 2, 2))
        assert content_rotation_check(t)

    def test_standard_fixed(self):
        for s in enumerate_inc(H(5, 2), 0):
            assert content(k_promote(s)) == content(s)

    @pytest.mark.parametrize("N,r,k", HOOKS_8)
    def test_every_hook_step(self, N, r, k):
        assert all(content_rotation_check(t) for t in enumerate_inc(H(N, r), k))


class TestOrbits:
    def test_inc1_3x3(self):
        shape = Partition.rectangle(3, 3)
        assert promotion_order(shape, 1) == 8
        assert fixed_count(shape, 1, 2) == 4
        assert order_witness(shape, 1).period == 8

    def test_hook_orders(self):
        assert promotion_order(H(6, 2), 1) == 4
        assert promotion_order(H(6, 2), 0) == 5

    @pytest.mark.parametrize("N,r,k", HOOKS_8)
    def test_order_is_n_minus_k_minus_1(self, N, r, k):
        size = len(enumerate_inc(H(N, r), k))
        expected = N - k - 1 if size > 1 else 1
        assert promotion_order(H(N, r), k) == expected

    def test_singleton_families_are_fixed(self):
        # k = r = N - r - 1 leaves exactly one tableau
        for N, r, k in [(3, 1, 1), (5, 2, 2), (7, 3, 3)]:
            (t,) = enumerate_inc(H(N, r), k)
            assert k_promote(t) == t

    @pytest.mark.parametrize("shape,k", [(H(6, 2), 1), (H(7, 3), 2), (Partition.rectangle(3, 3), 1),
                                         (Partition.rectangle(2, 4), 2), (Partition.rectangle(3, 3), 2)])
    def test_orbits_partition_and_fixed_counts(self, shape, k):
        elements = enumerate_inc(shape, k)
        orbs = orbit_decomposition(shape, k)
        members = [t for o in orbs for t in o.members]
        assert sorted(members) == elements
        for o in orbs:
            assert o.representative == min(o.members)
            for a, b in zip(o.members, o.members[1:] + o.members[:1]):
                assert k_promote(a) == b
        order = promotion_order(shape, k)
        for m in range(order + 1):
            direct = sum(1 for t in elements if promote_power(t, m) == t)
            assert fixed_count(shape, k, m) == direct

    @pytest.mark.parametrize("n,k", [(3, 0), (3, 1), (4, 1), (4, 2), (5, 2)])
    def test_two_row_order_is_max_entry(self, n, k):
        # two-row K-promotion order equals 2n - k
        assert promotion_order(Partition.rectangle(2, n), k) == 2 * n - k

    def test_non_permutation_detected(self):
        elements = enumerate_inc(H(5, 2), 0)
        with pytest.raises(TabkitError):
            orbits(elements, lambda t: elements[0])
