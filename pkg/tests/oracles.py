"""Slow, obviously-correct reference implementations used only by the tests."""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

from tabkit.polynomial import QPolynomial, q_minus_one


def brute_increasing(parts, k):
    """All increasing fillings of ``parts`` with maximum ``N - k``, by exhaustive product."""
    N = sum(parts)
    top = N - k
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    out = []
    if top < 1:
        return out
    for values in product(range(1, top + 1), repeat=N):
        if set(values) != set(range(1, top + 1)):
            continue
        g = dict(zip(cells, values))
        ok = all(g[(i, j)] > g[(i, j - 1)] for i, j in cells if j > 0) and all(
            g[(i, j)] > g[(i - 1, j)] for i, j in cells if i > 0
        )
        if ok:
            out.append(tuple(tuple(g[(i, j)] for j in range(p)) for i, p in enumerate(parts)))
    return sorted(out, key=lambda rows: tuple(v for r in rows for v in r))


def brute_syt_count(parts):
    """Count standard fillings by trying every permutation."""
    N = sum(parts)
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    count = 0
    for perm in permutations(range(1, N + 1)):
        g = dict(zip(cells, perm))
        if all(g[(i, j)] > g[(i, j - 1)] for i, j in cells if j > 0) and all(
            g[(i, j)] > g[(i - 1, j)] for i, j in cells if i > 0
        ):
            count += 1
    return count


def rectangle_syt_formula(m, n):
    """``(mn)! * prod_{i<m} i! / (n+i)!`` in exact rationals."""
    value = Fraction(factorial(m * n))
    for i in range(m):
        value *= Fraction(factorial(i), factorial(n + i))
    assert value.denominator == 1
    return int(value)


def brute_chain_paths(m, n):
    """Every distinct arrangement of the multiset of steps, filtered by the region."""
    words = set(permutations([j for j in range(1, m + 1) for _ in range(n)]))
    good = []
    for w in words:
        pos = [0] * m
        ok = True
        for s in w:
            pos[s - 1] += 1
            if s > 1 and pos[s - 1] > pos[s - 2]:
                ok = False
                break
        if ok:
            good.append(w)
    return sorted(good)


def brute_schroder(m, n, small):
    """Breadth-first over step vectors, independent of the library's DFS."""
    start = (0,) * m
    done = []
    frontier = [(start, ())]
    while frontier:
        nxt = []
        for pos, word in frontier:
            if pos == (n,) * m:
                done.append(word)
                continue
            for vec in product((0, 1), repeat=m):
                if not any(vec):
                    continue
                new = tuple(p + v for p, v in zip(pos, vec))
                if new[0] > n or any(new[j + 1] > new[j] for j in range(m - 1)):
                    continue
                if small and any(pos[j] == pos[j + 1] and vec[j] and vec[j + 1] for j in range(m - 1)):
                    continue
                nxt.append((new, word + (vec,)))
        frontier = nxt
    return done


def q_binomial_by_division(a, b):
    """``prod (q^(a-b+i) - 1) / prod (q^i - 1)`` with exact polynomial division."""
    num = QPolynomial.constant(1)
    den = QPolynomial.constant(1)
    for i in range(1, b + 1):
        num = num * q_minus_one(a - b + i)
        den = den * q_minus_one(i)
    return num.exact_div(den)


def k_subsets(values, k):
    return [set(c) for c in combinations(sorted(values), k)]
