import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critpairs.bounds import (
    bounds_report,
    clique_profile,
    edge_count,
    l_bound,
    sidon_check,
    special_x_estimate,
    theorem31_params,
    verify_graph_bijection,
    violators,
)
from critpairs.errors import PreconditionError
from critpairs.groups import make_group
from critpairs.sumsets import nu_counts

Z7 = make_group([7])
SIDON = Z7.subset([0, 1, 3])


def test_clique_profile_examples():
    p = clique_profile(SIDON, SIDON)
    assert [c for c in nu_counts(SIDON, SIDON) if c] == [1, 2, 1, 2, 2, 1]
    assert p.multiplicities == (1, 1, 1, 2, 2, 2) and p.edge_count == 3 and p.c == 6
    q = clique_profile(SIDON, -SIDON)
    assert q.counts == {1: 6, 3: 1} and q.edge_count == 3
    r = clique_profile(Z7.subset([2]), SIDON)
    assert r.edge_count == 0 and set(r.multiplicities) == {1}


def _edges_naive(g, a, b):
    verts = [(x, y) for x in a for y in b]
    n = 0
    for i, (x, y) in enumerate(verts):
        for x2, y2 in verts[i + 1:]:
            n += g.add(x, y) == g.add(x2, y2)
    return n


@pytest.mark.parametrize("factors", [(6,), (2, 4), (8,)])
def test_edge_count_matches_quadruple_loop(factors):
    g = make_group(factors)
    rng = random.Random(1)
    for _ in range(300):
        a = g.from_mask(rng.randrange(1, 1 << g.order))
        b = g.from_mask(rng.randrange(1, 1 << g.order))
        p = clique_profile(a, b)
        assert p.edge_count == _edges_naive(g, a, b) == edge_count(a, b)
        assert sum(p.multiplicities) == len(a) * len(b)
        assert p.c == len(a + b) == sum(p.counts.values())


def test_bijection_examples():
    assert verify_graph_bijection(SIDON, SIDON)
    z = Z7.subset([0])
    r = verify_graph_bijection(z, z)
    assert r.ok and r.edges_sum == r.edges_difference == 0


@pytest.mark.parametrize("factors", [(5,), (6,), (2, 2)])
def test_bijection_exhaustive_small(factors):
    g = make_group(factors)
    for ma in range(1, 1 << g.order):
        for mb in range(1, 1 << g.order):
            assert verify_graph_bijection(g.from_mask(ma), g.from_mask(mb))


def test_theorem31_sidon_instance():
    p = theorem31_params(SIDON, SIDON, Z7.subset([0]), 1)
    assert (p.delta, p.m, p.x, p.delta0) == (0, 6, 3, 3)
    assert p.bound_iii == 6 == len(SIDON) * (len(SIDON) + 1) // 2
    assert p.bound_i == (Fraction(27, 5), Fraction(27, 5))
    assert p.bound_ii[0] == 1
    assert special_x_estimate(p) == 3
    rep = bounds_report(p)
    assert list(rep) == ["a", "b", "k", "T", "delta", "M", "x", "delta0",
                         "bound_i", "bound_ii", "bound_iii", "actual_sumset", "actual_T"]
    assert rep["bound_iii"] == "6/1"


def test_theorem31_errors_and_canonical_t():
    with pytest.raises(PreconditionError, match="outside T"):
        theorem31_params(SIDON, SIDON, Z7.subset([1]), 1)
    with pytest.raises(PreconditionError):
        theorem31_params(SIDON, SIDON, Z7.subset([0]), 3)
    p = theorem31_params(SIDON, SIDON, Z7.subset([0, 2]), 1)
    assert list(p.t) == [0] and list(p.t_given) == [0, 2]


def test_special_x_absent():
    g = make_group([11])
    a = g.subset([0, 1, 2, 3, 4])
    p = theorem31_params(a, a, violators(a, a, 2), 2)
    s = len(p.t) * p.b * (p.b - p.k) - p.delta * (p.k - p.delta)
    assert (special_x_estimate(p) is None) == (not 0 <= s < p.a * p.b)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([(7,), (10,), (12,), (2, 6), (3, 5), (16,), (2, 2, 5)]), st.data())
def test_theorem31_random(factors, data):
    g = make_group(factors)
    a = g.from_mask(data.draw(st.integers(1, g.full_mask)))
    b = g.from_mask(data.draw(st.integers(1, g.full_mask)))
    if len(a) < len(b):
        a, b = b, a
    if len(b) < 2:
        return
    k = data.draw(st.integers(1, len(b) - 1))
    t = violators(a, b, k)
    if len(t) > len(a):
        return
    p = theorem31_params(a, b, t, k)
    assert p.m >= 0 and p.m % 2 == 0
    assert p.holds()
    x = special_x_estimate(p)
    assert x is None or x == p.x


def test_l_bound_monotone():
    for ab in range(2, 40):
        for m in range(0, 3 * ab, 2):
            top = (m + ab) // ab
            vals = [l_bound(ab, m, l) for l in range(1, top + 1)]
            assert all(x <= y for x, y in zip(vals, vals[1:]))


def test_sidon_examples():
    r = sidon_check(SIDON)
    assert r.is_sidon and r.doubling == 6 and r.attains_bound
    assert not sidon_check(Z7.subset([0, 1, 2])).is_sidon
    assert sidon_check(Z7.subset([4])).is_sidon
