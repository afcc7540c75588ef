import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critpairs.errors import DomainError, ParseError, PreconditionError
from critpairs.groups import make_group
from critpairs.sumsets import (
    d_subset,
    distance,
    e_transform,
    kneser_sides,
    layers,
    nu,
    nu_counts,
    parse_family,
    periodicity_flags,
    stabilizer,
    sumset,
    unique_expression_elements,
)

from oracles import Naive

Z5, Z6, Z7 = make_group([5]), make_group([6]), make_group([7])


def S(g, *xs):
    return g.subset(xs)


def test_sumset_examples():
    assert list(sumset(S(Z6, 0, 1), S(Z6, 0, 2))) == [0, 1, 2, 3]
    assert sumset(S(Z5, 0, 1, 2), S(Z5, 0, 1, 2)) == Z5.full
    a = S(Z6, 1, 4, 5)
    assert a + S(Z6, 0) == a
    assert len(a + Z6.empty) == 0


def test_nu_examples():
    assert nu(S(Z5, 0, 1, 2), S(Z5, 0, 1), 2).multiplicity == 2
    assert nu(S(Z5, 0, 1), S(Z5, 0, 1), 4).multiplicity == 0
    a = S(Z7, 0, 1, 3)
    w = nu(a, a, 0)
    assert w.multiplicity == 1 and list(w.witnesses) == [0]
    assert nu(Z7.empty, a, 3).multiplicity == 0


def test_stabilizer_examples():
    assert list(stabilizer(S(Z6, 0, 2, 4)).carrier) == [0, 2, 4]
    assert stabilizer(S(Z6, 0, 1)).is_trivial
    assert stabilizer(Z6.full).order == 6
    with pytest.raises(DomainError):
        stabilizer(Z6.empty)


def test_periodicity_flags_examples():
    f = periodicity_flags(S(Z6, 0, 2, 4))
    assert f.is_periodic and not f.is_aperiodic
    f = periodicity_flags(S(Z6, 0, 1, 2, 3, 4))
    assert f.is_punctured_periodic and f.gamma == 5 and f.punctured_period.order == 6
    assert not f.is_periodic


@pytest.mark.parametrize("n", [4, 6, 8, 9])
def test_punctured_never_periodic(n):
    g = make_group([n])
    for m in range(1, (1 << n) - 1):
        f = periodicity_flags(g.from_mask(m))
        if f.is_punctured_periodic:
            assert not f.is_periodic
            s2 = g.from_mask(m).with_element(f.gamma)
            assert stabilizer(s2) == f.punctured_period
            # least witness
            for y in range(f.gamma):
                if y not in g.from_mask(m):
                    assert stabilizer(g.from_mask(m).with_element(y)).is_trivial


def test_layers_examples():
    lay = layers(S(Z5, 0), S(Z5, 0, 1), 10)
    assert [list(lay.n(i)) for i in range(6)] == [[0], [1], [2], [3], [4], []]
    lay = layers(S(Z5, 0), S(Z5, 0, 1, 2), 3)
    assert list(lay.n(1)) == [1, 2]
    assert list(lay.n_u(1, S(Z5, 1))) == [1]
    assert list(lay.n_u(1, S(Z5, 2))) == [2]
    lay = layers(S(Z7, 0, 3), S(Z7, 0), 5)
    assert len(lay.n(1)) == 0
    with pytest.raises(PreconditionError):
        layers(S(Z5, 1), S(Z5, 0), 2)


@pytest.mark.parametrize("factors", [(7,), (8,), (2, 4), (3, 3)])
def test_layers_invariants(factors):
    g = make_group(factors)
    rng = random.Random(3)
    for _ in range(60):
        a = g.from_mask(rng.getrandbits(g.order) | 1)
        b = g.from_mask(rng.getrandbits(g.order) | 1)
        lay = layers(a, b, 20)
        seen = 0
        for part in lay.layers:
            assert part.mask & seen == 0
            seen |= part.mask
        h = g.subgroup_generated(b)
        assert seen == (a + h.carrier).mask
        for i in range(1, len(lay.layers)):
            union = 0
            for part in lay.classes[i].values():
                assert part.mask & union == 0
                union |= part.mask
            assert union == lay.n(i).mask
        assert lay.check_identity()


def test_e_transform_examples():
    a, b = S(Z7, 0, 1, 3), S(Z7, 0, 1)
    r = e_transform(a, b, 0)
    assert list(r.b_e) == [0, 1] and r.a_e == a
    r = e_transform(a, b, 3)
    assert list(r.b_e) == [3] and list(r.a_e) == [0, 1, 3, 4]
    with pytest.raises(PreconditionError):
        e_transform(a, b, 5)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(7,), (8,), (2, 4), (3, 3), (10,)]), st.data())
def test_e_transform_conservation(factors, data):
    g = make_group(factors)
    a = g.from_mask(data.draw(st.integers(1, g.full_mask)))
    b = g.from_mask(data.draw(st.integers(1, g.full_mask)))
    for e in (a + (-b)):
        r = e_transform(a, b, e)
        assert len(r.a_e) + len(r.b_e) == len(a) + len(b)
        assert (r.a_e + r.b_e).issubset((a + b).translate(e))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(6,), (7,), (2, 4), (2, 2, 2)]), st.data())
def test_nu_against_oracle(factors, data):
    g, nv = make_group(factors), Naive(factors)
    a = g.from_mask(data.draw(st.integers(1, g.full_mask)))
    b = g.from_mask(data.draw(st.integers(1, g.full_mask)))
    sa, sb = nv.to_set(a), nv.to_set(b)
    cnt = nu_counts(a, b)
    assert cnt == nu_counts(b, a)
    assert sum(cnt) == len(a) * len(b)
    for x in g.elements():
        w = nu(a, b, x)
        assert nv.to_set(w.witnesses) == nv.nu(sa, sb, nv.tup(x))
        assert (w.multiplicity >= 1) == (x in a + b)
    assert list(unique_expression_elements(a, b)) == [x for x, c in enumerate(cnt) if c == 1]


def test_stabilizer_against_oracle():
    for factors in [(6,), (8,), (2, 4), (2, 2, 2), (3, 3)]:
        g, nv = make_group(factors), Naive(factors)
        for m in range(1, 1 << g.order):
            s = g.from_mask(m)
            assert nv.to_set(stabilizer(s).carrier) == nv.stabilizer(nv.to_set(s))


def test_duality_half_identity_unconditional():
    for factors in [(6,), (2, 3), (2, 2)]:
        g = make_group(factors)
        for ma in range(1, 1 << g.order):
            for mb in range(1, 1 << g.order):
                a, b = g.from_mask(ma), g.from_mask(mb)
                assert ((-b) + (a + b).complement()).issubset(a.complement())


def test_kneser_small_groups():
    for factors in [(6,), (2, 4), (3, 3)]:
        g = make_group(factors)
        for ma in range(1, 1 << g.order):
            for mb in range(ma, 1 << g.order):
                _, lhs, rhs = kneser_sides(g.from_mask(ma), g.from_mask(mb))
                assert lhs >= rhs


def test_mult_result_props():
    g = make_group([8])
    rng = random.Random(5)
    for _ in range(400):
        a = g.from_mask(rng.getrandbits(8) | 1)
        b = g.from_mask(rng.getrandbits(8) | 2)
        if len(a) + len(b) >= g.order + 1:
            assert a + b == g.full
        cnt = nu_counts(a, b)
        s = a + b
        for r in range(-2, 4):
            if len(s) < len(a) + len(b) - r:
                assert all(cnt[x] > r for x in s)


# -- distances -----------------------------------------------------------------


def test_distance_examples():
    assert distance(S(Z6, 0, 2), "P:{0,2,4}") == 1
    assert distance(S(Z6, 0, 3, 1), "QP:{0,3}") == 0
    assert distance(S(Z7, 0, 1, 3), "AP:1") == 1
    d = d_subset(S(Z7, 0, 1, 3), parse_family(Z7, "AP:1"))
    assert list(d.witness) == [0, 1, 2, 3]
    assert distance(S(Z6, 0, 1), "AP:2") == math.inf
    assert distance(S(Z7, 0, 3), "P") == 5


def test_parse_family_errors():
    for bad in ["X", "QP:{0,1}", "AP:0", "AP:{0}", "P:{0,9}"]:
        with pytest.raises(ParseError):
            parse_family(Z6, bad)


def _is_qp_naive(g, m):
    # brute force over subgroups and coset structure
    for h in g.all_subgroups()[1:]:
        full = part = 0
        for c in h.coset_masks:
            inter = m & c
            if inter == c:
                full += 1
            elif inter:
                part += 1
        if full and part <= 1:
            return True
    return False


def _is_ap_naive(g, m, d):
    for x in g.elements():
        for l in range(1, g.order + 1):
            terms = [g.add(x, g.mul(i, d)) for i in range(l)]
            if len(set(terms)) < l:
                break
            if sum(1 << t for t in terms) == m:
                return True
    return False


@pytest.mark.parametrize("factors", [(6,), (2, 3), (2, 2)])
def test_distances_against_brute_force(factors):
    g = make_group(factors)
    n = g.order
    supersets = {}
    for m in range(1, 1 << n):
        supersets[m] = [s for s in range(1, 1 << n) if s & m == m]
    for m in range(1, 1 << n):
        a = g.from_mask(m)
        for h in g.all_subgroups()[1:]:
            want = min((s ^ m).bit_count() for s in supersets[m] if g.kernel.sumset(s, h.mask) == s)
            assert distance(a, parse_family(g, f"P:{h.carrier!r}")) == want
        want_qp = min((s ^ m).bit_count() for s in supersets[m] if _is_qp_naive(g, s))
        assert distance(a, "QP") == want_qp
        for d in range(1, n):
            cands = [(s ^ m).bit_count() for s in supersets[m] if _is_ap_naive(g, s, d)]
            assert distance(a, f"AP:{d}") == (min(cands) if cands else math.inf)
