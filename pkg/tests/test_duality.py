import pytest

from critpairs.duality import (
    dual_identity,
    dual_pairs,
    extension_witnesses,
    is_extendible,
    is_freiman_isomorphism,
    is_non_extendible_pair,
)
from critpairs.errors import DomainError, PreconditionError
from critpairs.groups import make_group

Z6, Z7, Z3 = make_group([6]), make_group([7]), make_group([3])


def S(g, *xs):
    return g.subset(xs)


def test_is_extendible_examples():
    a, b = S(Z7, 0, 1), S(Z7, 0, 2)
    assert is_extendible(a, b) is None
    assert is_extendible(b, a) == 1
    assert extension_witnesses(S(Z7, 0, 1, 3, 4), S(Z7, 0, 1, 2, 3)) == (2, 4)
    a, b = S(Z7, 0, 1, 3), S(Z7, 1, 2, 3, 5)
    assert is_non_extendible_pair(a, b)


def test_dual_identity_one_sided():
    a, b = S(Z7, 0, 1), S(Z7, 0, 2)
    assert (-b) + (a + b).complement() == S(Z7, 2, 3, 4, 5, 6) == a.complement()
    assert dual_identity(a, b)
    assert not dual_identity(b, a)


def test_dual_identity_iff_non_extendible():
    for g in (Z6, make_group([2, 2]), make_group([5])):
        for ma in range(1, 1 << g.order):
            for mb in range(1, 1 << g.order):
                a, b = g.from_mask(ma), g.from_mask(mb)
                assert dual_identity(a, b) == (is_extendible(a, b) is None)


def test_dual_pairs_errors():
    with pytest.raises(PreconditionError):
        dual_pairs(S(Z7, 0, 1), S(Z7, 0, 2))
    with pytest.raises(PreconditionError):
        dual_pairs(Z7.full, S(Z7, 0))


def test_dual_pairs_type_iv():
    a, b = S(Z7, 0, 1, 3), S(Z7, 1, 2, 3, 5)
    d = dual_pairs(a, b)
    c = (a + b).complement()
    assert d.first == (-a, c) and d.second == (-b, c)
    assert d.excess == -1


def test_dual_pairs_exhaustive_z8():
    g = make_group([8])
    seen = {}
    for ma in range(1, 256, 2):
        for mb in range(1, 256):
            a, b = g.from_mask(ma), g.from_mask(mb)
            if a + b == g.full or not is_non_extendible_pair(a, b):
                continue
            d = dual_pairs(a, b)
            seen[d.excess] = seen.get(d.excess, 0) + 1
            for x, y in (d.first, d.second):
                assert len(x + y) - len(x) - len(y) == d.excess
                # duality twice returns the original sets up to sign
                back = dual_pairs(x, y)
                assert back.first[1] == (x + y).complement()
    assert seen.get(0, 0) > 0


def test_freiman_examples():
    a = S(Z7, 0, 1, 3)
    assert is_freiman_isomorphism(a, a, {x: x for x in a}, Z7)
    aff = {x: (3 * x + 2) % 7 for x in range(7)}
    assert is_freiman_isomorphism(a, S(Z7, 1, 2), aff, Z7)
    a6 = S(Z6, 0, 1, 3)
    assert not is_freiman_isomorphism(a6, a6, {x: x % 3 for x in a6}, Z3)
    a6 = S(Z6, 0, 2)
    assert is_freiman_isomorphism(a6, a6, {0: 0, 2: 2}, Z3)
    with pytest.raises(DomainError):
        is_freiman_isomorphism(a6, a6, {0: 0}, Z3)


def test_freiman_detects_sum_collapse():
    # injective on A u B but sends 1+3 and 0+0 to the same image
    a, b = S(Z7, 0, 1), S(Z7, 0, 3)
    assert not is_freiman_isomorphism(a, b, {0: 0, 1: 1, 3: 6}, Z7)
    assert is_freiman_isomorphism(S(Z7, 0, 1), S(Z7, 0, 2), {0: 0, 1: 3, 2: 1}, Z7)
