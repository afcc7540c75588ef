import dataclasses

import pytest

from critpairs.beyond import (
    Extendible16,
    PeriodicBranch,
    StructuredCertificate,
    beyond_classify,
    extensions16,
    outcome_label,
    structured_matches,
)
from critpairs.errors import PreconditionError
from critpairs.groups import make_group
from critpairs.sumsets import distance
from critpairs.verify import verify_beyond_certificate

Z7, Z9 = make_group([7]), make_group([9])
G20 = make_group([2, 2, 5])


def S(g, *xs):
    return g.subset(xs)


def viii_witness():
    g = G20
    e = lambda x, y, z: g.index((x, y, z))
    klein = [(0, 0), (1, 0), (0, 1), (1, 1)]
    a = g.subset([e(0, 0, 0), e(1, 0, 0)] + [e(x, y, 1) for x, y in klein] + [e(0, 0, 2), e(0, 1, 2)])
    b = g.subset([e(0, 0, 0), e(1, 0, 0), e(0, 0, 1), e(0, 1, 1)])
    return a, b


def test_extendible_example():
    a, b = S(Z7, 0, 1), S(Z7, 0, 2)
    c = beyond_classify(a, b)
    assert isinstance(c, Extendible16)
    a2, b2 = a.with_element(c.alpha), b.with_element(c.beta)
    assert len(a2 + b2) == len(a2) + len(b2) - 1
    assert (0, 1) in extensions16(a, b)
    assert verify_beyond_certificate(a, b, c)


def test_type_vi_example():
    a = S(Z7, 0, 1, 3)
    assert len(a + a) == 6
    m = structured_matches(a, a)
    assert "VI" in m and m["VI"].witnesses["b0"] == 0
    c = beyond_classify(a, a)
    assert outcome_label(c) == "Extendible16+VI"
    assert verify_beyond_certificate(a, a, m["VI"])


def test_type_vii_example():
    a, b = S(Z9, 0, 1, 3), S(Z9, 1, 2, 4)
    assert list(a + b) == [1, 2, 3, 4, 5, 7]
    m = structured_matches(a, b)
    assert "VII" in m
    assert verify_beyond_certificate(a, b, m["VII"])
    # the same pair is a translate pair, so it is type VI as well
    assert "VI" in m


def test_type_viii_example():
    a, b = viii_witness()
    assert len(a + b) == 12 == len(a) + len(b)
    c = beyond_classify(a, b)
    assert isinstance(c, StructuredCertificate) and c.type_tag == "VIII"
    w = c.witnesses
    g = G20
    assert w["h_b"] == sorted(g.index((x, y, 0)) for x in (0, 1) for y in (0, 1))
    assert w["h_d1"] == g.index((1, 0, 0)) and w["h_d2"] == g.index((0, 1, 0))
    assert verify_beyond_certificate(a, b, c)


def test_type_viii_distance_consequences():
    a, b = viii_witness()
    g = a.group
    c = beyond_classify(a, b)
    for t in (c.witnesses["h_d1"], c.witnesses["h_d2"]):
        h = g.subset([0, t])
        for x in (a, b, a + b, a.complement(), b.complement(), (a + b).complement()):
            assert distance(x, f"QP:{h!r}") == 1
            assert distance(x, f"P:{h!r}") == 2


def test_precondition():
    with pytest.raises(PreconditionError):
        beyond_classify(S(Z7, 0, 1), S(Z7, 0, 1))


def test_periodic_branch():
    g = make_group([16])
    a, b = S(g, 0, 1, 8, 9), S(g, 0, 3, 8, 11)
    c = beyond_classify(a, b)
    assert isinstance(c, PeriodicBranch)
    assert list(c.quasi_period.carrier) == [0, 8]
    assert outcome_label(c) == "Periodic>Extendible16+V"
    assert not extensions16(a, b, first_only=True)
    assert verify_beyond_certificate(a, b, c)


def _boundary_pairs(g):
    n = g.order
    for ma in range(1, 1 << n, 2):
        for mb in range(1, 1 << n, 2):
            a, b = g.from_mask(ma), g.from_mask(mb)
            if len(a + b) == len(a) + len(b):
                yield a, b


@pytest.mark.parametrize("factors", [(5,), (6,), (7,), (8,), (2, 2), (2, 4), (3, 3), (2, 2, 2)])
def test_every_boundary_pair_verifies(factors):
    g = make_group(factors)
    for a, b in _boundary_pairs(g):
        c = beyond_classify(a, b)
        v = verify_beyond_certificate(a, b, c)
        assert v.ok, (a, b, v.failures)


def test_mutated_structured_rejected():
    a, b = viii_witness()
    c = beyond_classify(a, b)
    assert not verify_beyond_certificate(a, b, dataclasses.replace(c, type_tag="V"))
    w = dict(c.witnesses, h_d2=c.witnesses["h_d1"])
    assert not verify_beyond_certificate(a, b, dataclasses.replace(c, witnesses=w))
    e = beyond_classify(S(Z7, 0, 1), S(Z7, 0, 2))
    assert not verify_beyond_certificate(S(Z7, 0, 1), S(Z7, 0, 2), dataclasses.replace(e, alpha=5, beta=5))
