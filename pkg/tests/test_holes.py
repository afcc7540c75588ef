import pytest

from critpairs.beyond import extensions16
from critpairs.errors import PreconditionError
from critpairs.groups import make_group
from critpairs.holes import deletable_by_brute_force, hole_placement
from critpairs.kst import kst_classify

Z7 = make_group([7])


def S(g, *xs):
    return g.subset(xs)


def test_type_ii_interior_deletion():
    a2, b = S(Z7, 0, 1, 2), S(Z7, 0, 1)
    assert kst_classify(a2, b).type_tag == "II"
    hp = hole_placement(a2.without_element(1), b)
    assert hp.case_tag == "ExtendiblePair"
    assert hp.alpha == 1 and hp.details["side"] == "A"
    assert list(hp.details["admissible"]) == [1]


def test_requires_16():
    with pytest.raises(PreconditionError):
        hole_placement(S(Z7, 0, 1), S(Z7, 0, 1))
    g = make_group([9])
    for ma in range(1, 512, 2):
        for mb in range(1, 512, 2):
            a, b = g.from_mask(ma), g.from_mask(mb)
            if len(a + b) == len(a) + len(b) and not extensions16(a, b, first_only=True):
                with pytest.raises(PreconditionError):
                    hole_placement(a, b)
                return
    pytest.fail("no pair without (16) found in z9")


@pytest.mark.parametrize("factors", [(6,), (7,), (8,), (9,), (2, 4), (3, 3), (2, 2, 2)])
def test_exhaustive_cases(factors):
    g = make_group(factors)
    counts = {}
    for ma in range(1, 1 << g.order, 2):
        for mb in range(1, 1 << g.order, 2):
            a, b = g.from_mask(ma), g.from_mask(mb)
            if len(a + b) != len(a) + len(b) or not extensions16(a, b, first_only=True):
                continue
            hp = hole_placement(a, b)
            counts[hp.case_tag] = counts.get(hp.case_tag, 0) + 1
            if hp.case_tag == "ExtendiblePair":
                side = hp.details["side"]
                x, y = (a, b) if side == "A" else (b, a)
                w = hp.alpha if side == "A" else hp.beta
                assert hp.details["admissible"] == deletable_by_brute_force(x.with_element(w), y)
            else:
                a2, b2 = a.with_element(hp.alpha), b.with_element(hp.beta)
                assert len(a2 + b2) == len(a2) + len(b2) - 1
    assert counts.get("ExtendiblePair", 0) > 0
    if factors in ((8,), (9,)):
        assert set(counts) == {"ExtendiblePair", "A", "B", "C"}
