"""Kemperman structure search for critical pairs |A+B| = |A|+|B|-1.

The search walks subgroups from the largest down and returns the first
pair of quasi-periodic decompositions meeting conditions (i)-(iv); the
quotient pair is then classified the same way until the quotient is
trivial.  Checking a certificate is left to :mod:`critpairs.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from critpairs.errors import InternalContradictionError, PreconditionError
from critpairs.groups import FiniteAbelianGroup, GroupSubset, Subgroup
from critpairs.structure import progression_with_difference
from critpairs.sumsets import nu, nu_counts, stabilizer

KST_TYPES = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class KstCertificate:
    group: FiniteAbelianGroup
    quasi_period: Subgroup
    a1: GroupSubset
    a0: GroupSubset
    b1: GroupSubset
    b0: GroupSubset
    type_tag: str
    witnesses: dict[str, Any] = field(default_factory=dict, compare=True)
    recursion: "KstCertificate | None" = None
    chain: tuple[Subgroup, ...] = ()

    @property
    def type_chain(self) -> tuple[str, ...]:
        out = [self.type_tag]
        if self.recursion is not None:
            out.extend(self.recursion.type_chain)
        return tuple(out)


@dataclass(frozen=True)
class PeriodicReduction:
    """Critical pair whose sumset is periodic and has no unique expression element.

    Holes may sit anywhere in A+H and B+H, so the structure lives in the
    quotient pair, which is classified when the quotient is nontrivial.
    """

    group: FiniteAbelianGroup
    quasi_period: Subgroup
    hole_count: int
    quotient_a: GroupSubset
    quotient_b: GroupSubset
    quotient_certificate: KstCertificate | None
    note: str = "deleted elements may be placed anywhere in A+H and B+H"


def subgroups_descending(g: FiniteAbelianGroup) -> list[Subgroup]:
    """Nontrivial subgroups, largest first, ties by least carrier mask."""
    return sorted(g.all_subgroups()[1:], key=lambda h: (-h.order, h.mask))


def splits(s: GroupSubset, h: Subgroup) -> list[tuple[GroupSubset, GroupSubset]]:
    """All (S1, S0) with S1 H-periodic, S0 nonempty inside one H-coset."""
    full, partial = [], []
    for cm in h.coset_masks:
        inter = s.mask & cm
        if inter == cm:
            full.append(cm)
        elif inter:
            partial.append(inter)
    g = s.group
    if len(partial) > 1:
        return []
    if partial:
        return [(GroupSubset(g, s.mask & ~partial[0]), GroupSubset(g, partial[0]))]
    return [(GroupSubset(g, s.mask & ~cm), GroupSubset(g, cm)) for cm in full]


def kst_type(h: Subgroup, a0: GroupSubset, b0: GroupSubset) -> tuple[str, dict[str, Any]] | None:
    """Type I-IV of an aperiodic-part pair, with witnesses, or None."""
    g = a0.group
    n, m = len(a0), len(b0)
    s = a0 + b0
    if len(s) != n + m - 1:
        return None
    if n == 1 or m == 1:
        return "I", {}
    cnt = nu_counts(a0, b0)
    uniq = [x for x in s if cnt[x] == 1]
    for d in range(1, g.order):
        if g.element_order(d) < n + m - 1:
            continue
        if progression_with_difference(a0, d) and progression_with_difference(b0, d):
            return "II", {"d": d}
    if n + m == h.order + 1 and len(uniq) == 1:
        g0 = uniq[0]
        b = nu(a0, b0, g0).witnesses.min()
        g1 = g.sub(g0, b)
        coset = h.coset_of(g1)
        want = (-(coset.difference(a0))).translate(g0).with_element(b)
        if want == b0:
            return "III", {"g0": g0, "g1": g1}
        return None
    if not uniq and stabilizer(a0).is_trivial:
        holes = (s + h.carrier).difference(s)
        if len(holes) != 1:
            return None
        g0 = holes.min()
        g1 = a0.min()
        want = (-(h.coset_of(g1).difference(a0))).translate(g0)
        if want == b0:
            return "IV", {"g0": g0, "g1": g1}
    return None


def _unique_parts(a: GroupSubset, b: GroupSubset) -> list[tuple[int, int]]:
    """(a, b) for every unique expression element a+b of A+B."""
    g = a.group
    cnt = nu_counts(a, b)
    out = []
    for x, c in enumerate(cnt):
        if c == 1:
            y = nu(a, b, x).witnesses.min()
            out.append((g.sub(x, y), y))
    return out


def _check_precondition(a: GroupSubset, b: GroupSubset) -> None:
    a.require_same_group(b)
    if not a.mask or not b.mask:
        raise PreconditionError("A and B must be nonempty")
    if a.group.order == 1:
        raise PreconditionError("the trivial group has no nontrivial quasi-period")
    s = a + b
    if len(s) != len(a) + len(b) - 1:
        raise PreconditionError(f"|A+B| = {len(s)} but |A|+|B|-1 = {len(a) + len(b) - 1}")
    if not stabilizer(s).is_trivial and 1 not in nu_counts(a, b):
        raise PreconditionError("A+B is periodic with no unique expression element; use kst_periodic_reduce")


def kst_classify(a: GroupSubset, b: GroupSubset, order: list[Subgroup] | None = None) -> KstCertificate:
    """Kemperman decompositions of a critical pair with maximal quasi-period.

    ``order`` overrides the subgroup search order (used to test that the
    type does not depend on it).
    """
    _check_precondition(a, b)
    return _classify(a, b, order)


def _classify(a: GroupSubset, b: GroupSubset, order: list[Subgroup] | None = None) -> KstCertificate:
    g = a.group
    uniq = _unique_parts(a, b)
    for h in order if order is not None else subgroups_descending(g):
        sa = splits(a, h)
        if not sa:
            continue
        sb = splits(b, h)
        if not sb:
            continue
        q = g.quotient_map(h)
        pa, pb = q.push(a), q.push(b)
        if len(pa + pb) != len(pa) + len(pb) - 1:
            continue
        qcnt = nu_counts(pa, pb)
        for a1, a0 in sa:
            for b1, b0 in sb:
                c = q.target.add(q(a0.min()), q(b0.min()))
                if qcnt[c] != 1:
                    continue
                if any(x not in a0 or y not in b0 for x, y in uniq):
                    continue
                t = kst_type(h, a0, b0)
                if t is None:
                    continue
                rec = None
                chain = (g.trivial_subgroup, g.whole)
                if h.order != g.order:
                    rec = _classify(pa, pb)
                    chain = (g.trivial_subgroup,) + tuple(q.preimage_subgroup(k) for k in rec.chain)
                return KstCertificate(g, h, a1, a0, b1, b0, t[0], t[1], rec, chain)
    raise InternalContradictionError(f"no Kemperman decomposition found for A={a!r}, B={b!r} in {g.name}")


def kst_periodic_reduce(a: GroupSubset, b: GroupSubset) -> PeriodicReduction:
    """Reduce a critical pair with periodic, unique-expression-free sumset to its quotient."""
    a.require_same_group(b)
    if not a.mask or not b.mask:
        raise PreconditionError("A and B must be nonempty")
    s = a + b
    if len(s) > len(a) + len(b) - 1:
        raise PreconditionError("|A+B| exceeds |A|+|B|-1")
    h = stabilizer(s)
    if h.is_trivial:
        raise PreconditionError("A+B is aperiodic")
    if 1 in nu_counts(a, b):
        raise PreconditionError("A+B has a unique expression element; use kst_classify")
    g = a.group
    q = g.quotient_map(h)
    pa, pb, ps = q.push(a), q.push(b), q.push(s)
    if len(ps) != len(pa) + len(pb) - 1:
        raise InternalContradictionError("quotient pair is not critical")
    if ps.mask and not stabilizer(ps).is_trivial:
        raise InternalContradictionError("quotient sumset is periodic")
    holes = len(s) + h.order - len(a) - len(b)
    if holes != (len(a + h.carrier) - len(a)) + (len(b + h.carrier) - len(b)):
        raise InternalContradictionError("hole count disagrees with the Kneser count")
    cert = None
    if q.target.order > 1:
        cert = _classify(pa, pb)
    return PeriodicReduction(g, h, holes, pa, pb, cert)


def critical_classify(a: GroupSubset, b: GroupSubset) -> KstCertificate | PeriodicReduction:
    """KST certificate when it applies, else the periodic reduction."""
    s = a + b
    if len(s) == len(a) + len(b) - 1 and (stabilizer(s).is_trivial or 1 in nu_counts(a, b)):
        return kst_classify(a, b)
    return kst_periodic_reduce(a, b)
