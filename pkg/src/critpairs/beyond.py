"""Classification of pairs with |A+B| = |A|+|B|.

Outcomes: a one-element extension of each side that makes the pair
critical (``Extendible16``), a structured decomposition of type V-VIII,
or, for periodic sumsets, a reduction to the quotient pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from critpairs.errors import InternalContradictionError, PreconditionError
from critpairs.groups import FiniteAbelianGroup, GroupSubset, Subgroup
from critpairs.kst import splits, subgroups_descending
from critpairs.structure import progression_with_difference
from critpairs.sumsets import nu_counts, stabilizer

BEYOND_TYPES = ("V", "VI", "VII", "VIII")


@dataclass(frozen=True)
class StructuredCertificate:
    group: FiniteAbelianGroup
    quasi_period: Subgroup
    a1: GroupSubset
    a0: GroupSubset
    b1: GroupSubset
    b0: GroupSubset
    type_tag: str
    witnesses: dict[str, Any] = field(default_factory=dict)

    kind = "Structured"


@dataclass(frozen=True)
class Extendible16:
    group: FiniteAbelianGroup
    alpha: int
    beta: int
    aux: StructuredCertificate | None = None

    kind = "Extendible16"


@dataclass(frozen=True)
class PeriodicBranch:
    group: FiniteAbelianGroup
    quasi_period: Subgroup
    quotient_a: GroupSubset
    quotient_b: GroupSubset
    recursion: "BeyondCertificate"

    kind = "PeriodicBranch"


BeyondCertificate = Union[Extendible16, StructuredCertificate, PeriodicBranch]


def outcome_label(cert: BeyondCertificate) -> str:
    """Short tag: "Extendible16", "Extendible16+VI", "VIII", "Periodic>V", ..."""
    if isinstance(cert, Extendible16):
        return "Extendible16" + (f"+{cert.aux.type_tag}" if cert.aux is not None else "")
    if isinstance(cert, StructuredCertificate):
        return cert.type_tag
    return "Periodic>" + outcome_label(cert.recursion)


# -- Eq. (16) search -----------------------------------------------------------


def extensions16(a: GroupSubset, b: GroupSubset, first_only: bool = False) -> list[tuple[int, int]]:
    """All (alpha, beta) with |A u {alpha} + B u {beta}| = |A u {alpha}| + |B u {beta}| - 1."""
    g = a.group
    k = g.kernel
    out = []
    for alpha in range(g.order):
        am = a.mask | 1 << alpha
        na = am.bit_count()
        for beta in range(g.order):
            bm = b.mask | 1 << beta
            if k.sumset(am, bm).bit_count() == na + bm.bit_count() - 1:
                out.append((alpha, beta))
                if first_only:
                    return out
    return out


# -- types V-VIII ------------------------------------------------------------------


def klein_subgroups(h: Subgroup) -> list[Subgroup]:
    g = h.group
    return [
        k for k in g.all_subgroups()
        if k.order == 4 and k <= h and all(g.element_order(x) <= 2 for x in k.carrier)
    ]


def _type_vii(h: Subgroup, a0: GroupSubset, b0: GroupSubset):
    """B0 = x + (2a - ((2A0 + H) minus 2A0)) for some a in A0; returns (a, x) or None."""
    g = a0.group
    two = a0 + a0
    comp = h.coset_of(two.min()).difference(two)
    for a in a0:
        t = (-comp).translate(g.add(a, a))
        if len(t) != len(b0):
            continue
        for y in t:
            x = g.sub(b0.min(), y)
            if t.translate(x) == b0:
                return a, x
    return None


def _fibre(q, s: GroupSubset, y: int) -> GroupSubset:
    return GroupSubset(s.group, s.mask & q._fibre_masks[y])


def _type_viii(h: Subgroup, a0: GroupSubset, b0: GroupSubset):
    g = a0.group
    for kb in klein_subgroups(h):
        q = g.quotient_map(kb)
        pa, pb = q.push(a0), q.push(b0)
        la, lb = len(pa), len(pb)
        if la < 2 or lb < 2:
            continue
        for d in range(1, q.target.order):
            if q.target.element_order(d) < la + lb - 1:
                continue
            va = progression_with_difference(pa, d)
            vb = progression_with_difference(pb, d)
            if va is None or vb is None:
                continue
            ta, tb = va.terms(), vb.terms()
            if any(len(_fibre(q, a0, y)) != 4 for y in ta[1:-1]):
                continue
            if any(len(_fibre(q, b0, y)) != 4 for y in tb[1:-1]):
                continue
            ends = []
            for fa, fb in ((ta[0], tb[0]), (ta[-1], tb[-1])):
                xa, xb = _fibre(q, a0, fa), _fibre(q, b0, fb)
                if len(xa) != 2 or len(xb) != 2:
                    break
                da = g.sub(*reversed(xa.elements()))
                db = g.sub(*reversed(xb.elements()))
                if da != db:
                    break
                ends.append(da)
            else:
                if ends[0] != ends[1]:
                    return {"h_b": list(kb.carrier), "d": d, "h_d1": ends[0], "h_d2": ends[1]}
    return None


def beyond_types(h: Subgroup, a0: GroupSubset, b0: GroupSubset) -> list[tuple[str, dict[str, Any]]]:
    """Every type V-VIII that (A0, B0) satisfies, in type order, with witnesses.

    The types are not mutually exclusive (a translate pair of size three
    with |A0+B0| = |H|-3 is both VI and VII).
    """
    g = a0.group
    n, m = len(a0), len(b0)
    s = a0 + b0
    if len(s) != n + m:
        return []
    out = []
    if (n == 2 or m == 2) and n + m <= h.order - 2:
        out.append(("V", {}))
    if n == m == 3 and len(a0 + a0) > 5:
        for y in b0:
            x = g.sub(a0.min(), y)
            if b0.translate(x) == a0:
                out.append(("VI", {"b0": x}))
                break
    if len(s) == h.order - 3 >= 6:
        w = None
        if n == 3 and len(a0 + a0) > 5:
            w = _type_vii(h, a0, b0)
            if w is not None:
                out.append(("VII", {"side": "A", "a0": w[0], "b0": w[1]}))
        if w is None and m == 3 and len(b0 + b0) > 5:
            w = _type_vii(h, b0, a0)
            if w is not None:
                out.append(("VII", {"side": "B", "a0": w[1], "b0": w[0]}))
    if h.order >= 8:
        w = _type_viii(h, a0, b0)
        if w is not None:
            out.append(("VIII", w))
    return out


def beyond_type(h: Subgroup, a0: GroupSubset, b0: GroupSubset) -> tuple[str, dict[str, Any]] | None:
    found = beyond_types(h, a0, b0)
    return found[0] if found else None


def structured_matches(a: GroupSubset, b: GroupSubset) -> dict[str, StructuredCertificate]:
    """First certificate (in search order) for each type V-VIII the pair admits."""
    out: dict[str, StructuredCertificate] = {}
    for h, a1, a0, b1, b0 in _candidate_splits(a, b):
        for tag, w in beyond_types(h, a0, b0):
            out.setdefault(tag, StructuredCertificate(a.group, h, a1, a0, b1, b0, tag, w))
    return {t: out[t] for t in BEYOND_TYPES if t in out}


def _candidate_splits(a: GroupSubset, b: GroupSubset, order: list[Subgroup] | None = None):
    """Decompositions with common quasi-period meeting conditions (i) and (ii)."""
    g = a.group
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
                if qcnt[c] == 1:
                    yield h, a1, a0, b1, b0


def find_structured(a: GroupSubset, b: GroupSubset, order: list[Subgroup] | None = None) -> StructuredCertificate | None:
    for h, a1, a0, b1, b0 in _candidate_splits(a, b, order):
        t = beyond_type(h, a0, b0)
        if t is not None:
            return StructuredCertificate(a.group, h, a1, a0, b1, b0, t[0], t[1])
    return None


def beyond_classify(a: GroupSubset, b: GroupSubset) -> BeyondCertificate:
    a.require_same_group(b)
    if not a.mask or not b.mask:
        raise PreconditionError("A and B must be nonempty")
    s = a + b
    if len(s) != len(a) + len(b):
        raise PreconditionError(f"|A+B| = {len(s)} but |A|+|B| = {len(a) + len(b)}")
    g = a.group
    ext = extensions16(a, b, first_only=True)
    h = stabilizer(s)
    if h.is_trivial:
        struct = find_structured(a, b)
        if ext:
            return Extendible16(g, ext[0][0], ext[0][1], struct)
        if struct is not None:
            return struct
        raise InternalContradictionError(f"no outcome for A={a!r}, B={b!r} in {g.name}")
    if ext:
        return Extendible16(g, ext[0][0], ext[0][1], None)
    if (a + h.carrier) != a or (b + h.carrier) != b:
        raise InternalContradictionError("periodic sumset without (16) but A or B has holes")
    q = g.quotient_map(h)
    pa, pb = q.push(a), q.push(b)
    if len(pa + pb) != len(pa) + len(pb) or not stabilizer(pa + pb).is_trivial:
        raise InternalContradictionError("quotient pair fails the periodic branch conditions")
    return PeriodicBranch(g, h, pa, pb, beyond_classify(pa, pb))
