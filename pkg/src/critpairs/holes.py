"""Where the holes alpha, beta of a pair with |A+B| = |A|+|B| may sit.

Such a pair is a critical pair (A', B') with one element deleted from
each side.  For extendible pairs the admissible positions follow from
the Kemperman type of (A', B'); for non-extendible pairs exactly one of
three configurations (A), (B), (C) occurs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from critpairs.beyond import beyond_types, extensions16
from critpairs.duality import extension_witnesses, is_extendible
from critpairs.errors import InternalContradictionError, PreconditionError
from critpairs.groups import GroupSubset
from critpairs.kst import KstCertificate, PeriodicReduction, critical_classify
from critpairs.structure import progression_with_difference
from critpairs.sumsets import nu, nu_counts

HOLE_CASES = ("ExtendiblePair", "A", "B", "C")


@dataclass(frozen=True)
class HolePlacement:
    case_tag: str
    a: GroupSubset
    b: GroupSubset
    alpha: int
    beta: int
    certificate: KstCertificate | PeriodicReduction
    details: dict[str, Any] = field(default_factory=dict)


# -- extendible pairs ---------------------------------------------------------------


def admissible_holes(a_ext: GroupSubset, b_ext: GroupSubset, cert: KstCertificate | PeriodicReduction) -> GroupSubset:
    """Elements of A' whose deletion leaves A'+B' unchanged, read off the certificate."""
    if isinstance(cert, PeriodicReduction):
        return a_ext
    g = a_ext.group
    a0 = cert.a0
    tag = cert.type_tag
    if tag == "I":
        keep = a0.complement()
    elif tag == "II":
        v = progression_with_difference(a0, cert.witnesses["d"])
        t = v.terms()
        keep = a0.difference(g.subset((t[0], t[-1])))
        keep = keep | a0.complement()
    elif tag == "III":
        keep = g.full.without_element(cert.witnesses["g1"])
    else:
        keep = g.full
    return a_ext & keep


def deletable_by_brute_force(a_ext: GroupSubset, b_ext: GroupSubset) -> GroupSubset:
    """x in A' with A'\\{x} + B' = A' + B', i.e. x in no unique expression."""
    cnt = nu_counts(a_ext, b_ext)
    g = a_ext.group
    bad = set()
    for x, c in enumerate(cnt):
        if c == 1:
            bad.add(g.sub(x, nu(a_ext, b_ext, x).witnesses.min()))
    return g.subset(y for y in a_ext if y not in bad)


def _extendible(a: GroupSubset, b: GroupSubset) -> HolePlacement:
    wa = is_extendible(a, b)
    if wa is not None:
        side, x, y, w = "A", a, b, wa
    else:
        side, x, y, w = "B", b, a, is_extendible(b, a)
    x_ext = x.with_element(w)
    cert = critical_classify(x_ext, y)
    rule = admissible_holes(x_ext, y, cert)
    brute = deletable_by_brute_force(x_ext, y)
    if rule != brute:
        raise InternalContradictionError(f"admissible holes {rule!r} disagree with direct scan {brute!r}")
    if w not in rule:
        raise InternalContradictionError("extension element is not an admissible hole")
    alpha, beta = (w, y.min()) if side == "A" else (y.min(), w)
    return HolePlacement("ExtendiblePair", a, b, alpha, beta, cert, {"side": side, "admissible": rule})


# -- non-extendible pairs -----------------------------------------------------------


def _type_ii_differences(g, a0: GroupSubset, b0: GroupSubset) -> list[int]:
    need = len(a0) + len(b0) - 1
    return [
        d for d in range(1, g.order)
        if g.element_order(d) >= need
        and progression_with_difference(a0, d) is not None
        and progression_with_difference(b0, d) is not None
    ]


def _positions(s: GroupSubset, d: int, x: int) -> tuple[int, int]:
    """Index of x counted from each end of the d-progression s."""
    t = progression_with_difference(s, d).terms()
    i = t.index(x)
    return i, len(t) - 1 - i


def _case_a(cert: KstCertificate, alpha: int, beta: int) -> dict[str, Any] | None:
    if cert.type_tag != "II" or alpha not in cert.a0 or beta not in cert.b0:
        return None
    n, m = len(cert.a0), len(cert.b0)
    if n < 3 or m < 3 or n == m == 3:
        return None
    g = cert.group
    for d in _type_ii_differences(g, cert.a0, cert.b0):
        pa, pb = _positions(cert.a0, d, alpha), _positions(cert.b0, d, beta)
        for side in (0, 1):
            if pa[side] == 1 and pb[side] == 1:
                return {"d": d if side == 0 else g.neg(d)}
    return None


def _case_b(cert: KstCertificate, alpha: int, beta: int) -> dict[str, Any] | None:
    """(A', B') of type IV; the dual of (A0, B0), moved into H, is a non-extendible type V pair of H."""
    if cert.type_tag != "IV" or alpha not in cert.a0 or beta not in cert.b0:
        return None
    g = cert.group
    h = cert.quasi_period
    a0 = cert.a0.without_element(alpha)
    b0 = cert.b0.without_element(beta)
    if not a0.mask or not b0.mask:
        return None
    a0h = a0.translate(g.neg(a0.min()))
    b0h = b0.translate(g.neg(b0.min()))
    hs = g.from_mask(h.mask)
    c = hs.difference(a0h + b0h)
    if len(c) != 2:
        return None
    x, y = -a0h, c
    for s, t in ((x, y), (y, x)):
        sum_mask = (s + t).mask
        for z in hs.difference(s):
            if (s.with_element(z) + t).mask == sum_mask:
                return None
    types = [tag for tag, _ in beyond_types(h, x, y)]
    if "V" not in types:
        return None
    return {"dual_a0": x, "dual_b0": y, "translation_checked": False}


def _case_c(cert: KstCertificate, a: GroupSubset, b: GroupSubset, alpha: int, beta: int) -> dict[str, Any] | None:
    if cert.type_tag != "I" or len(cert.a0) != 1 or len(cert.b0) != 1:
        return None
    if alpha not in cert.a1 or beta not in cert.b1:
        return None
    rec = cert.recursion
    if rec is None or rec.type_tag != "II":
        return None
    g = cert.group
    q = g.quotient_map(cert.quasi_period)
    qa, qb = q(alpha), q(beta)
    if qa not in rec.a0 or qb not in rec.b0:
        return None
    ho = cert.quasi_period.order
    x1 = g.add(cert.a0.min(), beta)
    x2 = g.add(cert.b0.min(), alpha)
    gamma_ok = x1 == x2 and x1 not in a + b
    lengths = (len(rec.a0), len(rec.b0))
    gq = rec.group
    for d in _type_ii_differences(gq, rec.a0, rec.b0):
        pa, pb = _positions(rec.a0, d, qa), _positions(rec.b0, d, qb)
        for side in (0, 1):
            dd = d if side == 0 else gq.neg(d)
            if pa[side] == 1 and pb[side] == 1 and gamma_ok:
                if ho > 2 or max(lengths) >= 3:
                    return {"d": dd, "term": "second", "gamma": x1}
            if ho == 2 and pa[side] == 0 and pb[side] == 0:
                if lengths != (2, 2) or x1 != x2:
                    return {"d": dd, "term": "first"}
    return None


def _non_extendible(a: GroupSubset, b: GroupSubset) -> HolePlacement:
    ext = extensions16(a, b)
    first = None
    for alpha, beta in ext:
        a_ext, b_ext = a.with_element(alpha), b.with_element(beta)
        cert = critical_classify(a_ext, b_ext)
        if isinstance(cert, PeriodicReduction):
            raise InternalContradictionError("A'+B' periodic without a unique expression element")
        found = {
            tag: w for tag, w in (
                ("A", _case_a(cert, alpha, beta)),
                ("B", _case_b(cert, alpha, beta)),
                ("C", _case_c(cert, a, b, alpha, beta)),
            ) if w is not None
        }
        if len(found) != 1:
            raise InternalContradictionError(
                f"alpha={alpha}, beta={beta} matches cases {sorted(found)} instead of exactly one"
            )
        if first is None:
            (tag, w), = found.items()
            first = HolePlacement(tag, a, b, alpha, beta, cert, w)
    return first


def hole_placement(a: GroupSubset, b: GroupSubset) -> HolePlacement:
    a.require_same_group(b)
    if not a.mask or not b.mask:
        raise PreconditionError("A and B must be nonempty")
    if len(a + b) != len(a) + len(b):
        raise PreconditionError("|A+B| must equal |A|+|B|")
    if not extensions16(a, b, first_only=True):
        raise PreconditionError("no alpha, beta make the pair critical")
    if extension_witnesses(a, b) != (None, None):
        return _extendible(a, b)
    return _non_extendible(a, b)
