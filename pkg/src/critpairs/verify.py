"""Independent certificate checkers.

Nothing here reuses the search code or the bitmask kernels: every
condition is recomputed from the group's addition table on plain Python
sets, so a bug in the search cannot silently certify itself.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from critpairs.beyond import Extendible16, PeriodicBranch, StructuredCertificate
from critpairs.groups import FiniteAbelianGroup, GroupSubset
from critpairs.kst import KstCertificate, PeriodicReduction


@dataclass
class Verification:
    failures: list[str] = field(default_factory=list)
    passed: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def require(self, cond: bool, msg: str) -> bool:
        (self.passed if cond else self.failures).append(msg)
        return cond

    def transcript(self) -> list[str]:
        """Each check, stated as the defect it looks for."""
        return [f"ok   ruled out: {m}" for m in self.passed] + [f"FAIL {m}" for m in self.failures]

    def __bool__(self) -> bool:
        return self.ok


class _Ops:
    """Set arithmetic over a group's addition table."""

    def __init__(self, g: FiniteAbelianGroup):
        self.g = g
        self.t = g.add_table
        self.n = g.order
        self.zero = 0
        self.negs = [next(y for y in range(self.n) if self.t[x][y] == 0) for x in range(self.n)]

    def add(self, x, y):
        return self.t[x][y]

    def sub(self, x, y):
        return self.t[x][self.negs[y]]

    def sumset(self, a, b):
        return {self.t[x][y] for x in a for y in b}

    def neg(self, a):
        return {self.negs[x] for x in a}

    def shift(self, a, g):
        return {self.t[x][g] for x in a}

    def counts(self, a, b):
        return Counter(self.t[x][y] for x in a for y in b)

    def is_subgroup(self, h):
        return 0 in h and all(self.sub(x, y) in h for x in h for y in h)

    def periodic_under(self, s, h):
        return all(self.t[x][y] in s for x in s for y in h)

    def stabilizer(self, s):
        return {g for g in range(self.n) if self.shift(s, g) == s}

    def order_of(self, x):
        k, y = 1, x
        while y != 0:
            y = self.t[y][x]
            k += 1
        return k

    def labels(self, h):
        return [min(self.t[x][y] for y in h) for x in range(self.n)]

    def in_one_coset(self, s, h):
        if not s:
            return True
        x0 = next(iter(s))
        return all(self.sub(x, x0) in h for x in s)

    def is_progression(self, s, d):
        """Terms in order if s is a progression with difference d, else None.

        A full <d>-coset is a progression of length ord(d); its listing
        starts from the least element.
        """
        if not s:
            return None
        starts = [x for x in s if self.sub(x, d) not in s]
        if not starts and len(s) == self.order_of(d):
            starts = [min(s)]
        if len(starts) != 1:
            return None
        terms = [starts[0]]
        while len(terms) < len(s):
            nxt = self.add(terms[-1], d)
            if nxt not in s:
                return None
            terms.append(nxt)
        return terms


def _set(s: GroupSubset) -> set[int]:
    return set(s)


def _check_split(v, ops, name, whole, s1, s0, h):
    v.require(s1.isdisjoint(s0), f"{name}1 and {name}0 overlap")
    v.require(s1 | s0 == whole, f"{name}1 u {name}0 != {name}")
    v.require(bool(s0), f"{name}0 is empty")
    v.require(ops.periodic_under(s1, h), f"{name}1 is not H-periodic")
    v.require(ops.in_one_coset(s0, h), f"{name}0 is not inside one H-coset")


def _check_quotient_conditions(v, ops, a, b, a0, b0, h):
    lab = ops.labels(h)
    pa = {lab[x] for x in a}
    pb = {lab[x] for x in b}
    psum = {lab[ops.add(x, y)] for x in pa for y in pb}
    v.require(len(psum) == len(pa) + len(pb) - 1, "(ii) |phi(A)+phi(B)| != |phi(A)|+|phi(B)|-1")
    c = lab[ops.add(min(a0), min(b0))]
    reps = sum(1 for x in pa for y in pb if lab[ops.add(x, y)] == c)
    v.require(reps == 1, f"(i) nu_c(phi(A), phi(B)) = {reps}, expected 1")


def verify_kst_certificate(a: GroupSubset, b: GroupSubset, cert: KstCertificate) -> Verification:
    v = Verification()
    g = a.group
    if not v.require(cert.group == g and b.group == g, "certificate is for another group"):
        return v
    ops = _Ops(g)
    A, B = _set(a), _set(b)
    h = _set(cert.quasi_period.carrier)
    a1, a0, b1, b0 = map(_set, (cert.a1, cert.a0, cert.b1, cert.b0))
    s = ops.sumset(A, B)
    v.require(len(s) == len(A) + len(B) - 1, "pair is not critical")
    v.require(ops.is_subgroup(h), "quasi-period is not a subgroup")
    v.require(len(h) > 1, "quasi-period is trivial")
    _check_split(v, ops, "A", A, a1, a0, h)
    _check_split(v, ops, "B", B, b1, b0, h)
    if not v.ok:
        return v
    _check_quotient_conditions(v, ops, A, B, a0, b0, h)
    # (iii): unique expression elements only come from A0 + B0
    cnt = ops.counts(A, B)
    for x in A:
        for y in B:
            if cnt[ops.add(x, y)] == 1 and (x in a1 or y in b1):
                v.failures.append(f"(iii) unique expression {x}+{y} uses the periodic part")
    s0 = ops.sumset(a0, b0)
    v.require(len(s0) == len(a0) + len(b0) - 1, "|A0+B0| != |A0|+|B0|-1")
    _check_kst_type(v, ops, cert, a0, b0, h)
    _check_recursion(v, ops, a, b, cert)
    return v


def _check_kst_type(v, ops, cert, a0, b0, h):
    tag, w = cert.type_tag, cert.witnesses
    n, m = len(a0), len(b0)
    cnt0 = ops.counts(a0, b0)
    uniq = sorted(x for x, c in cnt0.items() if c == 1)
    if tag == "I":
        v.require(n == 1 or m == 1, "type I needs |A0| = 1 or |B0| = 1")
    elif tag == "II":
        d = w.get("d")
        if not v.require(isinstance(d, int) and 0 < d < ops.n, "type II needs a nonzero difference d"):
            return
        v.require(n >= 2 and m >= 2, "type II needs |A0|, |B0| >= 2")
        v.require(ops.is_progression(a0, d) is not None, "A0 is not a d-progression")
        v.require(ops.is_progression(b0, d) is not None, "B0 is not a d-progression")
        v.require(ops.order_of(d) >= n + m - 1, "order of d is below |A0|+|B0|-1")
        v.require(ops.is_progression(ops.sumset(a0, b0), d) is not None, "A0+B0 is not a d-progression")
        v.require(len(uniq) == 2, f"type II needs exactly two unique expression elements, found {len(uniq)}")
    elif tag == "III":
        v.require(n + m == len(h) + 1, "type III needs |A0|+|B0| = |H|+1")
        g0, g1 = w.get("g0"), w.get("g1")
        if not v.require(uniq == [g0], f"type III unique element set is {uniq}, witness g0={g0}"):
            return
        v.require(g1 in a0, "type III witness g1 not in A0")
        coset = ops.shift(h, g1)
        want = {ops.sub(g0, x) for x in coset - a0} | {ops.sub(g0, g1)}
        v.require(want == b0, "type III form of B0 fails")
    elif tag == "IV":
        g0, g1 = w.get("g0"), w.get("g1")
        v.require(ops.stabilizer(a0) == {0}, "type IV needs A0 aperiodic")
        v.require(not uniq, "type IV pair has a unique expression element")
        if not v.require(g1 in a0, "type IV witness g1 not in A0"):
            return
        coset = ops.shift(h, g1)
        want = {ops.sub(g0, x) for x in coset - a0}
        v.require(want == b0, "type IV form of B0 fails")
        v.require(ops.sumset(a0, b0) == ops.shift(h, g0) - {g0}, "type IV: A0+B0 != (g0+H) minus g0")
    else:
        v.failures.append(f"unknown KST type {tag!r}")


def _check_recursion(v, ops, a, b, cert):
    g = a.group
    h = cert.quasi_period
    chain = cert.chain
    v.require(len(chain) >= 2, "chain too short")
    if len(chain) >= 2:
        v.require(chain[0].is_trivial, "chain does not start at the trivial subgroup")
        v.require(chain[1] == h, "chain[1] is not the quasi-period")
        v.require(chain[-1].order == g.order, "chain does not end at G")
        v.require(all(x < y for x, y in zip(chain, chain[1:])), "chain is not strictly increasing")
    if h.order == g.order:
        v.require(cert.recursion is None, "recursion present although H = G")
        return
    if not v.require(cert.recursion is not None, "recursion missing although H < G"):
        return
    q = g.quotient_map(h)
    rec = cert.recursion
    sub = verify_kst_certificate(q.push(a), q.push(b), rec)
    v.failures.extend(f"quotient: {f}" for f in sub.failures)
    v.passed.extend(f"quotient: {f}" for f in sub.passed)
    lifted = tuple(q.preimage_subgroup(k) for k in rec.chain)
    v.require(tuple(chain[1:]) == lifted, "chain does not lift the quotient chain")


def verify_periodic_reduction(a: GroupSubset, b: GroupSubset, red: PeriodicReduction) -> Verification:
    """Re-check a reduction of a critical pair whose sumset is periodic with no unique element."""
    v = Verification()
    g = a.group
    ops = _Ops(g)
    A, B = _set(a), _set(b)
    s = ops.sumset(A, B)
    h = _set(red.quasi_period.carrier)
    v.require(len(s) <= len(A) + len(B) - 1, "|A+B| > |A|+|B|-1")
    v.require(h == ops.stabilizer(s), "quasi-period is not the stabilizer of A+B")
    v.require(1 not in ops.counts(A, B).values(), "A+B has a unique expression element")
    v.require(red.hole_count == len(s) + len(h) - len(A) - len(B), "hole count is wrong")
    lab = ops.labels(h)
    pa = sorted({lab[x] for x in A})
    pb = sorted({lab[x] for x in B})
    ps = {lab[x] for x in s}
    v.require(len(ps) == len(pa) + len(pb) - 1, "quotient pair is not critical")
    # H being the whole stabilizer already makes phi(A+B) aperiodic
    v.require(len(ps) * len(h) == len(s), "A+B is not a union of H-cosets")
    q = g.quotient_map(red.quasi_period)
    v.require(len(red.quotient_a) == len(pa) and len(red.quotient_b) == len(pb), "quotient sets have the wrong size")
    v.require(q.preimage(red.quotient_a) == a + red.quasi_period.carrier, "quotient A does not lift to A+H")
    v.require(q.preimage(red.quotient_b) == b + red.quasi_period.carrier, "quotient B does not lift to B+H")
    if red.quotient_certificate is not None:
        sub = verify_kst_certificate(red.quotient_a, red.quotient_b, red.quotient_certificate)
        v.failures.extend(f"quotient: {f}" for f in sub.failures)
        v.passed.extend(f"quotient: {f}" for f in sub.passed)
    else:
        v.require(len(h) == g.order, "quotient certificate missing although H < G")
    return v


def verify_critical(a: GroupSubset, b: GroupSubset, cert) -> Verification:
    if isinstance(cert, PeriodicReduction):
        return verify_periodic_reduction(a, b, cert)
    return verify_kst_certificate(a, b, cert)


# -- r = 0 certificates -------------------------------------------------------------


def verify_beyond_certificate(a: GroupSubset, b: GroupSubset, cert) -> Verification:
    v = Verification()
    g = a.group
    if not v.require(cert.group == g and b.group == g, "certificate is for another group"):
        return v
    ops = _Ops(g)
    A, B = _set(a), _set(b)
    s = ops.sumset(A, B)
    v.require(len(s) == len(A) + len(B), "|A+B| != |A|+|B|")
    if isinstance(cert, Extendible16):
        a2, b2 = A | {cert.alpha}, B | {cert.beta}
        v.require(len(ops.sumset(a2, b2)) == len(a2) + len(b2) - 1, "(16) fails for the witness")
        if cert.aux is not None:
            sub = verify_beyond_certificate(a, b, cert.aux)
            v.failures.extend(f"aux: {f}" for f in sub.failures)
            v.passed.extend(f"aux: {f}" for f in sub.passed)
        return v
    if isinstance(cert, StructuredCertificate):
        _verify_structured(v, ops, A, B, s, cert)
        return v
    if isinstance(cert, PeriodicBranch):
        h = _set(cert.quasi_period.carrier)
        v.require(ops.stabilizer(s) == h, "quasi-period is not the maximal period of A+B")
        v.require(len(h) > 1, "A+B is aperiodic")
        v.require(ops.periodic_under(A, h) and ops.periodic_under(B, h), "A or B is not H-periodic")
        lab = ops.labels(h)
        pa = {lab[x] for x in A}
        pb = {lab[x] for x in B}
        ps = {lab[x] for x in s}
        v.require(len(ps) == len(pa) + len(pb), "|phi(A)+phi(B)| != |phi(A)|+|phi(B)|")
        # phi(A+B) aperiodic: no g outside H maps A+B to itself modulo H
        v.require(all(g_ in h for g_ in ops.stabilizer(s)), "phi(A+B) is periodic")
        q = g.quotient_map(cert.quasi_period)
        v.require(q.push(a) == cert.quotient_a and q.push(b) == cert.quotient_b, "quotient pair mismatch")
        sub = verify_beyond_certificate(cert.quotient_a, cert.quotient_b, cert.recursion)
        v.failures.extend(f"quotient: {f}" for f in sub.failures)
        v.passed.extend(f"quotient: {f}" for f in sub.passed)
        return v
    v.failures.append(f"unknown certificate {type(cert).__name__}")
    return v


def _verify_structured(v, ops, A, B, s, cert):
    v.require(ops.stabilizer(s) == {0}, "A+B is periodic")
    h = _set(cert.quasi_period.carrier)
    a1, a0, b1, b0 = map(_set, (cert.a1, cert.a0, cert.b1, cert.b0))
    v.require(ops.is_subgroup(h) and len(h) > 1, "quasi-period is not a nontrivial subgroup")
    _check_split(v, ops, "A", A, a1, a0, h)
    _check_split(v, ops, "B", B, b1, b0, h)
    if not v.ok:
        return
    _check_quotient_conditions(v, ops, A, B, a0, b0, h)
    s0 = ops.sumset(a0, b0)
    n, m = len(a0), len(b0)
    v.require(len(s0) == n + m, "|A0+B0| != |A0|+|B0|")
    tag, w = cert.type_tag, cert.witnesses
    if tag == "V":
        v.require(n == 2 or m == 2, "type V needs a side of size 2")
        v.require(n + m <= len(h) - 2, "type V needs |A0|+|B0| <= |H|-2")
    elif tag == "VI":
        v.require(n == m == 3, "type VI needs |A0| = |B0| = 3")
        v.require(ops.shift(b0, w.get("b0", -1) % ops.n) == a0, "type VI: A0 != b0 + B0")
        v.require(len(ops.sumset(a0, a0)) > 5, "type VI needs |2A0| > 5")
    elif tag == "VII":
        if w.get("side") == "A":
            small, other, anchor, shift = a0, b0, w.get("a0"), w.get("b0")
        else:
            small, other, anchor, shift = b0, a0, w.get("b0"), w.get("a0")
        v.require(len(small) == 3, "type VII needs the small side to have 3 elements")
        v.require(anchor in small, "type VII anchor not in the small side")
        two = ops.sumset(small, small)
        v.require(len(two) > 5, "type VII needs |2S0| > 5")
        if anchor in small and isinstance(shift, int) and 0 <= shift < ops.n:
            comp = set(range(ops.n)) - two
            t = {ops.sub(ops.add(anchor, anchor), x) for x in comp} & h
            v.require(ops.shift(t, shift) == other, "type VII form fails")
        v.require(len(s0) == len(h) - 3 >= 6, "type VII needs |A0+B0| = |H|-3 >= 6")
    elif tag == "VIII":
        _verify_viii(v, ops, a0, b0, h, cert)
    else:
        v.failures.append(f"unknown structured type {tag!r}")


def _verify_viii(v, ops, a0, b0, h, cert):
    w = cert.witnesses
    kb = set(w.get("h_b", ()))
    t1, t2 = w.get("h_d1"), w.get("h_d2")
    v.require(len(kb) == 4 and ops.is_subgroup(kb), "H_b is not a subgroup of order 4")
    v.require(all(ops.add(x, x) == 0 for x in kb), "H_b is not a Klein four group")
    v.require(kb <= h, "H_b is not inside H")
    v.require(t1 in kb and t2 in kb and 0 not in (t1, t2) and t1 != t2, "H_d1, H_d2 are not distinct order-2 subgroups of H_b")
    if not v.ok:
        return
    g = cert.group
    kb_sub = g.subgroup_from_mask(sum(1 << x for x in kb))
    q = g.quotient_map(kb_sub)
    tq = _Ops(q.target)
    d = w.get("d")
    pa, pb = {q(x) for x in a0}, {q(x) for x in b0}
    ta, tb = tq.is_progression(pa, d), tq.is_progression(pb, d)
    if not v.require(ta is not None and tb is not None, "phi_b(A0), phi_b(B0) are not progressions with difference d"):
        return
    v.require(len(ta) >= 2 and len(tb) >= 2, "type VIII progressions need length >= 2")
    v.require(tq.order_of(d) >= len(ta) + len(tb) - 1, "order of d too small")

    def fibre(s, y):
        return {x for x in s if q(x) == y}

    for s, terms in ((a0, ta), (b0, tb)):
        for y in terms[1:-1]:
            v.require(len(fibre(s, y)) == 4, "a non-end term is not a full H_b-coset")
        first, last = fibre(s, terms[0]), fibre(s, terms[-1])
        v.require(len(first) == 2 and ops.shift(first, t1) == first, "first term is not an H_d1-coset")
        v.require(len(last) == 2 and ops.shift(last, t2) == last, "last term is not an H_d2-coset")
