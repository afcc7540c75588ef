"""Clique graph M(A,B), the sum/difference edge bijection, and the |A+B| bounds.

M(A,B) has vertex set A x B with an edge between (a,b) and (a',b')
when a+b = a'+b'; it is a disjoint union of cliques, one per element of
A+B.  All bound arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from critpairs.errors import InternalContradictionError, PreconditionError
from critpairs.groups import GroupSubset
from critpairs.sumsets import nu_counts


@dataclass(frozen=True)
class CliqueProfile:
    a: GroupSubset
    b: GroupSubset
    multiplicities: tuple[int, ...]
    counts: dict[int, int]
    edge_count: int

    @property
    def c(self) -> int:
        return len(self.multiplicities)


def clique_profile(a: GroupSubset, b: GroupSubset) -> CliqueProfile:
    a.require_same_group(b)
    if not a.mask or not b.mask:
        raise PreconditionError("A and B must be nonempty")
    mult = tuple(sorted(c for c in nu_counts(a, b) if c))
    counts = dict(sorted(Counter(mult).items()))
    edges = sum(n * comb(i, 2) for i, n in counts.items())
    return CliqueProfile(a, b, mult, counts, edges)


def edge_count(a: GroupSubset, b: GroupSubset) -> int:
    return sum(comb(c, 2) for c in nu_counts(a, b))


@dataclass(frozen=True)
class BijectionCheck:
    ok: bool
    edges_sum: int
    edges_difference: int
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_graph_bijection(a: GroupSubset, b: GroupSubset) -> BijectionCheck:
    """Edge counts of M(A,B) and M(A,-B) agree, and adjacent edges map to distinct components.

    The edge {(a,b),(a',b')} goes to {(a,-b'),(a',-b)}, which lies in the
    component of a-b'.  Both endpoints are checked to lie in that component,
    and edges sharing a vertex are checked to land in distinct components.
    """
    a.require_same_group(b)
    g = a.group
    e1, e2 = edge_count(a, b), edge_count(a, -b)
    if e1 != e2:
        return BijectionCheck(False, e1, e2, ("edge counts", e1, e2))
    cliques: dict[int, list[tuple[int, int]]] = {}
    for x in a:
        for y in b:
            cliques.setdefault(g.add(x, y), []).append((x, y))
    for members in cliques.values():
        for v in members:
            # components hit by the images of the edges {u, v}, u != v
            seen: dict[int, tuple[int, int]] = {}
            for u in members:
                if u == v:
                    continue
                c = g.sub(u[0], v[1])
                if c != g.sub(v[0], u[1]):
                    return BijectionCheck(False, e1, e2, ("image not an edge", u, v))
                if c in seen:
                    return BijectionCheck(False, e1, e2, (seen[c], v, u))
                seen[c] = u
    return BijectionCheck(True, e1, e2)


# -- the three bounds ---------------------------------------------------------------


@dataclass(frozen=True)
class BoundsParams:
    a: int
    b: int
    k: int
    t_given: GroupSubset
    t: GroupSubset
    delta: int
    m: int
    x: int
    delta0: int
    l: int
    sumset_size: int
    bound_i: tuple[Fraction, Fraction]
    bound_ii: tuple[Fraction, Fraction, Fraction]
    bound_iii: Fraction

    def holds(self) -> bool:
        c = self.sumset_size
        return c >= self.bound_i[0] and c >= self.bound_iii and len(self.t) >= self.bound_ii[0]


def violators(a: GroupSubset, b: GroupSubset, k: int) -> GroupSubset:
    """{x : |nu_x(A,-B)| > k}."""
    cnt = nu_counts(a, -b)
    return a.group.subset(x for x, c in enumerate(cnt) if c > k)


def theorem31_params(a: GroupSubset, b: GroupSubset, t: GroupSubset, k: int) -> BoundsParams:
    """Derived quantities and exact bound values; T is replaced by the exact violator set."""
    a.require_same_group(b)
    a.require_same_group(t)
    na, nb = len(a), len(b)
    if not (k >= 1 and na >= nb > k):
        raise PreconditionError(f"need |A| >= |B| > k >= 1, got |A|={na}, |B|={nb}, k={k}")
    if na < len(t):
        raise PreconditionError(f"need |A| >= |T|, got {na} < {len(t)}")
    bad = violators(a, b, k).difference(t)
    if bad.mask:
        raise PreconditionError(f"|nu_x(A,-B)| > {k} outside T at x = {list(bad)}")
    tt = violators(a, b, k)
    nt = len(tt)
    ab = na * nb
    c = len(a + b)
    delta = (nb * (na - nt)) % k
    m = nt * nb * (nb - k) + (k - 1) * ab - delta * (k - delta)
    x = (-m) % ab or ab
    delta0 = (-ab) % c
    l = -(-ab // c) - 1
    if (ab + delta0) != c * (l + 1):
        raise InternalContradictionError("c(l+1) != ab + delta0")

    b_i = (Fraction(ab * ab, m + ab), Fraction(na * na * nb, nt * (nb - k) + k * na))
    den = c * nb * (nb - k)
    b_ii = (
        Fraction(ab * ab - delta0 ** 2 - c * (k * ab - delta0 - delta * (k - delta)), den),
        Fraction(ab * ab - delta0 ** 2 - c * (k * ab - delta0), den),
        Fraction(na * (ab - k * c), c * (nb - k)),
    )
    f1 = (m + ab) // ab
    f2 = (m + 2 * ab) // ab
    floor_form = Fraction(2 * ab, f2) - Fraction(m, f1 * f2)
    x_form = Fraction(ab * ab * (m + 2 * x), (m + ab + x) * (m + x))
    if floor_form != x_form:
        raise InternalContradictionError(f"bound (iii) forms disagree: {floor_form} != {x_form}")
    if not (b_i[0] >= b_i[1] and b_ii[0] >= b_ii[1] >= b_ii[2]):
        raise InternalContradictionError("bound chain out of order")
    return BoundsParams(na, nb, k, t, tt, delta, m, x, delta0, l, c, b_i, b_ii, floor_form)


def special_x_estimate(p: BoundsParams) -> int | None:
    """Closed form x = ab - |T|b(b-k) + delta(k-delta) when 0 <= |T|b(b-k) - delta(k-delta) < ab."""
    ab = p.a * p.b
    s = len(p.t) * p.b * (p.b - p.k) - p.delta * (p.k - p.delta)
    if not 0 <= s < ab:
        return None
    x = ab - s
    if x != p.x:
        raise InternalContradictionError(f"closed-form x={x} but congruence gives {p.x}")
    return x


def l_bound(ab: int, m: int, l: int) -> Fraction:
    """2ab/(l+1) - M/(l(l+1)), the bound on |A+B| in terms of l."""
    return Fraction(2 * ab, l + 1) - Fraction(m, l * (l + 1))


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def bounds_report(p: BoundsParams) -> dict:
    return {
        "a": p.a,
        "b": p.b,
        "k": p.k,
        "T": list(p.t.elements()),
        "delta": p.delta,
        "M": p.m,
        "x": p.x,
        "delta0": p.delta0,
        "bound_i": [_frac(q) for q in p.bound_i],
        "bound_ii": [_frac(q) for q in p.bound_ii],
        "bound_iii": _frac(p.bound_iii),
        "actual_sumset": p.sumset_size,
        "actual_T": len(p.t),
    }


def bounds_json(p: BoundsParams) -> str:
    return json.dumps(bounds_report(p), separators=(",", ":"))


# -- Sidon sets ---------------------------------------------------------------------


@dataclass(frozen=True)
class SidonReport:
    is_sidon: bool
    doubling: int
    lower_bound: Fraction | None
    attains_bound: bool | None


def sidon_check(s: GroupSubset) -> SidonReport:
    if not s.mask:
        raise PreconditionError("S must be nonempty")
    cnt = nu_counts(s, -s)
    sidon = all(c <= 1 for x, c in enumerate(cnt) if x != s.group.zero)
    n2 = len(s + s)
    if not sidon or len(s) < 2:
        return SidonReport(sidon, n2, None, None)
    p = theorem31_params(s, s, s.group.subset([s.group.zero]), 1)
    if n2 < p.bound_iii:
        raise InternalContradictionError(f"|2S| = {n2} below the bound {p.bound_iii}")
    return SidonReport(True, n2, p.bound_iii, n2 == p.bound_iii)
