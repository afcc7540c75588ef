"""Sumset arithmetic: representation sets, stabilizers, N_i layers,
the e-transform and subset distances to structured families."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from critpairs.errors import DomainError, ParseError, PreconditionError
from critpairs.groups import FiniteAbelianGroup, GroupSubset, Subgroup, parse_element, parse_subset

INF = math.inf


def sumset(a: GroupSubset, b: GroupSubset) -> GroupSubset:
    return a + b


def translate(s: GroupSubset, g: int) -> GroupSubset:
    return s.translate(g)


def negate(s: GroupSubset) -> GroupSubset:
    return -s


def difference_set(a: GroupSubset, b: GroupSubset) -> GroupSubset:
    """A - B = A + (-B)."""
    return a + (-b)


# -- representation sets ----------------------------------------------------


@dataclass(frozen=True)
class NuWitness:
    target: int
    witnesses: GroupSubset

    @property
    def multiplicity(self) -> int:
        return len(self.witnesses)


def nu(a: GroupSubset, b: GroupSubset, x: int) -> NuWitness:
    """(x - A) & B: the B-parts of all representations x = a + b."""
    a.require_same_group(b)
    g = a.group
    g.check(x)
    if not a.mask or not b.mask:
        return NuWitness(x, g.empty)
    k = g.kernel
    return NuWitness(x, GroupSubset(g, k.translate(k.negate(a.mask), x) & b.mask))


def nu_counts(a: GroupSubset, b: GroupSubset) -> list[int]:
    """|nu_x(A, B)| for every x in canonical order."""
    a.require_same_group(b)
    return a.group.kernel.counts(a.mask, b.mask)


def unique_expression_elements(a: GroupSubset, b: GroupSubset) -> GroupSubset:
    cnt = nu_counts(a, b)
    return a.group.subset(x for x, c in enumerate(cnt) if c == 1)


# -- periodicity -------------------------------------------------------------


def stabilizer(s: GroupSubset) -> Subgroup:
    """The maximal period H(S) = {g : g + S = S}."""
    if not s.mask:
        raise DomainError("stabilizer of the empty set is undefined")
    g = s.group
    return g.subgroup_from_mask(g.kernel.stabilizer(s.mask))


def is_periodic(s: GroupSubset) -> bool:
    return bool(s.mask) and s.group.kernel.stabilizer(s.mask) != 1


def is_h_periodic(s: GroupSubset, h: Subgroup) -> bool:
    return s.group.kernel.sumset(s.mask, h.mask) == s.mask


@dataclass(frozen=True)
class PeriodicityFlags:
    is_periodic: bool
    is_aperiodic: bool
    is_punctured_periodic: bool
    stabilizer: Subgroup
    gamma: int | None = None
    punctured_period: Subgroup | None = None


def periodicity_flags(s: GroupSubset) -> PeriodicityFlags:
    """Periodic / aperiodic / punctured-periodic status of a nonempty set.

    The punctured witness is the least gamma outside S for which
    S + {gamma} is periodic; its period is the stabilizer of that union.
    """
    h = stabilizer(s)
    periodic = not h.is_trivial
    gamma = None
    period = None
    if s.mask != s.group.full_mask:
        k = s.group.kernel
        rest = s.group.full_mask ^ s.mask
        while rest:
            lsb = rest & -rest
            m = s.mask | lsb
            st = k.stabilizer(m)
            if st != 1:
                gamma = lsb.bit_length() - 1
                period = s.group.subgroup_from_mask(st)
                break
            rest ^= lsb
    return PeriodicityFlags(periodic, not periodic, gamma is not None, h, gamma, period)


def holes(s: GroupSubset, h: Subgroup) -> GroupSubset:
    """H-holes of S: (S + H) minus S."""
    return (s + h.carrier).difference(s)


# -- N_i layers ------------------------------------------------------------------


@dataclass(frozen=True)
class LayerDecomposition:
    a: GroupSubset
    b: GroupSubset
    layers: tuple[GroupSubset, ...]
    # classes[i][U mask] = N_i^U for i >= 1; classes[0] is empty
    classes: tuple[dict[int, GroupSubset], ...] = field(repr=False)
    partial_sums: tuple[GroupSubset, ...] = field(repr=False)

    def n(self, i: int) -> GroupSubset:
        if i < len(self.layers):
            return self.layers[i]
        return self.a.group.empty

    def n_u(self, i: int, u: GroupSubset) -> GroupSubset:
        if i == 0 or i >= len(self.layers):
            return self.a.group.empty
        return self.classes[i].get(u.mask, self.a.group.empty)

    def n_le_u(self, i: int, u: GroupSubset) -> GroupSubset:
        """N_i^{<=U}: union of N_i^V over V contained in U."""
        m = 0
        if 0 < i < len(self.layers):
            for v, part in self.classes[i].items():
                if v & ~u.mask == 0:
                    m |= part.mask
        return GroupSubset(self.a.group, m)

    def check_identity(self) -> bool:
        """A+(i-1)B+(B minus U) == (A+iB) minus N_i^{<=U} for every occurring U."""
        for i in range(1, len(self.layers)):
            prev, cur = self.partial_sums[i - 1], self.partial_sums[i]
            for u in self.classes[i]:
                us = GroupSubset(self.a.group, u)
                lhs = prev + self.b.difference(us)
                rhs = cur.difference(self.n_le_u(i, us))
                if lhs != rhs:
                    return False
        return True


def layers(a: GroupSubset, b: GroupSubset, max_i: int) -> LayerDecomposition:
    """N_0 = A, N_i = (A + iB) minus (A + (i-1)B), with witness classes N_i^U."""
    a.require_same_group(b)
    if 0 not in a or 0 not in b:
        raise PreconditionError("layers require 0 in A and 0 in B")
    g = a.group
    k = g.kernel
    sums = [a]
    out = [a]
    classes: list[dict[int, GroupSubset]] = [{}]
    for i in range(1, max_i + 1):
        prev = sums[-1]
        cur = prev + b
        ni = cur.difference(prev)
        if not ni.mask:
            break
        negprev = k.negate(prev.mask)
        parts: dict[int, int] = {}
        for x in ni:
            u = k.translate(negprev, x) & b.mask
            parts[u] = parts.get(u, 0) | (1 << x)
        sums.append(cur)
        out.append(ni)
        classes.append({u: GroupSubset(g, m) for u, m in sorted(parts.items())})
    return LayerDecomposition(a, b, tuple(out), tuple(classes), tuple(sums))


# -- Dyson e-transform ---------------------------------------------------------------


@dataclass(frozen=True)
class ETransformResult:
    e: int
    a_e: GroupSubset
    b_e: GroupSubset


def e_transform(a: GroupSubset, b: GroupSubset, e: int) -> ETransformResult:
    """A(e) = (e + B) | A and B(e) = (e + B) & A."""
    a.require_same_group(b)
    eb = b.translate(e)
    b_e = eb & a
    if not b_e.mask:
        raise PreconditionError(f"e={e} is not in A - B")
    a_e = eb | a
    assert len(a_e) + len(b_e) == len(a) + len(b)
    return ETransformResult(e, a_e, b_e)


# -- distances to structured families ------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """One of P, P_H, QP, QP_H, AP, AP_d."""

    kind: str  # "P", "QP" or "AP"
    subgroup: Subgroup | None = None
    difference: int | None = None

    def __post_init__(self):
        if self.kind not in ("P", "QP", "AP"):
            raise ValueError(f"unknown family {self.kind!r}")
        if self.kind == "AP" and self.subgroup is not None:
            raise ValueError("AP families take a difference, not a subgroup")
        if self.kind != "AP" and self.difference is not None:
            raise ValueError("P/QP families take a subgroup, not a difference")
        if self.kind == "QP" and self.subgroup is not None and self.subgroup.is_trivial:
            raise ValueError("quasi-periods must be nontrivial")
        if self.kind == "AP" and self.difference == 0:
            raise ValueError("progression difference must be nonzero")

    def __str__(self):
        if self.subgroup is not None:
            return f"{self.kind}:{self.subgroup.carrier!r}"
        if self.difference is not None:
            return f"{self.kind}:{self.difference}"
        return self.kind


def parse_family(g: FiniteAbelianGroup, text: str) -> FamilySpec:
    """``"P"``, ``"P:{0,3}"``, ``"QP"``, ``"QP:{0,3}"``, ``"AP"``, ``"AP:2"``."""
    kind, _, arg = text.strip().partition(":")
    kind = kind.upper()
    if kind not in ("P", "QP", "AP"):
        raise ParseError(f"bad family spec {text!r}")
    try:
        if not arg:
            return FamilySpec(kind)
        if kind == "AP":
            return FamilySpec(kind, difference=parse_element(g, arg))
        return FamilySpec(kind, subgroup=g.subgroup_from_mask(parse_subset(g, arg).mask))
    except (ValueError, DomainError) as exc:
        raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class Distance:
    value: float | int  # math.inf when no superset in the family exists
    witness: GroupSubset | None


def d_subset(a: GroupSubset, family: FamilySpec) -> Distance:
    """d^subset(A, family): fewest elements to add to A to land in the family."""
    g = a.group
    if family.kind == "P":
        if family.subgroup is not None:
            return _d_periodic(a, family.subgroup)
        return _best(_d_periodic(a, h) for h in g.all_subgroups()[1:])
    if family.kind == "QP":
        if family.subgroup is not None:
            return _d_quasi_periodic(a, family.subgroup)
        return _best(_d_quasi_periodic(a, h) for h in g.all_subgroups()[1:])
    if family.difference is not None:
        return _d_progression(a, family.difference)
    return _best(_d_progression(a, d) for d in range(1, g.order))


def distance(a: GroupSubset, family: FamilySpec | str) -> float | int:
    if isinstance(family, str):
        family = parse_family(a.group, family)
    return d_subset(a, family).value


def _best(results) -> Distance:
    best = Distance(INF, None)
    for r in results:
        if r.value < best.value or (
            r.value == best.value and r.witness is not None
            and (best.witness is None or r.witness.mask < best.witness.mask)
        ):
            best = r
    return best


def _d_periodic(a: GroupSubset, h: Subgroup) -> Distance:
    w = a + h.carrier if a.mask else a
    return Distance(len(w) - len(a), w)


def _d_quasi_periodic(a: GroupSubset, h: Subgroup) -> Distance:
    g = a.group
    cosets = h.coset_masks
    met = [c for c in cosets if c & a.mask]
    if not met:
        # only a full coset can supply the nonempty periodic part
        return Distance(h.order, GroupSubset(g, cosets[0]))
    filled = 0
    for c in met:
        filled |= c
    if len(met) == 1:
        return Distance(h.order - len(a), GroupSubset(g, filled))
    best = None
    for c in met:
        w = (filled & ~c) | (a.mask & c)
        cand = (w.bit_count() - len(a), w)
        if best is None or cand < best:
            best = cand
    return Distance(best[0], GroupSubset(g, best[1]))


def coset_walk(g: FiniteAbelianGroup, start: int, d: int) -> list[int]:
    """start, start+d, start+2d, ... around the <d>-coset of ``start``."""
    k = g.kernel
    out = [start]
    x = k.translate(1 << start, d).bit_length() - 1
    while x != start:
        out.append(x)
        x = k.translate(1 << x, d).bit_length() - 1
    return out


def covering_arcs(s: GroupSubset, d: int) -> list[tuple[int, int]] | None:
    """All minimal arcs (first term, length) of the d-walk covering S.

    ``None`` when S is empty or meets more than one <d>-coset.
    """
    if not s.mask:
        return None
    walk = coset_walk(s.group, s.min(), d)
    wmask = 0
    for x in walk:
        wmask |= 1 << x
    if s.mask & ~wmask:
        return None
    length = len(walk)
    marked = [x in s for x in walk]
    if all(marked):
        return [(walk[0], length)]
    # largest run of unmarked positions, cyclically
    best = 0
    starts = []
    for i in range(length):
        if marked[i] and not marked[(i - 1) % length]:
            gap = 0
            j = (i - 1) % length
            while not marked[j]:
                gap += 1
                j = (j - 1) % length
            if gap > best:
                best, starts = gap, [i]
            elif gap == best:
                starts.append(i)
    return [(walk[i], length - best) for i in starts]


def progression_mask(g: FiniteAbelianGroup, first: int, d: int, length: int) -> int:
    k = g.kernel
    m = 0
    x = first
    for _ in range(length):
        m |= 1 << x
        x = k.translate(1 << x, d).bit_length() - 1
    return m


def _d_progression(a: GroupSubset, d: int) -> Distance:
    g = a.group
    if not a.mask:
        return Distance(1, g.subset([0]))
    arcs = covering_arcs(a, d)
    if arcs is None:
        return Distance(INF, None)
    masks = [progression_mask(g, first, d, length) for first, length in arcs]
    w = min(masks)
    return Distance(w.bit_count() - len(a), GroupSubset(g, w))


# -- Kneser ------------------------------------------------------------------------


def kneser_sides(a: GroupSubset, b: GroupSubset) -> tuple[Subgroup, int, int]:
    """(H, |phi(A)+phi(B)|, |phi(A)|+|phi(B)|-1) with H the stabilizer of A+B."""
    s = a + b
    h = stabilizer(s)
    q = a.group.quotient_map(h)
    pa, pb = q.push(a), q.push(b)
    return h, len(pa + pb), len(pa) + len(pb) - 1
