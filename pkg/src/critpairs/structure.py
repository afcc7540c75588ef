"""Structural predicates: progressions, d-components, quasi-progressions and
quasi-periodic decompositions."""

from __future__ import annotations

from dataclasses import dataclass

from critpairs.errors import InternalContradictionError, PreconditionError
from critpairs.groups import FiniteAbelianGroup, GroupSubset, Subgroup
from critpairs.sumsets import coset_walk, covering_arcs, progression_mask


@dataclass(frozen=True, eq=False)
class ProgressionView:
    """{first, first+d, ..., first+(length-1)d}; ``difference`` is None only
    for the singleton of the trivial group."""

    group: FiniteAbelianGroup
    first: int
    difference: int | None
    length: int

    @property
    def mask(self) -> int:
        if self.difference is None:
            return 1 << self.first
        return progression_mask(self.group, self.first, self.difference, self.length)

    @property
    def last(self) -> int:
        if self.difference is None:
            return self.first
        return self.group.add(self.first, self.group.mul(self.length - 1, self.difference))

    def terms(self) -> list[int]:
        out = [self.first]
        for _ in range(self.length - 1):
            out.append(self.group.add(out[-1], self.difference))
        return out

    def reversed(self) -> "ProgressionView":
        if self.difference is None:
            return self
        return ProgressionView(self.group, self.last, self.group.neg(self.difference), self.length)

    def __eq__(self, other):
        if not isinstance(other, ProgressionView):
            return NotImplemented
        if self.group != other.group or self.mask != other.mask:
            return False
        if self.length == 1 or self.difference is None or other.difference is None:
            return True
        return other.difference in (self.difference, self.group.neg(self.difference))

    def __hash__(self):
        return hash((self.group, self.mask))


def progression_with_difference(s: GroupSubset, d: int) -> ProgressionView | None:
    if d == 0:
        raise PreconditionError("difference must be nonzero")
    arcs = covering_arcs(s, d)
    if arcs is None:
        return None
    first, length = arcs[0]
    if length != len(s):
        return None
    return ProgressionView(s.group, first, d, length)


def as_progression(s: GroupSubset) -> ProgressionView | None:
    """Some progression representation of S, trying differences in index order."""
    if not s.mask:
        raise PreconditionError("as_progression needs a nonempty set")
    g = s.group
    if len(s) == 1:
        return ProgressionView(g, s.min(), 1 if g.order > 1 else None, 1)
    for d in range(1, g.order):
        view = progression_with_difference(s, d)
        if view is not None:
            return view
    return None


def progression_differences(s: GroupSubset) -> list[int]:
    """Every nonzero d for which S is a d-progression."""
    return [d for d in range(1, s.group.order) if progression_with_difference(s, d) is not None]


# -- d-components ------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    first: int
    length: int
    periodic: bool
    mask: int


@dataclass(frozen=True)
class ComponentProfile:
    difference: int
    components: tuple[Component, ...]
    c_d: int
    l_d: int
    h_d: int


def _components(s: GroupSubset, d: int) -> list[Component]:
    g = s.group
    rest = s.mask
    out = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        walk = coset_walk(g, start, d)
        marked = [bool(s.mask >> x & 1) for x in walk]
        for x in walk:
            rest &= ~(1 << x)
        L = len(walk)
        if all(marked):
            m = 0
            for x in walk:
                m |= 1 << x
            out.append(Component(walk[0], L, True, m))
            continue
        for i in range(L):
            if marked[i] and not marked[i - 1]:
                m = 0
                j = i
                n = 0
                while marked[j % L]:
                    m |= 1 << walk[j % L]
                    n += 1
                    j += 1
                out.append(Component(walk[i], n, False, m))
    out.sort(key=lambda c: c.mask)
    return out


def d_components(s: GroupSubset, d: int) -> ComponentProfile:
    """Maximal d-progressions of S; full <d>-cosets are the periodic ones."""
    if d == 0:
        raise PreconditionError("difference must be nonzero")
    if not s.mask:
        raise PreconditionError("d_components needs a nonempty set")
    comps = _components(s, d)
    c_d = sum(1 for c in comps if not c.periodic)
    qp = minimal_quasi_progression(s, d)
    return ComponentProfile(d, tuple(comps), c_d, qp.l_d, qp.h_d)


def c_d(s: GroupSubset, d: int) -> int:
    """Number of aperiodic d-components, via |S + {0,d}| - |S|."""
    k = s.group.kernel
    return (s.mask | k.translate(s.mask, d)).bit_count() - len(s)


@dataclass(frozen=True)
class QuasiProgression:
    p: GroupSubset
    periodic_part: GroupSubset
    progression: GroupSubset
    l_d: int
    h_d: int


def minimal_quasi_progression(s: GroupSubset, d: int) -> QuasiProgression:
    """Least quasi-progression with difference d containing S (ties: least mask)."""
    if d == 0:
        raise PreconditionError("difference must be nonzero")
    g = s.group
    if not s.mask:
        raise PreconditionError("minimal_quasi_progression needs a nonempty set")
    cosets = []
    rest = s.mask
    while rest:
        start = (rest & -rest).bit_length() - 1
        walk = coset_walk(g, start, d)
        cm = 0
        for x in walk:
            cm |= 1 << x
        rest &= ~cm
        cosets.append(cm)
    full = 0
    for cm in cosets:
        full |= cm
    best = None
    for cm in cosets:
        part = GroupSubset(g, s.mask & cm)
        arcs = covering_arcs(part, d)
        prog = min(progression_mask(g, f, d, n) for f, n in arcs)
        p = (full & ~cm) | prog
        key = (p.bit_count(), p)
        if best is None or key < best[0]:
            best = (key, full & ~cm, prog)
    (_, pmask), per, prog = best
    l = pmask.bit_count()
    return QuasiProgression(GroupSubset(g, pmask), GroupSubset(g, per), GroupSubset(g, prog), l, l - len(s))


def h_d(s: GroupSubset, d: int) -> int:
    """Holes of S in its minimal d-quasi-progression (0 for the empty set)."""
    if not s.mask:
        return 0
    return minimal_quasi_progression(s, d).h_d


def is_quasi_progression(p: GroupSubset, d: int) -> bool:
    """P = P1 | P0 with P1 <d>-periodic and P0 a d-progression in one more coset."""
    if not p.mask:
        return False
    return minimal_quasi_progression(p, d).h_d == 0


# -- quasi-periodic decompositions -------------------------------------------------------


@dataclass(frozen=True)
class QuasiPeriodicDecomposition:
    quasi_period: Subgroup
    periodic_part: GroupSubset  # A1
    aperiodic_part: GroupSubset  # A0
    reduced: bool


def coset_split(s: GroupSubset, h: Subgroup) -> tuple[list[int], list[int]]:
    """(full coset masks, partial intersections) of S with the H-cosets."""
    full, partial = [], []
    for cm in h.coset_masks:
        inter = s.mask & cm
        if inter == cm:
            full.append(cm)
        elif inter:
            partial.append(inter)
    return full, partial


def is_quasi_periodic(s: GroupSubset) -> bool:
    """Has a quasi-periodic decomposition with nonempty periodic part."""
    if not s.mask:
        return False
    for h in s.group.all_subgroups()[1:]:
        full, partial = coset_split(s, h)
        if full and len(partial) <= 1:
            return True
    return False


def quasi_periodic_decompositions(s: GroupSubset, h: Subgroup) -> list[QuasiPeriodicDecomposition]:
    """Every split S = A1 | A0 with quasi-period H.

    A periodic S yields one split per designated coset, followed by the
    split with empty aperiodic part.
    """
    if h.is_trivial:
        raise PreconditionError("quasi-period must be nontrivial")
    g = s.group
    full, partial = coset_split(s, h)
    if len(partial) > 1:
        return []
    out = []
    if partial:
        a0 = GroupSubset(g, partial[0])
        out.append(QuasiPeriodicDecomposition(h, s.difference(a0), a0, not is_quasi_periodic(a0)))
        return out
    for cm in full:
        a0 = GroupSubset(g, cm)
        out.append(QuasiPeriodicDecomposition(h, s.difference(a0), a0, not is_quasi_periodic(a0)))
    out.append(QuasiPeriodicDecomposition(h, s, g.empty, True))
    return out


def reduce_decomposition(
    s: GroupSubset, h: Subgroup, decomposition: QuasiPeriodicDecomposition | None = None
) -> QuasiPeriodicDecomposition:
    """Descend to a reduced decomposition with quasi-period H' <= H and A0' inside A0.

    At each step the aperiodic part is re-split using the largest possible
    quasi-period, ties broken by least aperiodic-part mask.
    """
    if decomposition is None:
        decs = quasi_periodic_decompositions(s, h)
        if not decs:
            raise PreconditionError(f"S has no quasi-periodic decomposition with quasi-period {h!r}")
        decomposition = decs[0]
    elif decomposition.periodic_part | decomposition.aperiodic_part != s:
        raise PreconditionError("decomposition does not partition S")
    cur = decomposition
    g = s.group
    while not cur.reduced:
        a0 = cur.aperiodic_part
        best = None
        for h2 in reversed(g.all_subgroups()[1:]):
            if best is not None and h2.order < best[0].order:
                break
            for dec in quasi_periodic_decompositions(a0, h2):
                if dec.periodic_part.mask and (best is None or dec.aperiodic_part.mask < best[1].aperiodic_part.mask):
                    best = (h2, dec)
        if best is None:
            raise InternalContradictionError("aperiodic part flagged quasi-periodic but no split found")
        h2, dec = best
        if not h2 <= cur.quasi_period:
            raise InternalContradictionError("reduction left the quasi-period")
        a1 = cur.periodic_part | dec.periodic_part
        cur = QuasiPeriodicDecomposition(h2, a1, dec.aperiodic_part, not is_quasi_periodic(dec.aperiodic_part))
    return cur


# -- Matching dichotomy ---------------------------------------------------------------------


@dataclass(frozen=True)
class MatchOutcome:
    """Outcome (a): witnesses (a, a', b, b', c, c'); outcome (b): (a, b)."""

    outcome: str
    witnesses: tuple[int, ...]


def matching_configurations(a: GroupSubset, b: GroupSubset, c: GroupSubset) -> MatchOutcome:
    a.require_same_group(b)
    a.require_same_group(c)
    g = a.group
    if len(a) < 2 or len(b) < 2 or len(c) < 2:
        raise PreconditionError("|A|, |B|, |C| must all be at least 2")
    if not c.issubset(a + b):
        raise PreconditionError("C must lie in A + B")
    k = g.kernel
    for x in a:
        if not k.translate(b.mask, x) & c.mask:
            raise PreconditionError(f"(a + B) misses C for a={x}")
    for y in b:
        if not k.translate(a.mask, y) & c.mask:
            raise PreconditionError(f"(b + A) misses C for b={y}")
    hits = [(x, y, g.add(x, y)) for x in a for y in b if g.add(x, y) in c]
    for x, y, z in hits:
        for x2, y2, z2 in hits:
            if x2 != x and y2 != y and z2 != z:
                return MatchOutcome("a", (x, x2, y, y2, z, z2))
    if len(a) == len(b) == len(c) == 2:
        for x in a:
            for y in b:
                if a.translate(y) == c and b.translate(x) == c:
                    return MatchOutcome("b", (x, y))
    raise InternalContradictionError("neither matching outcome holds")
