"""Finite abelian groups in factor form, their subsets, subgroups and quotients.

Elements are plain ints: the mixed-radix index of the coordinate vector,
first coordinate most significant.  Subsets are bitmasks over those
indices wrapped in :class:`GroupSubset`.  Wherever a "least canonical
encoding" is needed, the bitmask integer itself is the encoding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from critpairs.errors import BudgetExceededError, DomainError, InvalidGroupError, ParseError
from critpairs.kernel import make_kernel

#: Largest group order for which subgroup enumeration is attempted.
SUBGROUP_BUDGET = 64


@dataclass(frozen=True, eq=True)
class FiniteAbelianGroup:
    """Z/n_1 x ... x Z/n_k; an empty factor list is the trivial group."""

    factors: tuple[int, ...]

    def __post_init__(self):
        for f in self.factors:
            if not isinstance(f, int) or f < 2:
                raise InvalidGroupError(f"invalid factor {f!r}: factors must be integers >= 2")

    def __repr__(self):
        return f"FiniteAbelianGroup({self.name})"

    @cached_property
    def order(self) -> int:
        return prod(self.factors)

    @cached_property
    def name(self) -> str:
        if not self.factors:
            return "trivial"
        return "x".join(f"z{f}" for f in self.factors)

    @cached_property
    def strides(self) -> tuple[int, ...]:
        out = []
        s = 1
        for f in reversed(self.factors):
            out.append(s)
            s *= f
        return tuple(reversed(out))

    @cached_property
    def kernel(self):
        return make_kernel(self.factors)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    # -- elements ------------------------------------------------------

    def check(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise DomainError(f"{x!r} is not an element of {self.name}")
        return x

    def coords(self, x: int) -> tuple[int, ...]:
        self.check(x)
        return tuple((x // s) % f for f, s in zip(self.factors, self.strides))

    def index(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.factors):
            raise DomainError(f"{tuple(coords)} has wrong length for {self.name}")
        return sum((c % f) * s for c, f, s in zip(coords, self.factors, self.strides))

    @property
    def zero(self) -> int:
        return 0

    def add(self, x: int, y: int) -> int:
        cx, cy = self.coords(x), self.coords(y)
        return self.index([a + b for a, b in zip(cx, cy)])

    def neg(self, x: int) -> int:
        return self.index([-c for c in self.coords(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, n: int, x: int) -> int:
        return self.index([n * c for c in self.coords(x)])

    def element_order(self, x: int) -> int:
        out = 1
        for c, f in zip(self.coords(x), self.factors):
            out = out * (f // gcd(c, f)) // gcd(out, f // gcd(c, f))
        return out

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        """add_table[x][y] = x + y, built element by element from coordinates."""
        return tuple(tuple(self.add(x, y) for y in range(self.order)) for x in range(self.order))

    # -- subsets -------------------------------------------------------

    def subset(self, elements: Iterable[int] = ()) -> "GroupSubset":
        m = 0
        for x in elements:
            m |= 1 << self.check(x)
        return GroupSubset(self, m)

    def from_mask(self, mask: int) -> "GroupSubset":
        if mask < 0 or mask >> self.order:
            raise DomainError(f"mask {mask:#x} has bits outside {self.name}")
        return GroupSubset(self, mask)

    @property
    def full(self) -> "GroupSubset":
        return GroupSubset(self, self.full_mask)

    @property
    def empty(self) -> "GroupSubset":
        return GroupSubset(self, 0)

    # -- subgroups -----------------------------------------------------

    @cached_property
    def _subgroups(self) -> tuple["Subgroup", ...]:
        if self.order > SUBGROUP_BUDGET:
            raise BudgetExceededError(
                f"subgroup enumeration of {self.name} (order {self.order}) exceeds budget {SUBGROUP_BUDGET}"
            )
        k = self.kernel
        cyclic = set()
        for g in range(self.order):
            cyclic.add(_cyclic_mask(k, g))
        found = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            new = set()
            for h in frontier:
                for c in cyclic:
                    j = k.sumset(h, c)
                    if j not in found:
                        new.add(j)
            found |= new
            frontier = new
        subs = sorted(found, key=lambda m: (m.bit_count(), m))
        return tuple(Subgroup(GroupSubset(self, m)) for m in subs)

    def all_subgroups(self) -> list["Subgroup"]:
        """Every subgroup once, sorted by (order, carrier mask)."""
        return list(self._subgroups)

    @cached_property
    def _subgroup_by_mask(self) -> dict[int, "Subgroup"]:
        return {h.mask: h for h in self._subgroups}

    def subgroup_from_mask(self, mask: int) -> "Subgroup":
        if self.order <= SUBGROUP_BUDGET:
            try:
                return self._subgroup_by_mask[mask]
            except KeyError:
                raise DomainError(f"mask {mask:#x} is not a subgroup of {self.name}") from None
        sub = Subgroup(GroupSubset(self, mask))
        if not sub.is_closed():
            raise DomainError(f"mask {mask:#x} is not a subgroup of {self.name}")
        return sub

    @property
    def trivial_subgroup(self) -> "Subgroup":
        return self.subgroup_from_mask(1)

    @property
    def whole(self) -> "Subgroup":
        return self.subgroup_from_mask(self.full_mask)

    def subgroup_generated(self, s: "GroupSubset | Iterable[int]") -> "Subgroup":
        mask = s.mask if isinstance(s, GroupSubset) else self.subset(s).mask
        k = self.kernel
        h = 1
        while mask:
            lsb = mask & -mask
            h = k.sumset(h, _cyclic_mask(k, lsb.bit_length() - 1))
            mask ^= lsb
        return self.subgroup_from_mask(h)

    def quotient_map(self, h: "Subgroup") -> "QuotientMap":
        if h.group != self:
            raise DomainError("subgroup belongs to a different group")
        return _quotient(self, h.mask)


def _cyclic_mask(kernel, g: int) -> int:
    m = 1
    x = 0
    while True:
        x = kernel.translate(1 << x, g).bit_length() - 1
        if x == 0:
            return m
        m |= 1 << x


def make_group(factors: Sequence[int] = ()) -> FiniteAbelianGroup:
    """Build (and intern) the group Z/f_1 x ... x Z/f_k."""
    factors = tuple(factors)
    for f in factors:
        if not isinstance(f, int) or isinstance(f, bool) or f < 2:
            raise InvalidGroupError(f"invalid factor {f!r}: factors must be integers >= 2")
    return _intern(factors)


@lru_cache(maxsize=None)
def _intern(factors: tuple[int, ...]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(factors)


@dataclass(frozen=True, slots=True)
class GroupSubset:
    """A subset of a finite abelian group stored as a bitmask."""

    group: FiniteAbelianGroup
    mask: int

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            lsb = m & -m
            yield lsb.bit_length() - 1
            m ^= lsb

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.group.order and bool(self.mask >> x & 1)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"

    def require_same_group(self, other: "GroupSubset") -> None:
        if not isinstance(other, GroupSubset):
            raise DomainError(f"{other!r} is not a GroupSubset")
        if other.group != self.group:
            raise DomainError(f"subsets of different groups: {self.group.name} vs {other.group.name}")

    @property
    def cardinality(self) -> int:
        return len(self)

    def elements(self) -> tuple[int, ...]:
        return tuple(self)

    def min(self) -> int:
        if not self.mask:
            raise DomainError("empty set has no least element")
        return (self.mask & -self.mask).bit_length() - 1

    def __add__(self, other: "GroupSubset") -> "GroupSubset":
        self.require_same_group(other)
        return GroupSubset(self.group, self.group.kernel.sumset(self.mask, other.mask))

    def __neg__(self) -> "GroupSubset":
        return GroupSubset(self.group, self.group.kernel.negate(self.mask))

    def translate(self, g: int) -> "GroupSubset":
        return GroupSubset(self.group, self.group.kernel.translate(self.mask, self.group.check(g)))

    def __or__(self, other: "GroupSubset") -> "GroupSubset":
        self.require_same_group(other)
        return GroupSubset(self.group, self.mask | other.mask)

    def __and__(self, other: "GroupSubset") -> "GroupSubset":
        self.require_same_group(other)
        return GroupSubset(self.group, self.mask & other.mask)

    def difference(self, other: "GroupSubset") -> "GroupSubset":
        self.require_same_group(other)
        return GroupSubset(self.group, self.mask & ~other.mask)

    def complement(self) -> "GroupSubset":
        return GroupSubset(self.group, self.group.full_mask ^ self.mask)

    def with_element(self, x: int) -> "GroupSubset":
        return GroupSubset(self.group, self.mask | 1 << self.group.check(x))

    def without_element(self, x: int) -> "GroupSubset":
        return GroupSubset(self.group, self.mask & ~(1 << self.group.check(x)))

    def issubset(self, other: "GroupSubset") -> bool:
        self.require_same_group(other)
        return self.mask & ~other.mask == 0


@dataclass(frozen=True)
class Subgroup:
    carrier: GroupSubset

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.carrier.group

    @property
    def mask(self) -> int:
        return self.carrier.mask

    @property
    def order(self) -> int:
        return len(self.carrier)

    def __repr__(self) -> str:
        return f"Subgroup{self.carrier!r}"

    def __contains__(self, x: int) -> bool:
        return x in self.carrier

    def __le__(self, other: "Subgroup") -> bool:
        return self.group == other.group and self.mask & ~other.mask == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.mask != other.mask

    @property
    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_closed(self) -> bool:
        k = self.group.kernel
        return bool(self.mask & 1) and k.sumset(self.mask, self.mask) == self.mask

    @cached_property
    def coset_index(self) -> tuple[int, ...]:
        """coset id of every element; ids follow the order of :attr:`transversal`."""
        ids = [-1] * self.group.order
        k = self.group.kernel
        nxt = 0
        for x in range(self.group.order):
            if ids[x] < 0:
                c = k.translate(self.mask, x)
                while c:
                    lsb = c & -c
                    ids[lsb.bit_length() - 1] = nxt
                    c ^= lsb
                nxt += 1
        return tuple(ids)

    @cached_property
    def transversal(self) -> tuple[int, ...]:
        """Least element of each coset, in increasing order."""
        seen = set()
        out = []
        for x, c in enumerate(self.coset_index):
            if c not in seen:
                seen.add(c)
                out.append(x)
        return tuple(out)

    @cached_property
    def coset_masks(self) -> tuple[int, ...]:
        k = self.group.kernel
        return tuple(k.translate(self.mask, t) for t in self.transversal)

    @property
    def index(self) -> int:
        return self.group.order // self.order

    def coset_of(self, x: int) -> GroupSubset:
        return GroupSubset(self.group, self.coset_masks[self.coset_index[x]])


@dataclass(frozen=True)
class QuotientMap:
    """The natural map G -> G/H, with G/H given in invariant-factor form."""

    source: FiniteAbelianGroup
    subgroup: Subgroup
    target: FiniteAbelianGroup
    image: tuple[int, ...] = field(repr=False)

    def __call__(self, x: int) -> int:
        return self.image[self.source.check(x)]

    @cached_property
    def _fibre_masks(self) -> tuple[int, ...]:
        out = [0] * self.target.order
        for x, y in enumerate(self.image):
            out[y] |= 1 << x
        return tuple(out)

    def push(self, s: GroupSubset) -> GroupSubset:
        if s.group != self.source:
            raise DomainError("subset is not in the source group")
        img = self.image
        m = 0
        for x in s:
            m |= 1 << img[x]
        return GroupSubset(self.target, m)

    def preimage(self, t: GroupSubset) -> GroupSubset:
        if t.group != self.target:
            raise DomainError("subset is not in the target group")
        fib = self._fibre_masks
        m = 0
        for y in t:
            m |= fib[y]
        return GroupSubset(self.source, m)

    def lift(self, y: int) -> int:
        """Least element of the fibre over ``y``."""
        f = self._fibre_masks[self.target.check(y)]
        return (f & -f).bit_length() - 1

    def preimage_subgroup(self, k: Subgroup) -> Subgroup:
        return self.source.subgroup_from_mask(self.preimage(k.carrier).mask)


@lru_cache(maxsize=None)
def _quotient(g: FiniteAbelianGroup, hmask: int) -> QuotientMap:
    h = g.subgroup_from_mask(hmask)
    k = len(g.factors)
    rows = [[g.factors[i] if j == i else 0 for j in range(k)] for i in range(k)]
    span = 1
    for x in h.carrier:
        if not span >> x & 1:
            rows.append(list(g.coords(x)))
            span = g.kernel.sumset(span, _cyclic_mask(g.kernel, x))
    diag, q = _smith_column_transform(rows, k)
    keep = [t for t in range(k) if diag[t] != 1]
    target = make_group([diag[t] for t in keep])
    image = []
    for x in range(g.order):
        c = g.coords(x)
        y = [sum(c[i] * q[i][t] for i in range(k)) % diag[t] for t in keep]
        image.append(target.index(y))
    qm = QuotientMap(g, h, target, tuple(image))
    assert target.order * h.order == g.order
    assert {x for x in range(g.order) if image[x] == 0} == set(h.carrier)
    return qm


def _smith_column_transform(rows: list[list[int]], k: int) -> tuple[list[int], list[list[int]]]:
    """Diagonalise an integer relation matrix by unimodular row/column moves.

    Returns the diagonal ``d`` (d_1 | d_2 | ...) and the column transform
    ``Q`` such that x -> x Q induces Z^k / rowspan(rows) = (+) Z/d_t.
    """
    m = [r[:] for r in rows]
    q = [[int(i == j) for j in range(k)] for i in range(k)]
    nrows = len(m)

    def col_op(dst, src, f):  # col_dst -= f * col_src
        for r in m:
            r[dst] -= f * r[src]
        for r in q:
            r[dst] -= f * r[src]

    def col_swap(a, b):
        for r in m:
            r[a], r[b] = r[b], r[a]
        for r in q:
            r[a], r[b] = r[b], r[a]

    diag = []
    for t in range(k):
        while True:
            piv = None
            for i in range(t, nrows):
                for j in range(t, k):
                    if m[i][j] and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            i, j = piv
            m[t], m[i] = m[i], m[t]
            if j != t:
                col_swap(t, j)
            p = m[t][t]
            done = True
            for i in range(t + 1, nrows):
                f = m[i][t] // p
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[t])]
                if m[i][t]:
                    done = False
            for j in range(t + 1, k):
                f = m[t][j] // p
                if f:
                    col_op(j, t, f)
                if m[t][j]:
                    done = False
            if not done:
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, k) if m[i][j] % p),
                None,
            )
            if bad is None:
                break
            m[t] = [a + b for a, b in zip(m[t], m[bad])]
        diag.append(abs(m[t][t]) if t < nrows else 0)
    return diag, q


# -- literal parsing -------------------------------------------------------

_GROUP_RE = re.compile(r"^z(\d+)(xz(\d+))*$")


def parse_group(spec: str) -> FiniteAbelianGroup:
    """Parse ``"z6"``, ``"z2xz4"``, ``"z2xz2xz5"`` (or ``"trivial"``)."""
    s = spec.strip().lower()
    if s in ("trivial", "z1", "1"):
        return make_group(())
    if not _GROUP_RE.match(s):
        raise ParseError(f"bad group spec {spec!r}; expected e.g. 'z6' or 'z2xz4'")
    try:
        return make_group(tuple(int(p[1:]) for p in s.split("x")))
    except InvalidGroupError as exc:
        raise ParseError(str(exc)) from None


def parse_element(g: FiniteAbelianGroup, text: str) -> int:
    """Decimal canonical index, or a coordinate tuple such as ``(1,0,3)``."""
    s = text.strip()
    try:
        if s.startswith("("):
            if not s.endswith(")"):
                raise ParseError(f"bad element literal {text!r}")
            parts = [p for p in s[1:-1].split(",") if p.strip()]
            coords = [int(p) for p in parts]
            if len(coords) != len(g.factors) or any(not 0 <= c < f for c, f in zip(coords, g.factors)):
                raise ParseError(f"coordinates {text!r} do not fit {g.name}")
            return g.index(coords)
        x = int(s)
    except ValueError:
        raise ParseError(f"bad element literal {text!r}") from None
    if not 0 <= x < g.order:
        raise ParseError(f"element {x} out of range for {g.name}")
    return x


def parse_subset(g: FiniteAbelianGroup, text: str) -> GroupSubset:
    """Parse ``"{0,1,3}"``; entries may also be coordinate tuples."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError(f"bad set literal {text!r}; expected e.g. '{{0,1,3}}'")
    body = s[1:-1].strip()
    items: list[str] = []
    depth = 0
    cur = ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        items.append(cur)
    elif items:
        raise ParseError(f"bad set literal {text!r}")
    return g.subset(parse_element(g, it) for it in items)


def format_subset(s: GroupSubset) -> str:
    return repr(s)
