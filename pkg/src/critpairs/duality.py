"""Non-extendible pairs, their duals, and the Freiman isomorphism predicate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from critpairs.errors import DomainError, InternalContradictionError, PreconditionError
from critpairs.groups import FiniteAbelianGroup, GroupSubset


def is_extendible(a: GroupSubset, b: GroupSubset) -> int | None:
    """Least a0 outside A with (A u {a0}) + B = A + B, or None if A is non-extendible."""
    a.require_same_group(b)
    if not a.mask or not b.mask:
        raise PreconditionError("A and B must be nonempty")
    k = a.group.kernel
    s = k.sumset(a.mask, b.mask)
    for x in a.complement():
        if k.translate(b.mask, x) & ~s == 0:
            return x
    return None


def extension_witnesses(a: GroupSubset, b: GroupSubset) -> tuple[int | None, int | None]:
    """(witness for A, witness for B); the pair is non-extendible iff both are None."""
    return is_extendible(a, b), is_extendible(b, a)


def is_non_extendible_pair(a: GroupSubset, b: GroupSubset) -> bool:
    return extension_witnesses(a, b) == (None, None)


def dual_identity(a: GroupSubset, b: GroupSubset) -> bool:
    """Whether -B + complement(A+B) equals complement(A).

    The inclusion always holds; equality holds exactly when A is
    non-extendible with respect to B.
    """
    a.require_same_group(b)
    return (-b) + (a + b).complement() == a.complement()


@dataclass(frozen=True)
class DualPairs:
    a: GroupSubset
    b: GroupSubset
    first: tuple[GroupSubset, GroupSubset]
    second: tuple[GroupSubset, GroupSubset]
    excess: int


def dual_pairs(a: GroupSubset, b: GroupSubset) -> DualPairs:
    """The pairs (-A, C) and (-B, C) with C the complement of A+B, checked."""
    a.require_same_group(b)
    if not a.mask or not b.mask:
        raise PreconditionError("A and B must be nonempty")
    wa, wb = extension_witnesses(a, b)
    if wa is not None or wb is not None:
        side, w = ("A", wa) if wa is not None else ("B", wb)
        raise PreconditionError(f"pair is extendible: {side} absorbs {w}")
    s = a + b
    c = s.complement()
    if not c.mask:
        raise PreconditionError("A+B is the whole group")
    r = len(s) - len(a) - len(b)
    if (-b) + c != a.complement() or (-a) + c != b.complement():
        raise InternalContradictionError("dual identity fails for a non-extendible pair")
    first, second = (-a, c), (-b, c)
    for x, y in (first, second):
        if not is_non_extendible_pair(x, y):
            raise InternalContradictionError("dual pair is extendible")
        if len(x + y) != len(x) + len(y) + r:
            raise InternalContradictionError("cardinality excess not transferred to the dual")
    return DualPairs(a, b, first, second, r)


def is_freiman_isomorphism(
    a: GroupSubset, b: GroupSubset, mapping: Mapping[int, int], target: FiniteAbelianGroup
) -> bool:
    """Injective on A u B, and a1+b1 = a2+b2 exactly when the images agree."""
    a.require_same_group(b)
    g = a.group
    dom = a | b
    missing = [x for x in dom if x not in mapping]
    if missing:
        raise DomainError(f"map undefined on {missing}")
    img = {x: target.check(mapping[x]) for x in dom}
    if len(set(img.values())) != len(dom):
        return False
    pairs = [(x, y) for x in a for y in b]
    src = {}
    dst = {}
    for x, y in pairs:
        src.setdefault(g.add(x, y), set()).add((x, y))
        dst.setdefault(target.add(img[x], img[y]), set()).add((x, y))
    return sorted(map(sorted, src.values())) == sorted(map(sorted, dst.values()))
