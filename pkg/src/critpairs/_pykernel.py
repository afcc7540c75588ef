"""Pure-Python bitmask kernel.

A subset of G = Z/n_1 x ... x Z/n_k is an int whose bit ``i`` marks the
element with canonical (mixed-radix) index ``i``.  Translating by an
element is a product of block rotations, one per nonzero coordinate, so
a translate costs O(k) big-int operations regardless of the set size.
"""

from __future__ import annotations

from math import prod


def _rotation_steps(factors):
    n = prod(factors)
    full = (1 << n) - 1
    strides = []
    s = 1
    for f in reversed(factors):
        strides.append(s)
        s *= f
    strides.reverse()

    # rot[i][s] = (low, up, high, down): bits whose i-th coordinate stays
    # below n_i after adding s move up, the others wrap down.
    rot = []
    for i, (f, st) in enumerate(zip(factors, strides)):
        table = [None] * f
        for shift in range(1, f):
            low = 0
            for j in range(n):
                if (j // st) % f < f - shift:
                    low |= 1 << j
            table[shift] = (low, shift * st, full ^ low, (f - shift) * st)
        rot.append(table)
    return n, strides, rot


class PyKernel:
    """Reference implementation of the kernel interface."""

    backend = "python"

    def __init__(self, factors):
        self.factors = tuple(factors)
        self.n, self.strides, rot = _rotation_steps(self.factors)
        self.full = (1 << self.n) - 1
        steps = []
        for g in range(self.n):
            row = []
            for i, (f, st) in enumerate(zip(self.factors, self.strides)):
                c = (g // st) % f
                if c:
                    row.append(rot[i][c])
            steps.append(tuple(row))
        self._steps = steps
        negs = []
        for g in range(self.n):
            idx = 0
            for f, st in zip(self.factors, self.strides):
                idx += ((-((g // st) % f)) % f) * st
            negs.append(idx)
        self._neg = negs

    def translate(self, m, g):
        for low, up, high, down in self._steps[g]:
            m = ((m & low) << up) | ((m & high) >> down)
        return m

    def sumset(self, a, b):
        if not a or not b:
            return 0
        if a.bit_count() > b.bit_count():
            a, b = b, a
        steps = self._steps
        out = 0
        while a:
            lsb = a & -a
            m = b
            for low, up, high, down in steps[lsb.bit_length() - 1]:
                m = ((m & low) << up) | ((m & high) >> down)
            out |= m
            a ^= lsb
        return out

    def counts(self, a, b):
        """Representation counts |nu_x(A, B)| for every x, as a list."""
        out = [0] * self.n
        steps = self._steps
        while a:
            lsb = a & -a
            m = b
            for low, up, high, down in steps[lsb.bit_length() - 1]:
                m = ((m & low) << up) | ((m & high) >> down)
            while m:
                bit = m & -m
                out[bit.bit_length() - 1] += 1
                m ^= bit
            a ^= lsb
        return out

    def negate(self, m):
        neg = self._neg
        out = 0
        while m:
            lsb = m & -m
            out |= 1 << neg[lsb.bit_length() - 1]
            m ^= lsb
        return out

    def stabilizer(self, m):
        """Mask of all g with g + S = S (S nonempty)."""
        if not m:
            return self.full
        lsb = m & -m
        s0 = lsb.bit_length() - 1
        # g + s0 must lie in S, so g ranges over S - s0
        cands = self.translate(m, self._neg[s0])
        out = 0
        while cands:
            bit = cands & -cands
            g = bit.bit_length() - 1
            if self.translate(m, g) == m:
                out |= bit
            cands ^= bit
        return out

    def sumset_sizes(self, a, bs):
        """|A + B| for each B in ``bs`` (batch form for enumeration loops)."""
        return [self.sumset(a, b).bit_count() for b in bs]
