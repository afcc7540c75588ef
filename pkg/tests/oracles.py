"""Brute-force reference computations over Python sets of coordinate tuples.

Nothing here touches the bitmask kernels; every function works directly
from the definitions so it can serve as an independent oracle.
"""

from __future__ import annotations

import itertools
from math import prod


class Naive:
    def __init__(self, factors):
        self.factors = tuple(factors)
        self.elements = list(itertools.product(*[range(f) for f in self.factors]))
        self.n = prod(self.factors)

    def idx(self, t):
        out = 0
        for c, f in zip(t, self.factors):
            out = out * f + c
        return out

    def tup(self, i):
        out = []
        for f in reversed(self.factors):
            out.append(i % f)
            i //= f
        return tuple(reversed(out))

    def add(self, x, y):
        return tuple((a + b) % f for a, b, f in zip(x, y, self.factors))

    def neg(self, x):
        return tuple((-a) % f for a, f in zip(x, self.factors))

    def zero(self):
        return tuple(0 for _ in self.factors)

    def sumset(self, a, b):
        return {self.add(x, y) for x in a for y in b}

    def nu(self, a, b, x):
        return {y for y in b if self.add(x, self.neg(y)) in a}

    def translate(self, s, g):
        return {self.add(x, g) for x in s}

    def stabilizer(self, s):
        return {g for g in self.elements if self.translate(s, g) == set(s)}

    def order(self, x):
        n, y = 1, x
        while y != self.zero():
            y = self.add(y, x)
            n += 1
        return n

    def closure(self, gens):
        h = {self.zero()}
        while True:
            new = h | {self.add(x, g) for x in h for g in gens}
            if new == h:
                return frozenset(h)
            h = new

    def subgroups(self):
        found = {self.closure(set())}
        for r in range(1, 4):
            for gens in itertools.combinations(self.elements, r):
                found.add(self.closure(set(gens)))
        return found

    def to_set(self, subset):
        return {self.tup(i) for i in subset}

    def to_idx(self, s):
        return sorted(self.idx(t) for t in s)


def all_nonempty_subsets(n):
    for m in range(1, 1 << n):
        yield m
