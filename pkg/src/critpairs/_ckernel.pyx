# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernel for groups of order at most 64.

Same algorithm and interface as ``critpairs._pykernel.PyKernel``; masks
live in a single uint64.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from critpairs._pykernel import PyKernel


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef class CKernel:
    cdef public tuple factors
    cdef public int n
    cdef public object full
    cdef int k
    cdef int *nsteps
    cdef uint64_t *low
    cdef uint64_t *high
    cdef int *up
    cdef int *down
    cdef int *neg

    backend = "cython"

    def __cinit__(self, factors):
        self.nsteps = NULL
        self.low = NULL
        self.high = NULL
        self.up = NULL
        self.down = NULL
        self.neg = NULL

    def __init__(self, factors):
        ref = PyKernel(factors)
        if ref.n > 64:
            raise ValueError("compiled kernel supports groups of order <= 64")
        self.factors = ref.factors
        self.n = ref.n
        self.full = ref.full
        self.k = max(1, len(self.factors))
        cdef int n = self.n, k = self.k, g, j
        self.nsteps = <int *> malloc(n * sizeof(int))
        self.neg = <int *> malloc(n * sizeof(int))
        self.low = <uint64_t *> malloc(n * k * sizeof(uint64_t))
        self.high = <uint64_t *> malloc(n * k * sizeof(uint64_t))
        self.up = <int *> malloc(n * k * sizeof(int))
        self.down = <int *> malloc(n * k * sizeof(int))
        if not (self.nsteps and self.neg and self.low and self.high and self.up and self.down):
            raise MemoryError()
        for g in range(n):
            steps = ref._steps[g]
            self.nsteps[g] = len(steps)
            self.neg[g] = ref._neg[g]
            for j, (lo, u, hi, d) in enumerate(steps):
                self.low[g * k + j] = lo
                self.high[g * k + j] = hi
                self.up[g * k + j] = u
                self.down[g * k + j] = d

    def __dealloc__(self):
        free(self.nsteps)
        free(self.neg)
        free(self.low)
        free(self.high)
        free(self.up)
        free(self.down)

    cdef inline uint64_t _tr(self, uint64_t m, int g) nogil:
        cdef int j, base = g * self.k
        for j in range(self.nsteps[g]):
            m = ((m & self.low[base + j]) << self.up[base + j]) | \
                ((m & self.high[base + j]) >> self.down[base + j])
        return m

    cdef uint64_t _sumset(self, uint64_t a, uint64_t b) nogil:
        cdef uint64_t out = 0, t
        if a == 0 or b == 0:
            return 0
        if __builtin_popcountll(a) > __builtin_popcountll(b):
            t = a
            a = b
            b = t
        while a:
            out |= self._tr(b, _ctz(a))
            a &= a - 1
        return out

    def translate(self, uint64_t m, int g):
        return self._tr(m, g)

    def sumset(self, uint64_t a, uint64_t b):
        return self._sumset(a, b)

    def counts(self, uint64_t a, uint64_t b):
        cdef int buf[64]
        cdef int i
        cdef uint64_t m
        for i in range(self.n):
            buf[i] = 0
        while a:
            m = self._tr(b, _ctz(a))
            while m:
                buf[_ctz(m)] += 1
                m &= m - 1
            a &= a - 1
        return [buf[i] for i in range(self.n)]

    def negate(self, uint64_t m):
        cdef uint64_t out = 0
        while m:
            out |= (<uint64_t> 1) << self.neg[_ctz(m)]
            m &= m - 1
        return out

    def stabilizer(self, uint64_t m):
        cdef uint64_t cands, out = 0
        cdef int g
        if m == 0:
            return self.full
        cands = self._tr(m, self.neg[_ctz(m)])
        while cands:
            g = _ctz(cands)
            if self._tr(m, g) == m:
                out |= (<uint64_t> 1) << g
            cands &= cands - 1
        return out

    def sumset_sizes(self, uint64_t a, list bs):
        """|A + B| for each B in ``bs`` (batch form for enumeration loops)."""
        cdef list out = []
        cdef uint64_t b
        for b in bs:
            out.append(__builtin_popcountll(self._sumset(a, b)))
        return out
