"""Kernel backend selection.

The compiled kernel is used for groups of order <= 64 when the extension
imported cleanly; everything else (and any run with ``CRITPAIRS_PURE=1``
in the environment) uses the pure-Python kernel.  Both expose the same
methods: ``translate``, ``sumset``, ``counts``, ``negate``,
``stabilizer`` and ``sumset_sizes``.
"""

from __future__ import annotations

import os
from math import prod

from critpairs._pykernel import PyKernel

try:
    from critpairs._ckernel import CKernel
except ImportError:  # pragma: no cover - depends on the build
    CKernel = None

COMPILED_MAX_ORDER = 64


def compiled_available() -> bool:
    return CKernel is not None and not os.environ.get("CRITPAIRS_PURE")


def make_kernel(factors, backend: str | None = None):
    """Return a kernel for the group with the given factors.

    ``backend`` forces ``"python"`` or ``"cython"``; by default the
    compiled one is chosen when it applies.
    """
    n = prod(factors)
    if backend == "python":
        return PyKernel(factors)
    if backend == "cython":
        if CKernel is None:
            raise RuntimeError("compiled kernel is not available in this build")
        return CKernel(factors)
    if compiled_available() and n <= COMPILED_MAX_ORDER:
        return CKernel(factors)
    return PyKernel(factors)


def default_backend() -> str:
    return "cython" if compiled_available() else "python"
