"""Compare the compiled and pure-Python set kernels.

Runs each kernel operation on random masks and prints the mean time per
call for both backends and the speedup.  Usage::

    python benchmarks/bench_kernels.py [--groups z16 z2xz8 z32] [--calls 2000]
"""

from __future__ import annotations

import argparse
import random
import timeit

from critpairs.groups import parse_group
from critpairs.kernel import compiled_available, make_kernel

OPERATIONS = ("sumset", "counts", "stabilizer", "translate", "negate")


def _workload(kernel, op, pairs):
    if op == "sumset":
        return lambda: [kernel.sumset(a, b) for a, b in pairs]
    if op == "counts":
        return lambda: [kernel.counts(a, b) for a, b in pairs]
    if op == "stabilizer":
        return lambda: [kernel.stabilizer(a) for a, _ in pairs]
    if op == "translate":
        return lambda: [kernel.translate(a, 1) for a, _ in pairs]
    return lambda: [kernel.negate(a) for a, _ in pairs]


def bench(group: str, calls: int, seed: int = 0) -> list[tuple[str, str, float, float]]:
    g = parse_group(group)
    rng = random.Random(seed)
    full = (1 << g.order) - 1
    pairs = [(rng.randint(1, full), rng.randint(1, full)) for _ in range(calls)]
    py = make_kernel(g.factors, "python")
    cy = make_kernel(g.factors, "cython")
    rows = []
    for op in OPERATIONS:
        # both backends must agree before timing means anything
        if _workload(py, op, pairs)() != _workload(cy, op, pairs)():
            raise AssertionError(f"backends disagree on {op} in {g.name}")
        tp = min(timeit.repeat(_workload(py, op, pairs), number=1, repeat=3)) / calls
        tc = min(timeit.repeat(_workload(cy, op, pairs), number=1, repeat=3)) / calls
        rows.append((g.name, op, tp, tc))
    return rows


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--groups", nargs="+", default=["z8", "z16", "z2xz8", "z3xz9", "z32", "z64"])
    p.add_argument("--calls", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not compiled_available():
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'group':8} {'op':11} {'python us':>10} {'cython us':>10} {'speedup':>8}")
    for group in args.groups:
        for name, op, tp, tc in bench(group, args.calls, args.seed):
            print(f"{name:8} {op:11} {tp * 1e6:10.2f} {tc * 1e6:10.2f} {tp / tc:8.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
