"""Enumeration of pairs, classification records, and report files."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from critpairs.beyond import beyond_classify, outcome_label, structured_matches
from critpairs.certificates import certificate_to_dict
from critpairs.errors import BudgetExceededError, PreconditionError
from critpairs.groups import FiniteAbelianGroup, GroupSubset, make_group, parse_group, parse_subset
from critpairs.kst import KstCertificate, critical_classify
from critpairs.verify import verify_beyond_certificate, verify_critical

DEDUP_MODES = ("none", "translations", "translations+automorphisms")
DEFAULT_MAX_PAIRS = 2_000_000
MAX_AUTOMORPHISM_CANDIDATES = 200_000


# -- canonical forms ----------------------------------------------------------------


def canonical_translate(g: FiniteAbelianGroup, mask: int) -> int:
    """Least mask among the translates of S that contain 0."""
    k = g.kernel
    best = None
    m = mask
    while m:
        low = m & -m
        x = low.bit_length() - 1
        t = k.translate(mask, g.neg(x))
        if best is None or t < best:
            best = t
        m ^= low
    return best


def translation_representatives(g: FiniteAbelianGroup) -> list[int]:
    """Masks equal to their own canonical translate, in increasing order."""
    return [m for m in range(1, 1 << g.order, 2) if canonical_translate(g, m) == m]


def automorphisms(g: FiniteAbelianGroup) -> list[tuple[int, ...]]:
    """Every automorphism as the permutation x -> sigma(x), identity first."""
    # images of the standard generators; each must have order dividing its factor
    choices = [[y for y in g.elements() if g.mul(f, y) == 0] for f in g.factors]
    total = 1
    for c in choices:
        total *= len(c)
    if total > MAX_AUTOMORPHISM_CANDIDATES:
        raise BudgetExceededError(f"{total} candidate automorphisms of {g.name} exceed the budget")
    out = []

    def build(i, images):
        if i == len(choices):
            perm = []
            for x in g.elements():
                y = 0
                for c, img in zip(g.coords(x), images):
                    y = g.add(y, g.mul(c, img))
                perm.append(y)
            if len(set(perm)) == g.order:
                out.append(tuple(perm))
            return
        for y in choices[i]:
            build(i + 1, images + [y])

    build(0, [])
    out.sort()
    ident = tuple(g.elements())
    out.remove(ident)
    return [ident] + out


def _apply(perm: tuple[int, ...], mask: int) -> int:
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= 1 << perm[low.bit_length() - 1]
        m ^= low
    return out


# -- tasks and records --------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationTask:
    group: str
    r: int | None = None
    min_a: int = 1
    max_a: int | None = None
    min_b: int = 1
    max_b: int | None = None
    dedup: str = "translations"
    workers: int = 1
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_order: int = 16

    def __post_init__(self):
        if self.dedup not in DEDUP_MODES:
            raise PreconditionError(f"dedup must be one of {DEDUP_MODES}, got {self.dedup!r}")
        if self.workers < 1:
            raise PreconditionError("workers must be at least 1")


@dataclass(frozen=True)
class PairRecord:
    group: str
    a: tuple[int, ...]
    b: tuple[int, ...]
    sumset_size: int
    r: int
    outcome: str
    type_label: str
    type_chain: str
    verified: bool | None
    failures: tuple[str, ...] = ()
    certificate: dict[str, Any] | None = field(default=None, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "A": list(self.a),
            "B": list(self.b),
            "sumset_size": self.sumset_size,
            "r": self.r,
            "outcome": self.outcome,
            "type": self.type_label,
            "type_chain": self.type_chain,
            "verified": self.verified,
            "failures": list(self.failures),
            "certificate": self.certificate,
        }


def classify_pair(a: GroupSubset, b: GroupSubset) -> tuple[PairRecord, Any]:
    """Classify by excess r = |A+B|-|A|-|B| and verify independently."""
    g = a.group
    s = a + b
    r = len(s) - len(a) - len(b)
    cert = None
    verified = None
    failures: tuple[str, ...] = ()
    if r <= -1:
        cert = critical_classify(a, b)
        v = verify_critical(a, b, cert)
        verified, failures = v.ok, tuple(v.failures)
        if isinstance(cert, KstCertificate):
            outcome, label, chain = "KST", cert.type_tag, ">".join(cert.type_chain)
        else:
            qc = cert.quotient_certificate
            outcome, label = "PeriodicReduction", "PeriodicReduction"
            chain = ">".join(qc.type_chain) if qc is not None else ""
    elif r == 0:
        cert = beyond_classify(a, b)
        v = verify_beyond_certificate(a, b, cert)
        verified, failures = v.ok, tuple(v.failures)
        outcome = "Beyond"
        label = chain = outcome_label(cert)
    else:
        outcome, label, chain = "unclassified", "unclassified", ""
    rec = PairRecord(
        g.name, a.elements(), b.elements(), len(s), r, outcome, label, chain,
        verified, failures, certificate_to_dict(cert),
    )
    return rec, cert


def classify_one(group: str, a_text: str, b_text: str) -> tuple[PairRecord, list[str]]:
    """Parse, classify and verify one pair; returns the record and a readable transcript."""
    g = parse_group(group)
    a, b = parse_subset(g, a_text), parse_subset(g, b_text)
    if not a.mask or not b.mask:
        raise PreconditionError("A and B must be nonempty")
    rec, cert = classify_pair(a, b)
    lines = [
        f"group {g.name}",
        f"A = {a!r}",
        f"B = {b!r}",
        f"|A+B| = {rec.sumset_size}, r = {rec.r}",
        f"outcome {rec.outcome}: {rec.type_label}",
    ]
    if rec.type_chain and rec.type_chain != rec.type_label:
        lines.append(f"type chain {rec.type_chain}")
    if rec.r <= -1:
        v = verify_critical(a, b, cert)
    elif rec.r == 0:
        matches = structured_matches(a, b)
        lines.append("structured matches: " + (", ".join(matches) or "none"))
        v = verify_beyond_certificate(a, b, cert)
    else:
        lines.append("no classification applies for r >= 1")
        return rec, lines
    lines.append("verification:")
    lines.extend("  " + t for t in v.transcript())
    lines.append("verified" if v.ok else "VERIFICATION FAILED")
    return rec, lines


def _size_ok(n: int, lo: int, hi: int | None) -> bool:
    return n >= lo and (hi is None or n <= hi)


def _candidates(task: EnumerationTask, g: FiniteAbelianGroup) -> tuple[list[int], list[int]]:
    if task.dedup == "none":
        masks = list(range(1, 1 << g.order))
    else:
        masks = translation_representatives(g)
    a_masks = [m for m in masks if _size_ok(m.bit_count(), task.min_a, task.max_a)]
    b_masks = [m for m in masks if _size_ok(m.bit_count(), task.min_b, task.max_b)]
    return a_masks, b_masks


def _work(args) -> list[PairRecord]:
    factors, a_chunk, b_masks, r_filter, auts = args
    g = make_group(factors)
    k = g.kernel
    out = []
    for ma in a_chunk:
        for mb in b_masks:
            r = k.sumset(ma, mb).bit_count() - ma.bit_count() - mb.bit_count()
            if r_filter is not None and r != r_filter:
                continue
            if auts and not _pair_is_minimal(g, ma, mb, auts):
                continue
            rec, _ = classify_pair(g.from_mask(ma), g.from_mask(mb))
            out.append(rec)
    return out


def _pair_is_minimal(g, ma, mb, auts) -> bool:
    for perm in auts[1:]:
        img = (canonical_translate(g, _apply(perm, ma)), canonical_translate(g, _apply(perm, mb)))
        if img < (ma, mb):
            return False
    return True


def _chunks(xs: list[int], n: int) -> list[list[int]]:
    size = max(1, -(-len(xs) // max(1, n * 4)))
    return [xs[i:i + size] for i in range(0, len(xs), size)]


def enumerate_pairs(task: EnumerationTask) -> Iterator[PairRecord]:
    """Every canonical pair matching the filters, in (A mask, B mask) order.

    The A side is cut into chunks that workers process independently; the
    chunks are merged back in their original order, so the output does not
    depend on the number of workers.
    """
    g = parse_group(task.group)
    if g.order > task.max_order:
        raise BudgetExceededError(f"{g.name} has order {g.order} > budget {task.max_order}")
    a_masks, b_masks = _candidates(task, g)
    if len(a_masks) * len(b_masks) > task.max_pairs:
        raise BudgetExceededError(f"{len(a_masks) * len(b_masks)} pairs exceed the budget of {task.max_pairs}")
    auts = automorphisms(g) if task.dedup == "translations+automorphisms" else None
    jobs = [(g.factors, c, b_masks, task.r, auts) for c in _chunks(a_masks, task.workers)]
    if task.workers == 1 or len(jobs) == 1:
        for job in jobs:
            yield from _work(job)
        return
    with ProcessPoolExecutor(max_workers=task.workers) as ex:
        for recs in ex.map(_work, jobs):
            yield from recs


# -- reports ------------------------------------------------------------------------


def records_to_jsonl(records: Iterable[PairRecord]) -> str:
    return "".join(json.dumps(r.to_dict(), separators=(",", ":")) + "\n" for r in records)


def summary_rows(records: Iterable[PairRecord]) -> list[tuple[str, int, str, int]]:
    counts: dict[tuple[str, int, str], int] = {}
    for rec in records:
        key = (rec.group, rec.r, rec.type_label)
        counts[key] = counts.get(key, 0) + 1
    return [(gname, r, t, n) for (gname, r, t), n in sorted(counts.items())]


def records_to_csv(records: Iterable[PairRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group", "r", "type", "count"])
    w.writerows(summary_rows(records))
    return buf.getvalue()


def emit_reports(records: Iterable[PairRecord], path: str, fmt: str = "jsonl") -> int:
    """Write records to ``path``; returns the number of records written."""
    recs = list(records)
    if fmt == "jsonl":
        text = records_to_jsonl(recs)
    elif fmt == "csv":
        text = records_to_csv(recs)
    else:
        raise PreconditionError(f"unknown report format {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return len(recs)
