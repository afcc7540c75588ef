import json
import random
from pathlib import Path

import pytest

from critpairs.errors import BudgetExceededError, ParseError, PreconditionError
from critpairs.groups import parse_group
from critpairs.harness import (
    EnumerationTask,
    _apply,
    automorphisms,
    canonical_translate,
    classify_one,
    classify_pair,
    emit_reports,
    enumerate_pairs,
    records_to_csv,
    records_to_jsonl,
    translation_representatives,
)
from oracles import Naive

GOLDEN = Path(__file__).parent / "golden"


def _naive_reps(n):
    """Least-encoding translate containing 0, straight from the definition."""
    nv = Naive([n])
    reps = set()
    for m in range(1, 1 << n):
        s = {i for i in range(n) if m >> i & 1}
        best = min(sum(1 << ((x - a) % n) for x in s) for a in s)
        reps.add(best)
    return sorted(reps), nv


def _is_ap(s, d, n):
    s = set(s)
    if len(s) == 1:
        return True
    starts = [x for x in s if (x - d) % n not in s]
    if len(starts) != 1:
        return False
    x, k = starts[0], 0
    while (x + k * d) % n in s:
        k += 1
    return k == len(s)


def test_translation_representatives_match_oracle():
    for n in (5, 7, 8):
        reps, _ = _naive_reps(n)
        assert translation_representatives(parse_group(f"z{n}")) == reps
    # Z/7: (2^7 - 2)/7 + 1 orbits of nonempty subsets
    assert len(translation_representatives(parse_group("z7"))) == 19


def test_canonical_translate_is_orbit_invariant():
    g = parse_group("z2xz4")
    rng = random.Random(3)
    for _ in range(200):
        m = rng.randrange(1, 1 << g.order)
        x = rng.randrange(g.order)
        assert canonical_translate(g, m) == canonical_translate(g, g.kernel.translate(m, x))


def test_automorphism_counts():
    # |Aut| = phi(n) for cyclic groups; GL(3,2) and GL(2,3) for the elementary ones
    expected = {"z6": 2, "z8": 4, "z9": 6, "z2xz4": 8, "z2xz2xz2": 168, "z3xz3": 48}
    for name, count in expected.items():
        auts = automorphisms(parse_group(name))
        assert len(auts) == count
        assert auts[0] == tuple(range(parse_group(name).order))


def test_automorphisms_are_homomorphisms():
    g = parse_group("z2xz4")
    for perm in automorphisms(g):
        for x in g.elements():
            for y in g.elements():
                assert perm[g.add(x, y)] == g.add(perm[x], perm[y])


def test_z5_critical_golden():
    task = EnumerationTask("z5", r=-1)
    records = list(enumerate_pairs(task))
    assert records_to_jsonl(records) == (GOLDEN / "z5_r-1.jsonl").read_text()
    assert records_to_csv(records) == (GOLDEN / "z5_r-1.csv").read_text()


def test_z5_critical_against_oracle():
    reps, nv = _naive_reps(5)
    expected = []
    for ma in reps:
        for mb in reps:
            a = [i for i in range(5) if ma >> i & 1]
            b = [i for i in range(5) if mb >> i & 1]
            s = nv.sumset({(x,) for x in a}, {(y,) for y in b})
            if len(s) == len(a) + len(b) - 1:
                expected.append((a, b))
    records = list(enumerate_pairs(EnumerationTask("z5", r=-1)))
    assert [(list(r.a), list(r.b)) for r in records] == expected
    assert len(records) == 27
    for rec in records:
        assert rec.verified and rec.outcome == "KST"
        a, b = rec.a, rec.b
        if min(len(a), len(b)) == 1:
            assert rec.type_label == "I"
        elif any(_is_ap(a, d, 5) and _is_ap(b, d, 5) for d in range(1, 5)):
            assert rec.type_label == "II"
        else:
            assert rec.type_label == "III"


def test_z7_excess_zero_outcomes():
    records = list(enumerate_pairs(EnumerationTask("z7", r=0)))
    assert records
    allowed = {"V", "VI", "VII", "VIII", "PeriodicBranch"}
    for rec in records:
        assert rec.outcome == "Beyond" and rec.verified
        parts = rec.type_label.split("+")
        assert parts[0] == "Extendible16" or parts[0] in allowed


def test_empty_filter_gives_empty_stream(tmp_path):
    task = EnumerationTask("z5", min_a=4, max_a=3)
    assert list(enumerate_pairs(task)) == []
    jl, cs = tmp_path / "e.jsonl", tmp_path / "e.csv"
    assert emit_reports([], str(jl), "jsonl") == 0
    assert emit_reports([], str(cs), "csv") == 0
    assert jl.read_text() == ""
    assert cs.read_text() == "group,r,type,count\n"


def test_unclassified_for_positive_excess():
    records = list(enumerate_pairs(EnumerationTask("z7", r=1)))
    assert records and all(r.outcome == "unclassified" and r.verified is None for r in records)


def test_parallel_output_is_identical():
    base = records_to_jsonl(enumerate_pairs(EnumerationTask("z8", r=-1, workers=1)))
    par = records_to_jsonl(enumerate_pairs(EnumerationTask("z8", r=-1, workers=3)))
    assert base == par


def test_dedup_mode_counts():
    none = sum(1 for _ in enumerate_pairs(EnumerationTask("z5", dedup="none")))
    trans = sum(1 for _ in enumerate_pairs(EnumerationTask("z5")))
    auto = sum(1 for _ in enumerate_pairs(EnumerationTask("z5", dedup="translations+automorphisms")))
    assert none == 31 * 31
    assert trans == 7 * 7
    assert auto < trans


def test_dedup_soundness_on_samples():
    rng = random.Random(11)
    for name in ("z8", "z2xz4", "z3xz3"):
        g = parse_group(name)
        auts = automorphisms(g)
        records = [r for r in enumerate_pairs(EnumerationTask(name)) if r.r <= 0]
        for rec in rng.sample(records, 60):
            perm = rng.choice(auts)
            x, y = rng.randrange(g.order), rng.randrange(g.order)
            a = g.from_mask(_apply(perm, g.subset(rec.a).mask)).translate(x)
            b = g.from_mask(_apply(perm, g.subset(rec.b).mask)).translate(y)
            other, _ = classify_pair(a, b)
            assert (other.outcome, other.type_label) == (rec.outcome, rec.type_label)


def test_automorphism_dedup_covers_every_orbit():
    g = parse_group("z6")
    auts = automorphisms(g)
    kept = {(g.subset(r.a).mask, g.subset(r.b).mask) for r in enumerate_pairs(EnumerationTask("z6", dedup="translations+automorphisms"))}
    for rec in enumerate_pairs(EnumerationTask("z6")):
        ma, mb = g.subset(rec.a).mask, g.subset(rec.b).mask
        images = {(canonical_translate(g, _apply(p, ma)), canonical_translate(g, _apply(p, mb))) for p in auts}
        assert len(images & kept) == 1


def test_budgets():
    with pytest.raises(BudgetExceededError):
        list(enumerate_pairs(EnumerationTask("z2xz2xz2xz2xz2")))
    with pytest.raises(BudgetExceededError):
        list(enumerate_pairs(EnumerationTask("z8", max_pairs=10)))
    with pytest.raises(PreconditionError):
        EnumerationTask("z5", dedup="orbits")


def test_record_key_order():
    rec = next(iter(enumerate_pairs(EnumerationTask("z3", r=-1))))
    keys = list(json.loads(records_to_jsonl([rec])))
    assert keys == ["group", "A", "B", "sumset_size", "r", "outcome", "type", "type_chain", "verified", "failures", "certificate"]


def test_classify_one():
    rec, lines = classify_one("z7", "{0,1,3}", "{1,2,3,5}")
    assert rec.type_label == "IV" and rec.verified
    assert lines[-1] == "verified"
    rec, lines = classify_one("z7", "{0,1,3}", "{0,1,3}")
    assert rec.type_label == "Extendible16+VI"
    assert "structured matches: VI" in lines
    with pytest.raises(ParseError):
        classify_one("z7", "{0,1", "{0}")
    with pytest.raises(PreconditionError):
        classify_one("z7", "{}", "{0}")
