import json
from pathlib import Path

import pytest

from critpairs import cli

GOLDEN = Path(__file__).parent / "golden"


def test_help_lists_subcommands():
    text = cli.build_parser().format_help()
    for cmd in ("classify", "enumerate", "verify", "bounds", "dual"):
        assert cmd in text


def test_classify_type_iv(capsys):
    assert cli.main(["classify", "z7", "{0,1,3}", "{1,2,3,5}"]) == 0
    out = capsys.readouterr().out
    assert "outcome KST: IV" in out
    assert '"type": "IV"' in out


def test_classify_json(capsys):
    assert cli.main(["classify", "z7", "{0,1,3}", "{0,1,3}", "--json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["outcome"] == "Beyond" and rec["type"] == "Extendible16+VI" and rec["verified"]


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "z7", "{0,1,", "{1}"],
        ["classify", "z7", "{0,9}", "{1}"],
        ["classify", "q7", "{0}", "{1}"],
        ["bounds", "z7", "{0,1,2}", "{0,1}", "{}", "1"],
        ["dual", "z7", "{0,1}", "{0,2}"],
        ["enumerate", "z2xz2xz2xz2xz2"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert cli.main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["enumerate", "z5", "--format", "xml"])
    assert exc.value.code == 2


def test_enumerate_matches_golden(tmp_path):
    out = tmp_path / "z5.jsonl"
    assert cli.main(["enumerate", "z5", "--r", "-1", "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "z5_r-1.jsonl").read_bytes()
    csv_out = tmp_path / "z5.csv"
    assert cli.main(["enumerate", "z5", "--r", "-1", "--format", "csv", "--out", str(csv_out)]) == 0
    assert csv_out.read_bytes() == (GOLDEN / "z5_r-1.csv").read_bytes()


def test_enumerate_deterministic_across_workers(tmp_path):
    paths = []
    for w in (1, 2):
        p = tmp_path / f"w{w}.jsonl"
        assert cli.main(["enumerate", "z2xz4", "--r", "0", "--workers", str(w), "--out", str(p)]) == 0
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_enumerate_io_error_exit_3(tmp_path):
    assert cli.main(["enumerate", "z5", "--out", str(tmp_path / "missing" / "x.jsonl")]) == 3


def test_enumerate_with_config(tmp_path, capsys):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[budget]\nmax_order = 4\n")
    assert cli.main(["enumerate", "z5", "--config", str(cfg)]) == 2
    assert cli.main(["enumerate", "z5", "--config", str(tmp_path / "nope.ini")]) == 3
    cfg.write_text("[run]\nworkers = 2\ndedup = translations+automorphisms\n")
    assert cli.main(["enumerate", "z5", "--r", "-1", "--config", str(cfg)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert 0 < len(lines) < 27


def test_verify_subcommand(capsys):
    assert cli.main(["verify", "z5", "z6", "--suite", "kneser", "--suite", "kst"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "kneser" in out
    assert cli.main(["verify", "z4", "--suite", "lemmas", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["ok"] and any(s["status"] == "VACUOUS" for s in rep["statements"])


def test_bounds_subcommand(capsys):
    assert cli.main(["bounds", "z7", "{0,1,3}", "{0,1,3}", "{0}", "1"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["bound_iii"] == "6/1" and rep["M"] == 6 and rep["actual_sumset"] == 6


def test_dual_subcommand(capsys):
    assert cli.main(["dual", "z8", "{0,1}", "{0,3}"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["excess"] == 0
    assert rep["first"] == [[0, 7], [2, 5, 6, 7]]
