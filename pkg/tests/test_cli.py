import json
import subprocess
import sys

import pytest

from hermqc.cli import main, trial_rng


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_ex3_flags(capsys, tmp_path):
    out_file = tmp_path / "v.jsonl"
    code, out, _ = run(capsys, "verify", "--fixture", "ex3", "--no-bound", "--budget-secs", "20",
                       "--out", str(out_file))
    assert code == 0
    assert "check_dual_containing_direct   true" in out
    assert "check_thm_main                 false" in out
    rec = json.loads(out_file.read_text().splitlines()[0])
    assert rec["dim"] == 56 and rec["length"] == 70
    assert rec["check_prop_dims"] is False
    assert rec["thm_extended_divisibility"] is True
    assert rec["check_dual_containing_direct"] is True
    assert rec["dual_containing_route"] == "computed-dual"
    assert "timestamp" not in rec


def test_verify_supplied_distance(capsys, tmp_path):
    out_file = tmp_path / "v.jsonl"
    code, out, _ = run(capsys, "verify", "--fixture", "ex1", "--d", "9", "--no-bound", "--no-distance",
                       "--out", str(out_file), "--timestamp")
    assert code == 0
    assert "[[82,42,9]]_2" in out
    rec = json.loads(out_file.read_text())
    assert rec["quantum"]["params"] == "[[82,42,9]]_2"
    assert rec["quantum"]["gv"]["beats"] is True
    assert "timestamp" in rec


def test_verify_explicit_strings(capsys):
    code, out, _ = run(capsys, "verify", "--q2", "9", "--n", "5", "--g1", "1", "--g2", "1", "--t", "0",
                       "--no-bound")
    assert code == 0
    assert "dim = 10" in out
    assert "minimum distance               1" in out


def test_verify_generators_from_defining_sets(capsys):
    code, out, _ = run(capsys, "verify", "--q2", "4", "--n", "41", "--t1", "1", "--t2", "3",
                       "--t", "0", "--no-bound", "--no-distance")
    assert "g1 = 10320102301" in out
    assert "g2 = 12^{3}1312^{3}1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--q2", "4", "--n", "5", "--g1", "1", "--g2", "1", "--t", "12X"],
        ["verify", "--q2", "6", "--n", "5", "--g1", "1", "--g2", "1", "--t", "0"],
        ["verify", "--q2", "4", "--n", "5", "--g1", "101", "--g2", "1", "--t", "0"],
        ["verify", "--fixture", "nope"],
        ["search", "--fixture", "T2.1", "--trials", "0"],
        ["gv", "--q", "2", "--n", "2", "--k", "0", "--d", "2"],
        ["cosets", "--q2", "4", "--n", "4"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_search_is_deterministic_across_workers(capsys, tmp_path):
    a, b, c = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    base = ["search", "--fixture", "T2.1", "--seed", "7", "--trials", "60", "--criterion", "direct"]
    assert run(capsys, *base, "--out", str(a))[0] == 0
    assert run(capsys, *base, "--out", str(b))[0] == 0
    assert run(capsys, *base, "--out", str(c), "--workers", "3")[0] == 0
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()
    lines = a.read_text().splitlines()
    summary = json.loads(lines[-1])["summary"]
    assert summary["trials"] == 60 and summary["survivors"] == len(lines) - 1
    trials = [json.loads(x)["trial"] for x in lines[:-1]]
    assert trials == sorted(trials)


def test_search_inject_and_weight(capsys, tmp_path, fixtures):
    out = tmp_path / "s"
    t = fixtures["T2.1"].t
    code, _, _ = run(capsys, "search", "--fixture", "T2.1", "--trials", "3", "--criterion", "direct",
                     "--inject-t", t, "--t-weight", "2", "--out", str(out))
    assert code == 0
    first = json.loads(out.read_text().splitlines()[0])
    assert first["trial"] == 0 and first["t"] == "".join(t.split())
    for line in out.read_text().splitlines()[1:-1]:
        rec = json.loads(line)
        assert sum(ch != "0" for ch in rec["t"].replace("^", "").replace("{", "").replace("}", "")) >= 1


def test_trial_rng_is_counter_based():
    a = trial_rng(42, 5).integers(0, 1000, 10)
    b = trial_rng(42, 5).integers(0, 1000, 10)
    c = trial_rng(42, 6).integers(0, 1000, 10)
    assert (a == b).all() and not (a == c).all()


def test_cosets_output(capsys):
    code, out, _ = run(capsys, "cosets", "--q2", "4", "--n", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("C0: {0}")
    assert any(line.startswith("C1: {1, 4}") for line in lines)
    for line in lines:
        assert line.endswith("symmetric") or "partner=C" in line


def test_cosets_defining_set_verdict(capsys):
    code, out, _ = run(capsys, "cosets", "--q2", "4", "--n", "41", "--t1", "1")
    assert "Hermitian dual-containing" in out
    assert code in (0, 1)


def test_gv_command(capsys):
    code, out, _ = run(capsys, "gv", "--q", "2", "--n", "82", "--k", "42", "--d", "9")
    assert code == 0
    assert "beats GV: true" in out
    code, out, _ = run(capsys, "gv", "--q", "2", "--n", "3", "--k", "0", "--d", "3")
    assert code == 0 and "vacuous" in out


def test_bound_fixture(capsys):
    code, out, _ = run(capsys, "bound", "--fixture", "T2.1")
    assert code == 0
    assert "lower bound" in out


def test_tables_subset(capsys, tmp_path):
    out = tmp_path / "t.jsonl"
    code, text, _ = run(capsys, "tables", "--rows", "T2.1,T4.1,T1.1,T1.3", "--out", str(out))
    assert code == 0
    assert text.count("PASS") == 4
    recs = [json.loads(x) for x in out.read_text().splitlines()]
    steps = {r["id"]: r.get("propagation_steps") for r in recs if r.get("id", "").startswith("T1")}
    assert steps["T1.1"] == 1 and steps["T1.3"] == 3


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "hermqc.cli", "gv", "--q", "3", "--n", "10", "--k", "4",
                          "--d", "4"], capture_output=True, text=True)
    assert res.returncode == 0 and "k_GV" in res.stdout
