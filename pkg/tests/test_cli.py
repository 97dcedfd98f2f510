"""Command-line interface, run in process via main(argv)."""

import json
from pathlib import Path

import pytest

import holoscreen.cli as cli
from holoscreen._kernel import BACKEND_NAME, HAVE_COMPILED
from holoscreen.cli import main
from holoscreen.corpus import construct, save_group, write_index
from holoscreen.screening import ScreenReport

CORPORA = Path(__file__).resolve().parent.parent / "corpora"


def run(argv, capsys):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_version():
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0


def test_no_command_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_group_aut(capsys):
    code, out, _ = run(["group", "aut", CORPORA / "o4" / "c2c2.grp"], capsys)
    assert code == 0
    assert "|Aut| = 6" in out
    assert "inner = 1, outer = 6" in out
    assert "Aut solvable: yes" in out


def test_group_hol(capsys):
    code, out, _ = run(["group", "hol", CORPORA / "o5" / "c5.grp"], capsys)
    assert code == 0
    assert "|Hol| = 20 (= 5 * 4)" in out
    assert "Hol solvable: yes" in out


def test_group_regulars(capsys):
    code, out, _ = run(["group", "regulars", CORPORA / "o4" / "c4.grp"],
                       capsys)
    assert code == 0
    assert "|Hol| = 8" in out
    assert "regular subgroups: 2 (complete" in out
    # One class is cyclic, one is the Klein four group.
    assert "element orders 1^1 2^1 4^2" in out
    assert "element orders 1^1 2^3" in out


def test_group_regulars_budget_exhausted(capsys):
    code, out, _ = run(["group", "regulars", "cyclic(8)", "--budget", "3"],
                       capsys)
    assert code == 3
    assert "search budget exhausted" in out


def test_group_info_expression(capsys):
    code, out, _ = run(["group", "info", "cyclic(6)"], capsys)
    assert code == 0
    assert "order 6" in out
    assert "abelian: yes" in out
    assert "nilpotent: yes" in out
    assert "element order spectrum: 1^1 2^1 3^2 6^2" in out


def test_group_bad_path(capsys):
    code, out, err = run(["group", "info", "no-such-file.grp"], capsys)
    assert code == 1
    assert not out
    assert err.startswith("error:")


def test_screen_order_60(capsys):
    code, out, _ = run(["screen", "--order", 60, "--corpus", CORPORA / "o60",
                        "--jobs", 1], capsys)
    assert code == 0
    assert "verdict: holds" in out
    assert "screen: order 60" in out


def test_screen_writes_reports(tmp_path, capsys):
    text = tmp_path / "report.txt"
    doc = tmp_path / "report.json"
    code, out, _ = run(["screen", "--corpus", CORPORA / "o4", "--jobs", 1,
                        "--out", text, "--json", doc], capsys)
    assert code == 0
    assert text.read_text() == out
    parsed = json.loads(doc.read_text())
    assert parsed["schema"] == "holoscreen.screen/1"
    assert parsed["verdict"] == "holds"


def test_screen_incomplete_corpus_is_an_error(capsys):
    code, out, err = run(["screen", "--corpus", CORPORA / "o120"], capsys)
    assert code == 1
    assert "completeness" in err


def test_screen_conditional_exit_code(monkeypatch, capsys):
    report = ScreenReport(
        n=60, corpus_dir="fake", corpus_hash="0" * 64, complete=True,
        solvable_number=False, insolvable_names=("a5",), order_sets=None,
        traces=(), skip_outer=False, verdict="holds-conditional-on(30)")
    monkeypatch.setattr(cli, "screen_order", lambda *a, **k: report)
    code, out, _ = run(["screen", "--corpus", "fake"], capsys)
    assert code == 2
    assert "verdict: holds-conditional-on(30)" in out


def test_screen_undecided_exit_code(monkeypatch, capsys):
    report = ScreenReport(
        n=60, corpus_dir="fake", corpus_hash="0" * 64, complete=True,
        solvable_number=False, insolvable_names=("a5",), order_sets=None,
        traces=(), skip_outer=False, verdict="undecided",
        problems=("subgroup enumeration for a5: cap",))
    monkeypatch.setattr(cli, "screen_order", lambda *a, **k: report)
    code, out, _ = run(["screen", "--corpus", "fake"], capsys)
    assert code == 3
    assert "verdict: undecided" in out


def test_screen_bad_jobs(capsys):
    code, _, err = run(["screen", "--corpus", CORPORA / "o4", "--jobs", 0],
                       capsys)
    assert code == 1
    assert "jobs" in err


def test_direct_order_4(capsys):
    code, out, _ = run(["direct", "--corpus", CORPORA / "o4"], capsys)
    assert code == 0
    assert "direct check: order 4" in out
    assert "verdict: holds" in out
    assert out.count("insolvable=0") == 2
    assert "exhausted" not in out


def test_direct_backend_selection(capsys):
    code, out, _ = run(["direct", "--corpus", CORPORA / "o4", "--backend",
                        "pure"], capsys)
    assert code == 0
    assert "(kernel backend: pure)" in out
    code, out, _ = run(["direct", "--corpus", CORPORA / "o4"], capsys)
    assert f"(kernel backend: {BACKEND_NAME})" in out
    if HAVE_COMPILED:
        code, out, _ = run(["direct", "--corpus", CORPORA / "o4",
                            "--backend", "compiled"], capsys)
        assert code == 0
        assert "(kernel backend: compiled)" in out


def test_direct_incomplete_corpus_is_undecided(capsys):
    code, out, _ = run(["direct", "--corpus", CORPORA / "o120"], capsys)
    assert code == 3
    assert out.count("skipped (insolvable") == 3
    assert "does not claim completeness" in out
    assert "verdict: undecided" in out


def test_direct_budget_exhaustion_is_undecided(capsys):
    code, out, _ = run(["direct", "--corpus", CORPORA / "o4", "--budget", 2],
                       capsys)
    assert code == 3
    assert "search budget exhausted" in out
    assert "verdict: undecided" in out


def test_direct_json(tmp_path, capsys):
    doc = tmp_path / "direct.json"
    code, out, _ = run(["direct", "--corpus", CORPORA / "o4", "--json", doc],
                       capsys)
    assert code == 0
    parsed = json.loads(doc.read_text())
    assert parsed["schema"] == "holoscreen.direct/1"
    assert parsed["order"] == 4
    assert parsed["verdict"] == "holds"
    assert [g["name"] for g in parsed["groups"]] == ["c4", "c2c2"]
    for g in parsed["groups"]:
        assert g["insolvable_count"] == 0
        assert g["exhausted"] is False


def test_direct_wrong_order(capsys):
    code, _, err = run(["direct", "--order", 8, "--corpus", CORPORA / "o4"],
                       capsys)
    assert code == 1
    assert "corpus has order 4" in err


def test_classify_family_member(capsys):
    code, out, _ = run(["classify", "1920"], capsys)
    assert code == 0
    assert "doubling family: 2^5 * 60" in out
    assert "verdict: doubling-family" in out


def test_classify_trivial_solvable(capsys):
    code, out, _ = run(["classify", "30"], capsys)
    assert code == 0
    assert "solvable number: yes" in out
    assert "verdict: trivial-solvable" in out


def test_classify_needs_screening(capsys):
    code, out, _ = run(["classify", "1008"], capsys)
    assert code == 3
    assert "verdict: needs-screening" in out


def test_numtheory_wieferich(capsys):
    code, out, _ = run(["numtheory", "wieferich", "--limit", 10000], capsys)
    assert code == 0
    assert out.strip() == "1093 3511"
    code, out, _ = run(["numtheory", "wieferich", "--limit", 100], capsys)
    assert code == 0
    assert out.strip() == "none"


def test_numtheory_suzuki(capsys):
    code, out, _ = run(["numtheory", "suzuki", "--ell", 3], capsys)
    assert code == 0
    assert out.strip() == "29120"


def test_numtheory_base_check(capsys):
    code, out, _ = run(["numtheory", "base-check", "--ell", 3], capsys)
    assert code == 0
    assert out.strip() == "eligible: base order 29120"
    code, out, _ = run(["numtheory", "base-check", "--ell", 5], capsys)
    assert code == 0
    assert out.strip() == "ineligible: 5^2 divides 4^5+1"
    code, out, _ = run(["numtheory", "base-check", "--ell", 9], capsys)
    assert code == 0
    assert out.strip() == "ineligible: 9 is not prime"


def test_numtheory_solvable(capsys):
    code, out, _ = run(["numtheory", "solvable", 30], capsys)
    assert code == 0
    assert out.strip() == "30 is a solvable number"
    code, out, _ = run(["numtheory", "solvable", 60], capsys)
    assert code == 0
    assert "divisible by the simple group order 60" in out


def test_numtheory_conditions(capsys):
    code, out, _ = run(["numtheory", "conditions", "--n0", 60], capsys)
    assert code == 0
    assert "all hold: yes" in out
    code, out, _ = run(["numtheory", "conditions", "--n0", 360], capsys)
    assert code == 0
    assert "failure: 360/2 = 180 is not a solvable number" in out
    assert "all hold: no" in out


def test_corpus_validate_ok(capsys):
    code, out, _ = run(["corpus", "validate", CORPORA / "o60"], capsys)
    assert code == 0
    assert "order 60, 13 groups, complete=yes" in out
    assert "result: ok" in out


def test_corpus_validate_lax(capsys):
    code, out, _ = run(["corpus", "validate", CORPORA / "o60", "--lax"],
                       capsys)
    assert code == 0
    assert "result: ok" in out


def test_corpus_validate_failure(tmp_path, capsys):
    save_group(construct("cyclic(6)", name="c6"), tmp_path / "c6.grp")
    save_group(construct("abelian(2,3)", name="c6b"), tmp_path / "c6b.grp")
    write_index(tmp_path, 6, False, ["c6.grp", "c6b.grp"])
    code, out, _ = run(["corpus", "validate", tmp_path], capsys)
    assert code == 1
    assert "error: c6.grp and c6b.grp are isomorphic" in out
    assert "result: failed" in out


def test_corpus_validate_missing_directory(tmp_path, capsys):
    code, out, _ = run(["corpus", "validate", tmp_path / "nowhere"], capsys)
    assert code == 1
    assert "result: failed" in out
