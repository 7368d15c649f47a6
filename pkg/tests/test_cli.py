import io
import subprocess
import sys

import pytest

from lpequiv.cli import run
from lpequiv.seqops import parse_pair


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_verify():
    assert call("verify", "--pair", "-+-:-+-") == (0, "LP\n")
    code, text = call("verify", "--pair", "+++:+++")
    assert code == 0 and text.startswith("NOT-LP: j=1")


def test_paf_plain_and_fast():
    assert call("paf", "--seq", "-++-+--") == (0, "7,-1,-1,-1,-1,-1,-1\n")
    assert call("paf", "--seq", "-++-+--", "--fast") == (0, "7,-1,-1,-1,-1,-1,-1\n")
    assert call("paf", "--seq", "1,2,3") == (0, "14,11,11\n")


def test_shift_and_decimate():
    assert call("shift", "--seq", "1,2,3", "--by", "1") == (0, "3,1,2\n")
    assert call("decimate", "--seq", "1,2,3,4,5", "--by", "2") == (0, "1,4,2,5,3\n")
    assert call("shift", "--seq", "+--", "--by", "1") == (0, "-+-\n")


def test_orbit_and_members():
    assert call("orbit", "--pair", "-+-:-+-") == (0, "--+:--+\t9\t8\n")
    code, text = call("orbit", "--pair", "-+-:-+-", "--members")
    lines = text.splitlines()
    assert len(lines) == 10 and lines[1] == "--+:--+"


def test_canon_fixed_point():
    _, first = call("canon", "--pair", "+-+:-++")
    _, second = call("canon", "--pair", first.strip())
    assert first == second == "-++:-++\n"


def test_equiv():
    assert call("equiv", "--pair", "-+-:-+-", "--pair", "--+:+--") == (0, "EQUIVALENT\n")
    assert call("equiv", "--pair", "-+-:-+-", "--pair", "+++:+++") == (0, "INEQUIVALENT\n")


def test_search_and_count(capsys):
    code, text = call("search", "--ell", "3")
    assert code == 0 and len(text.splitlines()) == 18
    assert "-+-:-+-" in text.splitlines()
    assert call("search", "--ell", "5", "--count-only") == (0, "100\n")
    assert call("search", "--ell", "7", "--canonical-only") == (0, "---+-++:---+-++\n--+-+++:--+-+++\n")
    assert call("search", "--ell", "4") == (0, "")
    assert "even" in capsys.readouterr().err


def test_classify_and_file(tmp_path):
    code, text = call("classify", "--ell", "3")
    assert code == 0
    assert text.splitlines()[0] == "3\t18\t2"
    target = tmp_path / "c5.tsv"
    assert call("classify", "--ell", "5", "--out", str(target)) == (0, "")
    assert target.read_text().startswith("5\t100\t2\n")


def test_classified_reps_are_inequivalent_and_round_trip():
    _, text = call("classify", "--ell", "7")
    reps = [ln.split("\t")[0] for ln in text.splitlines()[1:]]
    for r in reps:
        assert str(parse_pair(r)) == r
    assert call("equiv", "--pair", reps[0], "--pair", reps[1]) == (0, "INEQUIVALENT\n")


def test_group_check():
    code, text = call("group-check", "--ell", "3")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 10 and all(ln.split("\t")[2] == "PASS" for ln in lines)
    code, text = call("group-check", "--ell", "5", "--claims", "d-iso,RELATIONS")
    assert code == 0 and [ln.split("\t")[0] for ln in text.splitlines()] == ["D-ISO", "RELATIONS"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--pair", "+x+:+++"],
        ["verify", "--pair", "++:+++"],
        ["verify", "--pair", "+++"],
        ["verify", "--pair", "1,2:1,1"],
        ["equiv", "--pair", "+-+:+-+"],
        ["equiv", "--pair", "+-+:+-+", "--pair", "++:++"],
        ["search", "--ell", "0"],
        ["search"],
        ["group-check", "--ell", "3", "--claims", "BOGUS"],
        ["decimate", "--seq", "1,2,3,4", "--by", "2"],
        ["frobnicate"],
    ],
)
def test_errors_exit_2(argv, capsys):
    code, _ = call(*argv)
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lpequiv", "verify", "--pair", "-++-+--:-++-+--"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "LP\n"
