"""
Unit tests for bdsa.cli

Each test runs ``main`` inside a scratch directory so no config, .env or
log file from the checkout leaks in.
"""

import json

import pytest

import bdsa.cli as cli
from bdsa.errors import CrossCheckMismatch
from bdsa.instance_io import parse_instance
from bdsa.topograph import INFINITY_NODE


@pytest.fixture
def write(tmp_path, monkeypatch, fixture_texts):
    """Write fixture ``name`` (plus any extra lines) and return its path."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("BDSA_NO_COLOR", "1")
    monkeypatch.delenv("BDSA_MAX_ATOMS", raising=False)

    def make(name, extra=""):
        path = tmp_path / f"{name}.bds"
        path.write_text(fixture_texts.get(name, "") + extra, encoding="utf-8")
        return str(path)

    return make


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---------- validate / check ------------------------------------------------


def test_validate(write, capsys):
    code, out, _ = run(capsys, "validate", write("f3"))
    assert code == 0
    assert out.strip() == "valid: 2 atoms, 1 labels"


def test_validate_reports_line(write, capsys):
    path = write("bad", "atoms a\nlabels x\nact x c = {a}\n")
    code, out, err = run(capsys, "validate", path)
    assert code == 2
    assert out == ""
    assert err.strip() == "line 3: UnknownAtom c"


def test_missing_file(write, capsys):
    write("f1")
    code, _, err = run(capsys, "validate", "nowhere.bds")
    assert code == 2
    assert err.startswith("FileNotFoundError")


def test_check_condition_L_fails_with_witness(write, capsys):
    code, out, _ = run(capsys, "check", write("f1"))
    assert code == 0
    assert out.strip() == "Condition (L): FAILS; cycle word=x base=a"


@pytest.mark.parametrize("method", ["main", "all"])
def test_check_condition_L_holds(write, capsys, method):
    code, out, _ = run(capsys, "check", "--property", "l", "--method", method, write("f5"))
    assert code == 0
    assert out.strip() == "Condition (L): HOLDS"


def test_check_condition_K(write, capsys):
    code, out, _ = run(capsys, "check", "--property", "k", "--method", "all", write("f5"))
    assert code == 0
    assert out.strip() == "Condition (K): FAILS"


def test_check_minimal_all(write, capsys):
    code, out, _ = run(capsys, "check", "--property", "minimal", "--method", "all", write("f4"))
    assert code == 0
    assert out.strip() == "minimal: NO (saturated hereditary ideal top={a})"


def test_check_simple(write, capsys):
    code, out, _ = run(capsys, "check", "--property", "simple", write("f5"))
    assert code == 0
    assert out.strip() == "simple: NO (not minimal; saturated hereditary ideal top={b})"


def test_check_simple_relative_j_is_refused(write, capsys):
    code, _, err = run(capsys, "check", "--property", "simple", write("f1", "J = {}\n"))
    assert code == 2
    assert err.startswith("RelativeJNotSupported")


def test_mismatch_exit_code(write, capsys, monkeypatch):
    def disagree(inst, route="all"):
        raise CrossCheckMismatch("Condition (K)", {"quotient-L": True, "direct": False})

    monkeypatch.setattr(cli, "check_condition_K", disagree)
    code, _, err = run(capsys, "check", "--property", "k", write("f2"))
    assert code == 3
    assert "CrossCheckMismatch Condition (K): quotient-L=True, direct=False" in err


# ---------- listings --------------------------------------------------------


def test_ideals(write, capsys):
    code, out, _ = run(capsys, "ideals", write("f5"))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "{} hereditary=True saturated=True jSaturated=True"
    assert lines[-1] == "3 saturated hereditary ideals"


def test_ideals_atom_cap(write, capsys, monkeypatch):
    path = write("f5")
    monkeypatch.setenv("BDSA_MAX_ATOMS", "1")
    code, _, err = run(capsys, "ideals", path)
    assert code == 2
    assert err.startswith("TooLarge")


def test_gauge_ideals(write, capsys):
    code, out, _ = run(capsys, "gauge-ideals", write("f1", "J = {}\n"))
    assert code == 0
    assert out.strip().splitlines() == [
        "H={} S={}",
        "H={} S={a}",
        "H={a} S={a}",
        "3 gauge-invariant ideals",
    ]


def test_tails(write, capsys):
    code, out, _ = run(capsys, "tails", write("f5"))
    assert code == 0
    assert out.strip().splitlines() == [
        "D={} cyclic=False",
        "D={b} cyclic=True base=a beta=x",
        "2 maximal tails",
    ]


# ---------- graph -----------------------------------------------------------


def test_graph_summary(write, capsys):
    code, out, _ = run(capsys, "graph", write("f1"))
    assert code == 0
    assert out.strip().splitlines() == [
        "vertices: 1; edges: 1; dom(r): 1",
        "sources: {}; regular: {a}",
        "loops without entrances: 1",
    ]


def test_graph_dot_to_stdout(write, capsys):
    code, out, _ = run(capsys, "graph", "--dot", "-", write("f3", "ideal x = {a,b}\n"))
    assert code == 0
    assert out.startswith("digraph bds {")
    assert INFINITY_NODE in out


def test_graph_dot_to_file(write, capsys, tmp_path):
    dot = tmp_path / "f5.dot"
    code, out, _ = run(capsys, "graph", "--dot", str(dot), write("f5"))
    assert code == 0
    assert '"b" -> "a" [label="y"];' in dot.read_text(encoding="utf-8")
    assert out.startswith("vertices: 2")


# ---------- transformations -------------------------------------------------


def test_quotient(write, capsys):
    code, out, _ = run(capsys, "quotient", "--top", "{b}", write("f5"))
    assert code == 0
    q = parse_instance(out)
    assert q.universe.names == ("a",)
    assert q.j_top == 0b1


def test_quotient_needs_hereditary_ideal(write, capsys):
    code, _, err = run(capsys, "quotient", "--top", "{a}", write("f5"))
    assert code == 2
    assert err.startswith("NotHereditary")


def test_bprime(write, capsys):
    code, out, _ = run(capsys, "bprime", write("f1", "J = {}\n"))
    assert code == 0
    assert "# a: pair a" in out
    assert "# a_j: defect a" in out
    assert parse_instance(out).universe.names == ("a", "a_j")


# ---------- report ----------------------------------------------------------


def test_report_json(write, capsys):
    code, out, _ = run(capsys, "report", "--json", write("f2"))
    assert code == 0
    data = json.loads(out)
    assert data["counts"]["satHereditaryIdeals"] == 2
    assert data["verdicts"]["simple"] is True


def test_report_text(write, capsys):
    code, out, _ = run(capsys, "report", write("f1", "J = {}\n"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Condition (L): FAILS"
    assert lines[3].startswith("simple: n/a (RelativeJNotSupported")


# ---------- gen / crosscheck ------------------------------------------------


def test_gen_is_reproducible(write, capsys):
    write("f1")
    code, first, _ = run(capsys, "gen", "--seed", "7", "--atoms", "4")
    _, second, _ = run(capsys, "gen", "--seed", "7", "--atoms", "4")
    assert code == 0
    assert first == second
    assert first.startswith("# seed 7\n")
    assert parse_instance(first).n == 4


def test_gen_rejects_bad_params(write, capsys):
    write("f1")
    code, _, _ = run(capsys, "gen", "--seed", "1", "--atoms", "9")
    assert code == 2


def test_crosscheck_small_corpus(write, capsys):
    write("f1")
    code, out, _ = run(capsys, "crosscheck", "--seed", "1", "--count", "3", "--digraphs", "2")
    assert code == 0
    assert out.strip().splitlines()[-1] == "5/5 consistent"


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("bdsa ")
