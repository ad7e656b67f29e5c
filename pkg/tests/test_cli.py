import io
import json
import subprocess
import sys

import pytest

from pbnf import cli

TABLE_NORMAL = """\
OP       g(p,q,1)
p        p
p'       p+1
q        q
q'       q+1
¬p       p+1
p ∨ q    pq+p+q
p ∧ q    pq
p ⇒ q    pq+p+1
p ⇏ q    pq+p
¬p ⇒ ¬q  pq+q+1
p ⇐ q    pq+q+1
p ⇍ q    pq+q
¬p ⇐ ¬q  pq+p+1
p ↓ q    pq+p+q+1
p ↑ q    pq+1
p ⇔ q    p+q+1
p | q    p+q
ι₁       1
ι₀       0
"""


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--format", "json")
    assert code == 0
    return [json.loads(line) for line in out.splitlines()]


@pytest.mark.parametrize("argv,expected", [
    (["anf", "p -> q"], "pq+p+1"),
    (["anf", "p -> q", "--family", "g(p',q',0)"], "pq+q"),
    (["taut", "p & (p -> q) -> q"], "tautology; polynomial 1"),
    (["contra", "p & !p"], "contradiction; polynomial 0"),
    (["taut", "p"], "contingent; polynomial p; falsified by p=0; satisfied by p=1"),
    (["equiv", "p -> q", "!q -> !p"], "equivalent; polynomial pq+p+1"),
    (["equiv", "p -> q", "q -> p"], "not equivalent; left pq+p+1; right pq+q+1; difference p+q"),
    (["entails", "p", "p | q"], "entails; certificate p"),
    (["entails", "p | q", "p"], "does not entail; countermodel p=0, q=1"),
    (["entails", "T", "F"], "does not entail; countermodel any assignment"),
    (["pullback", "p+q+1"], "<->"),
    (["pullback", "pq+1"], "nand"),
    (["pullback", "pq+pr+qr"], "11101000 (majority)"),
    (["pullback", "p+1", "--letters", "p"], "¬"),
    (["pullback", "pr"], "&"),
    (["dbnf", "p <-> q"], "p & q | !p & !q"),
    (["dbnf", "p & !p"], "F  (no true columns: empty disjunction)"),
    (["dbnf", "p", "--letters", "p,q"], "p & q | p & !q"),
    (["matrix", "--op", "<->"], "[1 0 / 0 1]  det 1  idempotent"),
    (["matrix", "--op", "nand"], "[0 1 / 1 1]  det 1  not idempotent"),
    (["selectors", "--add", "p1", "q1"], "p2(0110)"),
    (["selectors", "--add", "p1", "p3"], "constant(1111)"),
    (["selectors", "--apply", "imp", "p3", "q2"], "1101 (<-)"),
    (["dual", "--op", "<->"], "^"),
    (["dual", "--op", "&"], "|"),
])
def test_text_output(argv, expected):
    code, out, err = run(*argv)
    assert code == 0, err
    assert out == expected + "\n"


def test_truth_table_text():
    code, out, _ = run("tt", "p -> q")
    assert code == 0
    assert out.splitlines() == ["p q | value", "1 1 | 1", "1 0 | 0", "0 1 | 1", "0 0 | 1"]


def test_table_golden():
    assert run("table") == (0, TABLE_NORMAL, "")
    code, out, _ = run("table", "--family", "complement")
    assert out.splitlines()[0].endswith("g(p,q,0)")
    assert out.splitlines()[-1].split() == ["ι₀", "1"]


def test_multiline_reports():
    code, out, _ = run("matrix", "--classify")
    assert "claimed but not idempotent: ↑" in out and "closed under + * T: no" in out
    code, out, _ = run("matrix", "--generate")
    assert "identity ok" in out
    code, out, _ = run("conjugates", "p -> q")
    assert out.splitlines()[-1].endswith("yes")
    assert all(line == line.rstrip() for line in out.splitlines())
    code, out, _ = run("selectors")
    assert out.splitlines() == ["p1(1100)", "p2(0110)", "p3(0011)", "p4(1001)", "q1(1010)", "q2(0101)"]


def test_json_output():
    assert run_json("anf", "p & q") == [{"formula": "p & q", "family": "g(p,q,1)", "polynomial": "pq",
                                         "monomials": [["p", "q"]]}]
    assert run_json("taut", "p")[0]["witness"] == {"p": 0}
    assert run_json("equiv", "p", "p")[0]["equivalent"] is True
    assert run_json("entails", "p | q", "p")[0]["countermodel"] == {"p": 0, "q": 1}
    assert run_json("pullback", "p+q")[0]["operator"] == "exclusive disjunction"
    assert run_json("dbnf", "p ^ q")[0]["bits"] == "0110"
    assert run_json("tt", "p")[0]["rows"] == [{"assignment": {"p": 1}, "value": 1},
                                             {"assignment": {"p": 0}, "value": 0}]
    rows = run_json("table", "--family", "H**")
    assert len(rows) == 19 and rows[0] == {"family": "g(p',q',0)", "row": "p", "polynomial": "p"}
    assert run_json("conjugates", "p -> q")[0]["pairingsHold"] is True
    assert run_json("matrix", "--op", "&")[0]["idempotent"] is True
    assert run_json("matrix", "--classify")[0]["idempotentNotClaimed"] == ["↓"]
    assert run_json("matrix", "--generate")[0]["complete"] is True
    assert run_json("selectors", "--add", "p1", "p3")[0] == {"sum": "1111", "selector": None, "valid": False}
    assert len(run_json("selectors")) == 6
    assert run_json("dual", "--op=->")[0]["dual"] == "converse non-implication"


@pytest.mark.parametrize("argv,code", [
    (["taut", "p", "--check"], 1),
    (["taut", "p | !p", "--check"], 0),
    (["contra", "p", "--check"], 1),
    (["contra", "p & !p", "--check"], 0),
    (["equiv", "p", "q", "--check"], 1),
    (["entails", "p | q", "p", "--check"], 1),
    (["entails", "p", "p | q", "--check"], 0),
])
def test_check_exit_codes(argv, code):
    assert run(*argv)[0] == code


@pytest.mark.parametrize("argv,fragment", [
    (["anf", "p &"], "end of input"),
    (["anf", "p", "--family", "g(p,q,2)"], "reading"),
    (["pullback", "p +"], "pbnf: error"),
    (["pullback", "pr", "--letters", "p,q"], "r"),
    (["matrix"], "needs --op"),
    (["matrix", "--op", "negation"], "not a binary"),
    (["dual", "--op", "xyzzy"], "xyzzy"),
    (["selectors", "--add", "p1", "1111"], "pbnf: error"),
])
def test_error_exit_codes(argv, fragment):
    code, out, err = run(*argv)
    assert code == 2 and out == ""
    assert fragment in err


def test_usage_errors(capsys):
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2
    assert run("anf", "p", "--format", "xml")[0] == 2
    assert "usage" in capsys.readouterr().err


def test_letter_cap(monkeypatch):
    monkeypatch.setenv("PBNF_MAX_LETTERS", "2")
    code, _, err = run("tt", "p & q & r")
    assert code == 2 and "PBNF_MAX_LETTERS" in err
    assert run("tt", "p & q")[0] == 0
    monkeypatch.setenv("PBNF_MAX_LETTERS", "lots")
    assert run("dbnf", "p")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pbnf", "anf", "p <-> q"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "p+q+1\n"
