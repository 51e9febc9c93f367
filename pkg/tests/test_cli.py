import json
import subprocess
import sys
from collections import Counter
from fractions import Fraction

import pytest

from hspecies.algebras import DQSYM
from hspecies.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def text_terms(line):
    """Parse ``c*[x] + [y]`` text output into a multiset of terms."""
    terms = Counter()
    line = line.strip().replace(" - ", " + -")
    for chunk in line.split(" + "):
        coeff, _, label = chunk.rpartition("[")
        coeff = coeff.rstrip("*") or "1"
        coeff = "-1" if coeff == "-" else coeff
        terms[label.rstrip("]")] += Fraction(coeff)
    return terms


def json_terms(result):
    terms = Counter()
    for rec in result:
        parts = rec["basis"]
        label = "|".join(f"{a}/{b}" for a, b in parts) if parts else "()"
        terms[label] += Fraction(rec["coefficient"])
    return terms


def test_mul_text(capsys):
    code, out = run(capsys, "mul", "dqsym", "2/0", "1/0|0/1")
    assert code == 0
    assert text_terms(out) == Counter(
        {"2/0|1/0|0/1": 1, "1/0|2/0|0/1": 1, "1/0|0/1|2/0": 1, "3/0|0/1": 1, "1/0|2/1": 1}
    )


def test_mul_json_and_text_agree(capsys):
    for args in [("2/0", "1/0|0/1"), ("1/0", "0/1"), ("1/0|0/1", "1/1")]:
        _, text = run(capsys, "mul", "dqsym", *args)
        _, raw = run(capsys, "mul", "dqsym", *args, "--format", "json")
        assert text_terms(text) == json_terms(json.loads(raw)["result"])


def test_antipode_json_and_text_agree(capsys):
    _, text = run(capsys, "antipode", "dqsym", "1/0|0/1|1/0")
    _, raw = run(capsys, "antipode", "dqsym", "1/0|0/1|1/0", "--format", "json")
    assert text_terms(text) == json_terms(json.loads(raw)["result"])
    _, tk = run(capsys, "antipode", "dqsym", "1/0|0/1|1/0", "--takeuchi")
    assert tk == text


def test_comul_json(capsys):
    code, raw = run(capsys, "comul", "dqsym", "1/0|1/1", "--format", "json")
    assert code == 0
    result = json.loads(raw)["result"]
    assert sorted(map(json.dumps, (r["basis"] for r in result))) == sorted(
        map(json.dumps, [[[], [[1, 0], [1, 1]]], [[[1, 0]], [[1, 1]]], [[[1, 0], [1, 1]], []]])
    )


def test_dims(capsys):
    assert run(capsys, "dims", "dqsym", "0") == (0, "1\n")
    assert run(capsys, "dims", "dqsym", "4") == (0, "1 2 7 24 82\n")
    code, raw = run(capsys, "dims", "word3", "3", "--format", "json")
    assert json.loads(raw)["dimensions"] == [1, 3, 9, 27]


def test_dims_respects_cap(capsys):
    code, _ = run(capsys, "dims", "dqsym", "9")
    assert code == 2
    code, out = run(capsys, "dims", "dqsym", "9", "--max-degree", "9")
    d = [int(v) for v in out.split()]
    assert code == 0 and len(d) == 10 and d[9] == 4 * d[8] - 2 * d[7]


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "dqsym", "2")
    assert code == 0
    assert len(out.split()) == 7
    code, raw = run(capsys, "enumerate", "word3", "1", "--format", "json")
    assert json.loads(raw)["basis"] == ["a", "b", "c"]


def test_map_qsym(capsys):
    assert run(capsys, "map-qsym", "dqsym", "0/2|1/0") == (0, "[2,1]\n")
    assert run(capsys, "map-qsym", "qsym", "2,1")[0] == 2


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "dqsym", "--degree", "2")
    assert code == 0
    code, raw = run(capsys, "verify", "qsym", "--degree", "3", "--format", "json")
    data = json.loads(raw)
    assert code == 0 and data["passed"]
    assert all(not c["violations"] for c in data["checks"].values())
    assert run(capsys, "verify", "dqsym", "--degree", "5")[0] == 2


def test_verify_failure_is_exit_one(capsys, monkeypatch):
    from hspecies import cli
    from hspecies.bialgebra import drop_term

    bad = drop_term(DQSYM, DQSYM.parse("1/0"), DQSYM.parse("0/1"), DQSYM.parse("1/1"))
    monkeypatch.setattr(cli, "_algebra", lambda name, unicode: bad)
    assert run(capsys, "verify", "dqsym", "--degree", "2")[0] == 0
    assert run(capsys, "verify", "dqsym", "--degree", "3")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["mul", "nosuch", "1"],
        ["mul", "dqsym", "2/0", "1-0"],
        ["comul", "qsym", "a,b"],
        ["antipode", "word3", "abd"],
        ["dims", "dqsym", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == 2


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "mul", "dqsym", "1/0|0/1", "1/1|1/0")[1] for _ in range(3)}
    assert len(outs) == 1


def test_lorder_unicode_flag(capsys):
    _, plain = run(capsys, "mul", "lorder", "-2 1", "1")
    _, fancy = run(capsys, "mul", "lorder", "-2 1", "1", "--unicode")
    assert plain.strip() == "[-2 1 3]"
    assert "-" not in fancy and "2̄" in fancy


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hspecies", "dims", "dqsym", "2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 2 7\n"
