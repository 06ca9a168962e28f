import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from spectre.cli import main, parse_integers, InputError
from spectre.recognize import RecognitionOutcome

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_integers():
    assert parse_integers("4\n\n2 # comment\n6\n") == [4, 2, 6]
    assert parse_integers('["4", 6]') == [4, 6]
    with pytest.raises(InputError, match="line 2"):
        parse_integers("3\nabc\n")
    with pytest.raises(InputError):
        parse_integers("0")
    with pytest.raises(InputError):
        parse_integers("[1.5]")
    with pytest.raises(InputError):
        parse_integers("")


def test_recognize_empty(tmp_path, capsys):
    f = write(tmp_path, "two.txt", "2\n")
    code, out, _ = run(["recognize", f, "--format", "json"], capsys)
    assert code == 1
    assert json.loads(out)["result"] is None


def test_recognize_alternating(tmp_path, capsys):
    mu = json.loads((GOLDEN / "alt_mu.json").read_text())["15"]
    f = write(tmp_path, "a15.json", json.dumps(mu))
    code, out, _ = run(["recognize", f, "--format", "json"], capsys)
    assert code == 0
    res = json.loads(out)["result"]
    assert res == {"kind": "alternating", "family": "A", "n": "15", "q": "0"}
    code, out, _ = run(["recognize", f], capsys)
    assert out.splitlines()[0] == "A15"


def test_recognize_bad_input(tmp_path, capsys):
    f = write(tmp_path, "bad.txt", "abc\n")
    code, _, err = run(["recognize", f], capsys)
    assert code == 2 and "line 1" in err
    code, _, err = run(["recognize", str(tmp_path / "missing.txt")], capsys)
    assert code == 2


def test_mu_and_oracles(capsys):
    assert run(["mu", "--values", "4", "2", "6"], capsys)[:2] == (0, "4 6\n")
    assert run(["oracle", "alt-mu", "7"], capsys)[:2] == (0, "4 5 6 7\n")
    assert run(["oracle", "psl2-mu", "7", "--format", "json"], capsys)[:2] == (0, '["3", "4", "7"]\n')
    assert run(["oracle", "atoms", "--values", "12", "18"], capsys)[:2] == (0, "6\n")


def test_adgraph_golden(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    code, out, _ = run(["adgraph", "--values", "6", "10", "15", "--dot", str(dot)], capsys)
    want = (GOLDEN / "cli" / "adgraph_6_10_15.dot").read_text()
    assert code == 0 and out == want and dot.read_text() == want
    code, out, _ = run(["adgraph", "--values", "6", "10", "15", "--format", "json"], capsys)
    assert json.loads(out) == {"vertices": ["2", "3", "5"],
                               "edges": [["2", "3"], ["2", "5"], ["3", "5"]]}


def test_adgraph_too_many(capsys):
    code, _, err = run(["adgraph", "--values", "2", "3", "5", "7", "--cap", "2"], capsys)
    assert code == 3 and "cap 2" in err


def test_json_round_trip(capsys):
    code, out, _ = run(["recognize", "--values", "3", "4", "7", "--format", "json"], capsys)
    assert code == 0
    d = json.loads(out)
    assert RecognitionOutcome.from_json(d).to_json() == d
    assert d["result"]["family"] == "L"


def test_deterministic_subprocess(tmp_path):
    env = dict(os.environ, SPECTRE_DATA_DIR=str(HERE / "data" / "twins"))
    cmd = [sys.executable, "-m", "spectre.cli", "recognize", "--values", "7", "8", "9",
           "10", "12", "15", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, env=env)
    b = subprocess.run(cmd, capture_output=True, env=env)
    assert a.returncode == 0 and a.stdout == b.stdout
    d = json.loads(a.stdout)
    assert d["result"]["family"] == "S" and d["twin"]["family"] == "O_plus"
