import io
import json
import subprocess
import sys

import pytest

from twoparam import __version__
from twoparam.cartan import validate
from twoparam.cli import main, run
from twoparam.freealg import FreeElem
from conftest import P


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)
    return write


@pytest.fixture
def a2file(files):
    return files("a2.json", {"omega": [[1, -1], [0, 1]]})


def call(argv):
    buf = io.StringIO()
    code = run(argv, buf)
    text = buf.getvalue()
    return code, (json.loads(text) if text else None)


def test_validate_omega(a2file, files):
    code, rep = call(["validate-omega", "--omega", a2file])
    assert code == 0
    assert rep["command"] == "validate-omega" and rep["version"] == __version__
    assert rep["omega"] == [[1, -1], [0, 1]]
    assert rep["result"]["valid"] is True
    assert rep["result"]["dot"] == [[2, -1], [-1, 2]]
    bad = files("bad.json", {"omega": [[1, 1], [0, 1]]})
    code, rep = call(["validate-omega", "--omega", bad])
    assert code == 1 and rep["result"]["valid"] is False and rep["result"]["violations"]


def test_dim_and_gram(a2file):
    code, rep = call(["dim", "--omega", a2file, "--deg", "2,1"])
    assert code == 0
    assert rep["result"] == {"degree": [2, 1], "dim_free": 3, "dim_f": 2}
    code, rep = call(["gram", "--omega", a2file, "--deg", "1,1"])
    assert code == 0
    res = rep["result"]
    assert res["words"] == [[0, 1], [1, 0]] and res["rank"] == 2
    D = P("(1-v^-2)^-2")
    want = [[P("t^2") * D, P("v*t") * D], [P("v*t") * D, D]]
    assert [[P(x) for x in row] for row in res["matrix"]] == want


def test_serre_and_coproduct_checks(a2file):
    code, rep = call(["serre-check", "--omega", a2file])
    assert code == 0 and rep["result"]["all_true"]
    assert len(rep["result"]["serre"]) == 2
    code, rep = call(["serre-check", "--omega", a2file, "--max-tr", "4"])
    assert code == 0
    assert all(r["radical_equals_ideal"] for r in rep["result"]["serre"])
    for cmd in ("coassoc-check", "bar-check"):
        code, rep = call([cmd, "--omega", a2file, "--max-tr", "3"])
        assert code == 0 and rep["result"]["failures"] == []


def test_canbasis_and_positivity(a2file, files):
    code, rep = call(["canbasis-a2", "--omega", a2file, "--max-tr", "2"])
    degs = rep["result"]["degrees"]
    assert [d["count"] for d in degs] == [d["rank"] for d in degs]
    el = degs[4]["elements"][1]
    assert el["name"] == "t^-1 theta_i^(1) theta_j^(1)"
    assert el["verify"]["norm_ok"] is True
    # degree (2,0) holds theta_i^(2), whose norm starts at v^-2
    assert degs[3]["elements"][0]["verify"]["norm_ok"] is False
    assert code == 1 and rep["result"]["all_true"] is False
    code, rep = call(["positivity", "--omega", a2file, "--max-tr", "3"])
    assert code == 0 and rep["result"]["all_true"]
    other = files("op.json", {"omega": [[1, 0], [-1, 1]]})
    code, _ = call(["canbasis-a2", "--omega", other])
    assert code == 2


def test_element_commands_roundtrip(a2file, files):
    c = validate([[1, -1], [0, 1]])
    x = FreeElem.word(c, (0, 1), P("t^-1"))
    y = FreeElem.word(c, (1, 0))
    path = files("els.json", {"elements": [x.to_json(), y.to_json()]})
    code, rep = call(["cb-verify", "--omega", a2file, "--elements", path])
    assert code == 0 and rep["result"]["all_true"]
    code, rep = call(["twist", "--omega", a2file, "--elements", path])
    assert code == 0
    tw = [FreeElem.from_json(c, e) for e in rep["result"]["elements"]]
    assert tw == [FreeElem.word(c, (0, 1)), y]
    back = files("tw.json", rep["result"]["elements"])
    code, rep = call(["twist", "--omega", a2file, "--elements", back, "--direction", "from_f"])
    assert [FreeElem.from_json(c, e) for e in rep["result"]["elements"]] == [x, y]
    code, rep = call(["specialize", "--omega", a2file, "--elements", path])
    assert FreeElem.from_json(c, rep["result"]["elements"][0]) == FreeElem.word(c, (0, 1))
    code, rep = call(["forms-agree", "--omega", a2file, "--elements", path])
    assert code == 0 and rep["result"]["all_true"]
    bad = files("bad.json", [FreeElem.word(c, (0, 1)).to_json()])
    code, rep = call(["forms-agree", "--omega", a2file, "--elements", bad])
    assert code == 2 and rep is None


def test_module(a2file, files):
    a1 = files("a1.json", {"omega": [[1]]})
    code, rep = call(["module", "--omega", a1, "--lambda", "2", "--depth", "4"])
    assert code == 0
    assert rep["result"]["dimensions"] == {"0": 1, "1": 1, "2": 1}
    code, rep = call(["module", "--omega", a2file, "--lambda", "1,1", "--eps", "1,t", "--depth", "4"])
    assert code == 0 and rep["result"]["total"] == 8
    assert rep["result"]["eps"] == ["1", "t"]
    code, _ = call(["module", "--omega", a2file, "--lambda", "1", "--depth", "4"])
    assert code == 2


def test_input_errors(a2file, files, tmp_path, capsys):
    assert call(["dim", "--omega", str(tmp_path / "missing.json"), "--deg", "1,1"])[0] == 2
    assert call(["dim", "--omega", a2file, "--deg", "1,1,1"])[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert call(["dim", "--omega", str(broken), "--deg", "1"])[0] == 2
    invalid = files("inv.json", {"omega": [[0]]})
    assert call(["dim", "--omega", invalid, "--deg", "1"])[0] == 2
    assert "error:" in capsys.readouterr().err
    assert main(["no-such-command"]) == 2
    assert main(["dim", "--omega", a2file, "--deg", "x"]) == 2


def test_deterministic_output(a2file):
    a = io.StringIO()
    b = io.StringIO()
    run(["gram", "--omega", a2file, "--deg", "2,1"], a)
    run(["gram", "--omega", a2file, "--deg", "2,1"], b)
    assert a.getvalue() == b.getvalue()


def test_entry_point_subprocess(a2file):
    r = subprocess.run([sys.executable, "-m", "twoparam", "dim", "--omega", a2file, "--deg", "1,1"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["result"]["dim_f"] == 2
