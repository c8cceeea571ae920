import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from rht.cli import render_pretty, run
from rht.models import kodaira_thurston
from rht.serial import dga_from_json

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, _ = call(CASES[name])
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_betti_kt_exact_bytes():
    assert call(["betti", "--family", "kodaira-thurston"])[1] == '{"betti":[1,3,4,3,1]}\n'


def test_reports_are_reproducible():
    argv = ["massey", "--family", "vn", "--n", "6", "--a", "x2", "--b", "x1", "--c", "x2"]
    assert call(argv)[1] == call(argv)[1]


def test_parse_error_exit_2():
    code, _, err = call(["cup", "--family", "heisenberg", "--a", "x1^2", "--b", "x2"])
    assert code == 2
    report = json.loads(err)
    assert report["error"] == "OddPower" and (report["line"], report["column"]) == (1, 1)


def test_bad_json_exit_2(tmp_path):
    p = tmp_path / "m.json"
    p.write_text('{"generators": [\n  oops]}')
    code, _, err = call(["betti", "--from-file", str(p)])
    assert code == 2 and json.loads(err)["line"] == 2


def test_jacobi_failure_exit_1(tmp_path):
    p = tmp_path / "lie.json"
    p.write_text(json.dumps({"dim": 3, "brackets": [
        {"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
        {"i": 1, "j": 3, "terms": [{"k": 1, "c": "1"}]}]}))
    code, _, err = call(["betti", "--from-file", str(p)])
    assert code == 1 and json.loads(err)["error"] == "JacobiFailure"


def test_d_squared_failure_exit_1(tmp_path):
    p = tmp_path / "dga.json"
    p.write_text(json.dumps({"generators": [{"name": f"x{i}", "degree": 1} for i in range(1, 5)],
                             "differential": {"x3": "x1*x2", "x4": "x3*x4"}}))
    code, _, err = call(["model", "--from-file", str(p)])
    assert code == 1 and json.loads(err)["generator"] == "x4"


def test_env_cap_override(monkeypatch):
    monkeypatch.setenv("RHT_MAX_DEGREE", "5")
    code, _, err = call(["betti", "--family", "cpn", "--m", "2", "--max-degree", "8"])
    assert code == 1 and json.loads(err)["error"] == "CapExceeded"
    monkeypatch.setenv("RHT_MAX_DEGREE", "12")
    code, out, _ = call(["betti", "--family", "cpn", "--m", "2", "--max-degree", "11"])
    assert code == 0 and json.loads(out)["betti"][:6] == [1, 0, 1, 0, 1, 0]


def test_model_dump_reload(tmp_path):
    code, out, _ = call(["model", "--family", "kodaira-thurston"])
    assert dga_from_json(json.loads(out)) == kodaira_thurston()
    p = tmp_path / "kt.json"
    p.write_text(out)
    assert call(["betti", "--from-file", str(p)])[1] == '{"betti":[1,3,4,3,1]}\n'


def test_scan_never_claims_formality():
    out = json.loads(call(["formality-scan", "--family", "abelian", "--n", "3"])[1])
    assert out["conclusion"] == "no obstruction found at this depth"


def test_missing_family_is_usage_error():
    assert call(["betti"])[0] == 2


def test_output_file(tmp_path):
    p = tmp_path / "r.json"
    assert call(["conn-sum-survival", "--q", "8", "--dim", "11", "-o", str(p)])[0] == 0
    assert json.loads(p.read_text()) == {"q": 8, "dim": 11, "survives": True}


def test_pretty_rendering():
    code, out, _ = call(["blowup-betti", "--family", "kodaira-thurston", "--N", "5", "--pretty"])
    assert code == 0 and "betti: [1, 0, 2, 3, 6, 6, 6, 3, 2, 0, 1]" in out
    assert render_pretty({"a": [{"b": True}]}) == "a:\n  -\n    b: yes"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rht", "betti", "--family", "kodaira-thurston"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == '{"betti":[1,3,4,3,1]}\n'
