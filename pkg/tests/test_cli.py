import json
import shutil
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from mostow_hybrids.arith import class_data
from mostow_hybrids.cli import main
from mostow_hybrids.datafiles import ENV_VAR, data_dir, load_json

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_all_pair_matches_golden_report(capsys):
    code, out, _ = run(capsys, "verify-all", "--pair", "3", "0")
    assert code == 0
    assert out == (GOLDEN / "verify_all_3_0.json").read_text(encoding="utf-8")
    jsonschema.validate(json.loads(out), load_json("report_schema.json"))


def test_verify_all_is_byte_stable(capsys):
    a = run(capsys, "verify-all", "--pair", "4", "1/4")[1]
    b = run(capsys, "verify-all", "--pair", "4", "1/4")[1]
    assert a == b


def test_verify_all_pair_contents(capsys):
    code, out, _ = run(capsys, "verify-all", "--pair", "5", "11/30")
    d = json.loads(out)
    ids = [c["id"] for c in d["checks"]]
    assert code == 0
    assert "hybrid.theorems(5,11/30).corollary_Gamma1_Gamma312" in ids
    code, out, _ = run(capsys, "verify-all", "--pair", "3", "1/6")
    d = json.loads(out)
    mw = next(c for c in d["checks"] if c["id"] == "hybrid.core_polygon(3,1/6).mirror_words")
    assert mw["status"] == "pass" and set(mw["certificate"]["types"].values()) == {"parabolic"}


def test_markdown_and_json_reports_agree(capsys):
    _, js, _ = run(capsys, "verify-all", "--pair", "5", "1/5", "--format", "json")
    _, md, _ = run(capsys, "verify-all", "--pair", "5", "1/5", "--format", "markdown")
    ids_json = [c["id"] for c in json.loads(js)["checks"]]
    rows = [l for l in md.splitlines() if l.startswith("| ") and not l.startswith("| id ")]
    assert [r.split(" | ")[0][2:] for r in rows] == ids_json


def test_verify_all_full(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify-all", "--out", str(out))
    d = json.loads(out.read_text())
    failed = [c["id"] for c in d["checks"] if c["status"] == "fail"]
    # the single failing check is the known table 3 cell
    assert failed == ["tables.table3.(3,1/18)"]
    assert code == 1
    assert d["summary"]["total"] > 1300


def test_tables_exit_codes(capsys):
    code, out, _ = run(capsys, "tables", "--which", "2", "4", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["summary"]["failed"] == 0
    assert sum(1 for c in d["checks"] if c["id"].startswith("tables.table2.(")) == 17
    assert sum(1 for c in d["checks"] if c["id"].startswith("tables.table4.(")) == 10
    code, out, _ = run(capsys, "tables", "--which", "3")
    assert code == 1
    assert "## Table 3" in out and "(3,1/18)" in out


@pytest.fixture
def data_copy(tmp_path, monkeypatch):
    dst = tmp_path / "data"
    shutil.copytree(data_dir(), dst)
    monkeypatch.setenv(ENV_VAR, str(dst))
    class_data.cache_clear()
    yield dst
    monkeypatch.delenv(ENV_VAR)
    class_data.cache_clear()


def test_corrupted_golden_via_env_override(capsys, data_copy):
    path = data_copy / "golden" / "table2.json"
    doc = json.loads(path.read_text())
    row = next(r for r in doc["rows"] if (r["p"], r["t"]) == (5, "11/30"))
    row["signature"] = "2,5,31"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "tables", "--which", "2", "--format", "json")
    assert code == 1
    bad = [c for c in json.loads(out)["checks"] if c["status"] == "fail"]
    assert [c["id"] for c in bad] == ["tables.table2.(5,11/30)"]
    assert bad[0]["certificate"]["diff"] == [{"column": "signature", "golden": "2,5,31", "computed": "2,5,30"}]


def test_missing_data_is_usage_error(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "nowhere"))
    code, _, err = run(capsys, "tables", "--which", "2")
    assert code == 2 and ENV_VAR in err


def test_tampered_arithmetic_data_is_usage_error(capsys, data_copy):
    path = data_copy / "takeuchi_arithmetic.json"
    doc = json.loads(path.read_text())
    doc["signatures"].remove("2,3,7")
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "tables", "--which", "4")
    assert code == 2 and "checksum" in err


def test_usage_errors(capsys):
    assert run(capsys, "verify-all", "--pair", "3", "1/7")[0] == 2
    assert run(capsys, "verify-all", "--pair", "3", "x")[0] == 2
    assert run(capsys, "classify", "--word", "R4", "--pair", "3", "0")[0] == 2
    assert run(capsys, "polygon-svg", "--p", "3", "--t", "1/7", "--out", "x.svg")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--word", "J R1 R3", "--pair", "3", "1/6")
    d = json.loads(out)
    assert code == 0 and d["type"] == "parabolic" and d["projective_order"] is None
    code, out, _ = run(capsys, "classify", "--word", "R3 J", "--pair", "4", "1/12")
    d = json.loads(out)
    assert d["restrictions"]["v312"]["type"] == "Elliptic(2)"
    assert "e1" not in d["restrictions"]


def test_index3(capsys):
    code, out, _ = run(capsys, "index3", "--pair", "5", "1/5")
    d = json.loads(out)
    assert code == 0
    assert d["as_printed"]["verdict"] == "IndexDividing3" and d["alternative"]["verdict"] == "Equal"


@pytest.mark.parametrize(
    "p,t,topology,marker",
    [("3", "0", "right-angled hexagon", False), ("4", "1/4", "ideal triangle", False), ("5", "7/10", "triangle with interior vertices", True)],
)
def test_polygon_svg(capsys, tmp_path, p, t, topology, marker):
    out = tmp_path / "poly.svg"
    code, _, _ = run(capsys, "polygon-svg", "--p", p, "--t", t, "--out", str(out))
    assert code == 0
    svg = out.read_text()
    data = json.loads(out.with_suffix(".json").read_text())
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert data["topology"] == topology and data["schematic"] is True
    assert ("stroke-dasharray" in svg) == marker
    if topology.startswith("right"):
        assert len(data["hexagon_vertices"]) == 6
        assert all(v["norm_sign"] == -1 for v in data["hexagon_vertices"])
        assert svg.count("<circle") == 7  # disk plus six vertices


def test_polygon_svg_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "polygon-svg", "--p", "3", "--t", "0", "--out", str(tmp_path / "no" / "dir" / "x.svg"))
    assert code == 2 and "cannot write" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mostow_hybrids", "index3", "--pair", "3", "0"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["as_printed"]["verdict"] == "Indeterminate"
