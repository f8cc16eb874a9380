import json
import re

import jsonschema

from mostow_hybrids.datafiles import load_json
from mostow_hybrids.report import SCHEMA_VERSION, Check, Report


def sample():
    rep = Report("demo")
    rep.add([Check("b.two", "second", False, {"x": float("inf"), "y": (1, 2)}), Check("a.one", "first | piped", True)])
    rep.add(Check("c.three", "third", True, {"nested": {"k": object}}))
    rep.notes["z"] = 1
    rep.notes["a"] = {"b": [1, 2]}
    return rep


def test_summary_and_status():
    rep = sample()
    assert rep.summary() == {"total": 3, "passed": 2, "failed": 1}
    assert not rep.ok and [c.id for c in rep.failures] == ["b.two"]
    assert Report("empty").ok


def test_json_schema():
    schema = load_json("report_schema.json")
    d = sample().to_dict()
    jsonschema.validate(d, schema)
    assert d["schema"] == SCHEMA_VERSION == schema["properties"]["schema"]["const"]
    assert [c["id"] for c in d["checks"]] == ["a.one", "b.two", "c.three"]
    assert d["checks"][1]["certificate"]["x"] == "inf"
    assert list(d["notes"]) == ["a", "z"]
    json.loads(sample().to_json())


def test_markdown_and_json_have_the_same_checks():
    rep = sample()
    md = rep.to_markdown()
    rows = [l for l in md.splitlines() if l.startswith("| ") and not l.startswith("| id ")]
    cells = [[x.strip() for x in re.split(r"(?<!\\)\|", r)[1:-1]] for r in rows]
    ids = [c[0] for c in cells]
    statuses = [c[2] for c in cells]
    d = rep.to_dict()
    assert ids == [c["id"] for c in d["checks"]]
    assert statuses == [c["status"] for c in d["checks"]]
    assert "first \\| piped" in md
    assert "2/3 checks passed, 1 failed." in md


def test_order_independent_rendering():
    a = sample()
    b = Report("demo", list(reversed(a.checks)), dict(reversed(list(a.notes.items()))))
    assert a.to_json() == b.to_json()
    assert a.to_markdown() == b.to_markdown()
