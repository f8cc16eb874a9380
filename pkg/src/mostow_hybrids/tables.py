"""Regenerate the four tables and diff them against the golden copies.

Table 1 is the catalogue of admissible pairs with recomputed phase regimes.
Tables 2-4 are recomputed from the generators: restrict to the line, read off
element orders, look up arithmeticity.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import is_arithmetic
from .datafiles import load_json
from .mostow import Phase, admissible_pairs, build_group
from .report import Check, Report
from .restrict import Gamma, TriangleSignature, triangle_signature

TABLE_KINDS = {2: Gamma.G312, 3: Gamma.G1, 4: Gamma.G321}


def _selected(pairs):
    mps = admissible_pairs()
    if pairs is None:
        return mps
    want = {(p, Fraction(t)) for p, t in pairs}
    return [mp for mp in mps if (mp.p, mp.t) in want]


def regenerate(which, pairs=None):
    """Rows of table `which`, as dicts with the golden file's columns."""
    if which == 1:
        return [{"p": mp.p, "t": str(mp.t), "phase": mp.phase.value} for mp in _selected(pairs)]
    kind = TABLE_KINDS[which]
    rows = []
    for mp in _selected(pairs):
        if kind is Gamma.G321 and mp.phase is not Phase.SMALL:
            continue
        sig = triangle_signature(kind, build_group(mp.p, mp.t))
        rows.append(
            {"p": mp.p, "t": str(mp.t), "signature": sig.key(), "arithmetic": "A" if is_arithmetic(sig) else "NA"}
        )
    return rows


def load_golden(which):
    return load_json(f"golden/table{which}.json")


def _cell_equal(col, a, b):
    if col == "signature":
        return TriangleSignature.parse(str(a)) == TriangleSignature.parse(str(b))
    if col == "t":
        return Fraction(str(a)) == Fraction(str(b))
    return a == b


def diff_table(which, rows=None, golden=None, pairs=None):
    """One Check per golden row, plus one for the row set itself.

    With `pairs`, only those rows are regenerated and compared, and the row
    set check is skipped.
    """
    rows = regenerate(which, pairs) if rows is None else rows
    golden = load_golden(which) if golden is None else golden
    cols = [c for c in golden["columns"] if c not in ("p", "t")]
    key = lambda r: (int(r["p"]), Fraction(str(r["t"])))
    got = {key(r): r for r in rows}
    want = {key(r): r for r in golden["rows"]}
    if pairs is not None:
        sel = {(p, Fraction(t)) for p, t in pairs}
        want = {k: v for k, v in want.items() if k in sel}
    tag = f"tables.table{which}"
    checks = [] if pairs is not None else [
        Check(
            f"{tag}.rows",
            f"table {which} row set",
            set(got) == set(want),
            {
                "rows": len(rows),
                "golden_rows": len(want),
                "missing": [f"({p},{t})" for p, t in sorted(set(want) - set(got))],
                "extra": [f"({p},{t})" for p, t in sorted(set(got) - set(want))],
            },
        )
    ]
    for k in sorted(want):
        p, t = k
        g = want[k]
        r = got.get(k)
        diffs = []
        for c in cols:
            if r is None or not _cell_equal(c, r.get(c), g.get(c)):
                diffs.append({"column": c, "golden": g.get(c), "computed": None if r is None else r.get(c)})
        cert = {"cells": {c: (r or {}).get(c) for c in cols}}
        if diffs:
            cert["diff"] = diffs
        checks.append(Check(f"{tag}.({p},{t})", f"table {which} row ({p},{t})", not diffs, cert))
    return checks


def cmd_tables(which=(1, 2, 3, 4), golden=None):
    rep = Report(f"tables {' '.join(str(w) for w in which)}")
    for w in which:
        rep.add(diff_table(w, golden=None if golden is None else golden.get(w)))
    notes = [n for w in which for n in load_golden(w).get("notes", [])] if golden is None else []
    if notes:
        rep.notes["golden_notes"] = notes
    return rep


def render_markdown_table(which, rows=None):
    rows = regenerate(which) if rows is None else rows
    if which == 1:
        lines = ["| p | t | phase |", "|---|---|---|"]
        lines += [f"| {r['p']} | {r['t']} | {r['phase']} |" for r in rows]
    else:
        lines = ["| (p,t) | signature | A/NA |", "|---|---|---|"]
        lines += [f"| ({r['p']}, {r['t']}) | {TriangleSignature.parse(r['signature'])} | {r['arithmetic']} |" for r in rows]
    return "\n".join(lines) + "\n"
