"""Command-line front end.

    mostow-hybrids tables [--which 2 3] [--format json|markdown]
    mostow-hybrids verify-all [--pair P T] [--format json|markdown]
    mostow-hybrids polygon-svg --p P --t A/B --out PATH
    mostow-hybrids classify --word "J R1 R3" --pair P T
    mostow-hybrids index3 --pair P T

Exit codes: 0 all checks pass, 1 some check fails, 2 usage or data error.
Set MOSTOW_HYBRIDS_DATA to read data files from another directory.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .arith import DataIntegrityError
from .cyclo import sign_of_real
from .datafiles import ENV_VAR
from .fpgroup import verify_hybrid_words, verify_K_normal, verify_quotient_chain
from .hybrid import core_polygon_checks, theorem_suite
from .isometry import classify, projective_order
from .mostow import (
    POLAR_LABELS,
    Phase,
    WordSyntaxError,
    admissible_pairs,
    build_group,
    index3_predicate,
    is_admissible,
    mirror_check,
    polar_norm_signs,
    verify_orthogonality,
    verify_relations,
)
from .report import Check, Report
from .restrict import CHARTS, NotStabilizedError, classify_mobius, mobius_trace_invariant, restrict_isometry, verify_trace_formulas
from .tables import cmd_tables, diff_table, render_markdown_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _pair(args_pair):
    p, t = int(args_pair[0]), _fraction(args_pair[1])
    return p, t


# -- per-pair checks -----------------------------------------------------------


def _polar_checks(g):
    signs = polar_norm_signs(g)
    expected_varying = {Phase.SMALL: 1, Phase.CRITICAL: 0, Phase.LARGE: -1}[g.phase]
    tag = f"mostow.polar_signs{g.params.key}"
    return [
        Check(
            f"{tag}.persistent",
            "v123, v231, v312 are positive",
            all(signs[k] == 1 for k in ("123", "231", "312")),
            {k: signs[k] for k in ("123", "231", "312")},
        ),
        Check(
            f"{tag}.varying",
            f"v213, v321, v132 have sign {expected_varying} at {g.phase.value} phase",
            all(signs[k] == expected_varying for k in ("213", "321", "132")),
            {k: signs[k] for k in ("213", "321", "132")},
        ),
    ]


def _mirror_checks(g):
    out = []
    for lab in POLAR_LABELS + ("e1", "e2", "e3"):
        out.append(
            Check(
                f"mostow.mirror{g.params.key}.{lab}",
                "the mirror of the reflection is fixed pointwise",
                mirror_check(g, lab),
                {"label": lab},
            )
        )
    return out


def pair_checks(mp, quotient_checks=None):
    g = build_group(mp.p, mp.t)
    checks = []
    checks += verify_relations(g)
    checks += verify_orthogonality(g)
    checks += _polar_checks(g)
    checks += _mirror_checks(g)
    checks += verify_trace_formulas(g)
    for which in (2, 3, 4):
        checks += diff_table(which, pairs=[(mp.p, mp.t)])
    checks += verify_K_normal(g)
    checks += verify_hybrid_words(g)
    checks += core_polygon_checks(g)
    checks += theorem_suite(g, quotient_checks).checks
    return checks


def _index3_note(p, t):
    v = index3_predicate(p, t)
    return {
        "as_printed": {"verdict": v.verdict.value, "k": v.k, "l": v.l, "note": v.note},
        "alternative": {"verdict": v.alternative.value, "k": v.alt_k, "l": v.alt_l},
    }


def cmd_verify_all(pair=None):
    if pair is not None:
        p, t = pair
        sel = [mp for mp in admissible_pairs() if (mp.p, mp.t) == (p, t)]
        if not sel:
            raise UsageError(f"({p},{t}) is not an admissible pair")
        command = f"verify-all --pair {p} {t}"
    else:
        sel = admissible_pairs()
        command = "verify-all"
    rep = Report(command)
    quot = {}
    for p in sorted({mp.p for mp in sel}):
        quot[p] = verify_quotient_chain(p)
        rep.add(quot[p])
    if pair is None:
        for which in (2, 3, 4):
            rep.add([c for c in diff_table(which) if c.id.endswith(".rows")])
        rep.add([c for c in diff_table(1)])
    for mp in sel:
        rep.add(pair_checks(mp, quot[mp.p]))
        rep.notes[f"index3{mp.key}"] = _index3_note(mp.p, mp.t)
    return rep


# -- commands --------------------------------------------------------------------


def _emit(rep, fmt, out=None):
    text = rep.to_json() if fmt == "json" else rep.to_markdown()
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if rep.ok else EXIT_FAIL


def run_tables(args):
    which = tuple(args.which or (1, 2, 3, 4))
    rep = cmd_tables(which)
    if args.format == "markdown":
        for w in which:
            sys.stdout.write(f"\n## Table {w}\n\n" + render_markdown_table(w) + "\n")
    return _emit(rep, args.format, args.out)


def run_verify_all(args):
    pair = _pair(args.pair) if args.pair else None
    return _emit(cmd_verify_all(pair), args.format, args.out)


def run_polygon_svg(args):
    from .svg import write_polygon

    t = args.t
    if not is_admissible(args.p, t):
        raise UsageError(f"({args.p},{t}) is not an admissible pair")
    try:
        svg_path, json_path = write_polygon(build_group(args.p, t), args.out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {svg_path} and {json_path}")
    return EXIT_OK


def classify_word(p, t, word):
    g = build_group(p, t)
    a = g.word(word)
    cls = classify(a)
    out = {
        "pair": f"({p},{t})",
        "word": word,
        "type": cls.tag.value,
        "discriminant_sign": cls.discriminant_sign,
        "projective_order": projective_order(a),
        "restrictions": {},
    }
    for name, make in CHARTS.items():
        if name == "v321" and g.phase is not Phase.SMALL:
            continue
        chart = make(g)
        try:
            m = restrict_isometry(a, chart)
        except NotStabilizedError:
            continue
        mt = classify_mobius(m)
        s = mobius_trace_invariant(m)
        out["restrictions"][name] = {
            "type": str(mt),
            "tr2_over_det": s.exact(),
            "sign(tr2/det - 4)": sign_of_real(s - 4),
        }
    return out


def run_classify(args):
    p, t = _pair(args.pair)
    try:
        out = classify_word(p, t, args.word)
    except (WordSyntaxError, KeyError) as exc:
        raise UsageError(f"bad word {args.word!r}: {exc}") from exc
    print(json.dumps(out, indent=2, ensure_ascii=False, default=str))
    return EXIT_OK


def run_index3(args):
    p, t = _pair(args.pair)
    print(json.dumps(_index3_note(p, t), indent=2, default=str))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="mostow-hybrids", description=__doc__.split("\n\n")[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tables", help="regenerate tables 1-4 and diff against golden copies")
    sp.add_argument("--which", type=int, nargs="+", choices=(1, 2, 3, 4))
    sp.add_argument("--format", choices=("json", "markdown"), default="markdown")
    sp.add_argument("--out")
    sp.set_defaults(func=run_tables)

    sp = sub.add_parser("verify-all", help="run every check, optionally for one pair")
    sp.add_argument("--pair", nargs=2, metavar=("P", "T"))
    sp.add_argument("--format", choices=("json", "markdown"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=run_verify_all)

    sp = sub.add_parser("polygon-svg", help="schematic core polygon as SVG plus JSON")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--t", type=_fraction, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=run_polygon_svg)

    sp = sub.add_parser("classify", help="classify a word in R1, R2, R3, J")
    sp.add_argument("--word", required=True)
    sp.add_argument("--pair", nargs=2, metavar=("P", "T"), required=True)
    sp.set_defaults(func=run_classify)

    sp = sub.add_parser("index3", help="index-3 criterion, printed and alternative readings")
    sp.add_argument("--pair", nargs=2, metavar=("P", "T"), required=True)
    sp.set_defaults(func=run_index3)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError, DataIntegrityError) as exc:
        # data files missing or malformed, or an out-of-range parameter
        print(f"error: {exc} (data directory override: ${ENV_VAR})", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
