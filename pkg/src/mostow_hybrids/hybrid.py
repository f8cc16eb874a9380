"""Hybrids of two line stabilizers, the core polygon, and the main results.

A hybrid H(G1, G2) is generated by discrete stabilizers of two orthogonal
complex lines. Two hybrids are built from a Mostow group: one from the
stabilizers of e1^perp and v312^perp, the other (small phase only) from
v312^perp and v321^perp.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .arith import check_noncommensurable, commensurability_class, is_arithmetic
from .cyclo import sign_of_real
from .hermitian import ComplexLine, is_orthogonal, line_intersection, norm_sign
from .isometry import classify, eigen_residual
from .mostow import Phase, basis_vector, mirror_word, polar_vectors
from .fpgroup import verify_hybrid_words, verify_K_normal, verify_quotient_chain
from .report import Check
from .restrict import Gamma, RegimeError, triangle_signature


class HybridLabel(Enum):
    G1_G312 = "H_Gamma1_Gamma312"
    G312_G321 = "H_Gamma312_Gamma321"


_HYBRIDS = {
    HybridLabel.G1_G312: (("e1", ("J^-1 R1 R2", "J R1 R3"), Gamma.G1), ("312", ("R1", "R3 J"), Gamma.G312)),
    HybridLabel.G312_G321: (("312", ("R1", "R3 J"), Gamma.G312), ("321", ("R2", "J R3^-1"), Gamma.G321)),
}


class HybridError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HybridSpec:
    label: HybridLabel
    line1: ComplexLine
    line2: ComplexLine
    gens1: tuple
    gens2: tuple
    kinds: tuple
    group: object = field(repr=False, default=None)

    def intersection_generators(self):
        """Listed generators that stabilize both lines."""
        both = []
        for a in self.gens1 + self.gens2:
            if eigen_residual(a, self.line1.polar) is None and eigen_residual(a, self.line2.polar) is None:
                both.append(a.name)
        return both

    def conditions(self):
        """The three defining conditions, as checks."""
        g = self.group
        tag = f"hybrid.{self.label.value}{g.params.key}"
        sigs = [triangle_signature(k, g) for k in self.kinds]
        return [
            Check(
                f"{tag}.cond1_orthogonal",
                "the two complex lines are orthogonal",
                is_orthogonal(self.line1, self.line2),
                {"lines": [self.line1.label, self.line2.label]},
            ),
            Check(
                f"{tag}.cond2_lattices",
                "each generator set stabilizes its line and restricts to a triangle group",
                all(s.is_hyperbolic() for s in sigs),
                {"restrictions": {k.value: str(s) for k, s in zip(self.kinds, sigs)}},
            ),
            Check(
                f"{tag}.cond3_intersection",
                "in complex dimension 2 the intersection lattice lives in PU(0,1), a point stabilizer; vacuous",
                True,
                {"note": "recorded, not asserted beyond vacuity", "generators_stabilizing_both": self.intersection_generators()},
            ),
        ]


def _line(g, key):
    v = basis_vector(g, 1) if key == "e1" else polar_vectors(g)[key]
    name = "e1" if key == "e1" else f"v{key}"
    return ComplexLine(v, g.form, name)


def build_hybrid(g, label):
    label = HybridLabel(label)
    if label is HybridLabel.G312_G321 and g.phase is not Phase.SMALL:
        raise RegimeError(f"{label.value} needs small phase shift; ({g.p},{g.t}) is {g.phase.value}")
    (k1, w1, kind1), (k2, w2, kind2) = _HYBRIDS[label]
    line1, line2 = _line(g, k1), _line(g, k2)
    if not is_orthogonal(line1, line2):
        raise HybridError(f"{line1.label} and {line2.label} are not orthogonal")
    gens1 = tuple(g.word(w) for w in w1)
    gens2 = tuple(g.word(w) for w in w2)
    for line, gens in ((line1, gens1), (line2, gens2)):
        for a in gens:
            if eigen_residual(a, line.polar) is not None:
                raise HybridError(f"{a.name} does not stabilize {line.label}")
    return HybridSpec(label, line1, line2, gens1, gens2, (kind1, kind2), g)


# -- core polygon ----------------------------------------------------------

HEXAGON = ("123", "213", "231", "321", "312", "132")
PERSISTENT = ("123", "231", "312")
# expected norm sign of hexagon vertices / triangle corners per regime
REGIME_SIGNS = {Phase.SMALL: (-1, 1), Phase.CRITICAL: (0, 0), Phase.LARGE: (1, -1)}


@dataclass(frozen=True)
class Vertex:
    walls: tuple
    orthogonal: bool
    norm_sign: int
    norm: str = ""

    def as_dict(self):
        return {
            "walls": [f"v{w}" for w in self.walls],
            "orthogonal": self.orthogonal,
            "norm_sign": self.norm_sign,
            "norm": self.norm,
        }


@dataclass(frozen=True)
class CorePolygon:
    p: int
    t: object
    phase: Phase
    hexagon: tuple
    triangle: tuple
    polar_signs: dict
    mirror_types: dict

    def topology(self):
        return {Phase.SMALL: "right-angled hexagon", Phase.CRITICAL: "ideal triangle", Phase.LARGE: "triangle with interior vertices"}[self.phase]

    def as_dict(self):
        return {
            "p": self.p,
            "t": str(self.t),
            "phase": self.phase.value,
            "topology": self.topology(),
            "hexagon_vertices": [v.as_dict() for v in self.hexagon],
            "triangle_vertices": [v.as_dict() for v in self.triangle],
            "polar_norm_signs": {f"v{k}": s for k, s in self.polar_signs.items()},
            "mirror_word_types": self.mirror_types,
        }


def _vertex(g, vs, a, b):
    x = line_intersection(vs[a], vs[b], g.form)
    n = g.form.norm(x)
    return Vertex((a, b), is_orthogonal(vs[a], vs[b], g.form), sign_of_real(n), n.exact())


def core_polygon(g):
    vs = polar_vectors(g)
    hexagon = tuple(_vertex(g, vs, a, b) for a, b in zip(HEXAGON, HEXAGON[1:] + HEXAGON[:1]))
    triangle = tuple(_vertex(g, vs, a, b) for a, b in zip(PERSISTENT, PERSISTENT[1:] + PERSISTENT[:1]))
    signs = {k: norm_sign(v, g.form) for k, v in vs.items()}
    mirrors = {}
    for lab in ("213", "321", "132"):
        w = mirror_word(lab)
        mirrors[w] = classify(g.word(w)).tag.value
    return CorePolygon(g.p, g.t, g.phase, hexagon, triangle, signs, mirrors)


def core_polygon_checks(g):
    poly = core_polygon(g)
    tag = f"hybrid.core_polygon{g.params.key}"
    hex_sign, tri_sign = REGIME_SIGNS[g.phase]
    types = set(poly.mirror_types.values())
    if g.phase is Phase.CRITICAL:
        mirror_ok = types == {"parabolic"}
    else:
        mirror_ok = all(t.endswith("elliptic") for t in types)
    return [
        Check(
            f"{tag}.right_angles",
            "adjacent walls of the hexagon are orthogonal",
            all(v.orthogonal for v in poly.hexagon),
            {"pairs": [v.as_dict()["walls"] for v in poly.hexagon]},
        ),
        Check(
            f"{tag}.hexagon_signs",
            f"hexagon vertices for {g.phase.value} phase",
            all(v.norm_sign == hex_sign for v in poly.hexagon),
            {"expected": hex_sign, "signs": [v.norm_sign for v in poly.hexagon]},
        ),
        Check(
            f"{tag}.triangle_signs",
            f"corners cut by v123, v231, v312 walls for {g.phase.value} phase",
            all(v.norm_sign == tri_sign for v in poly.triangle),
            {"expected": tri_sign, "signs": [v.norm_sign for v in poly.triangle], "topology": poly.topology()},
        ),
        Check(
            f"{tag}.mirror_words",
            "J R_j R_k is parabolic at critical phase, elliptic otherwise",
            mirror_ok,
            {"types": poly.mirror_types},
        ),
    ]


# -- theorem suite -----------------------------------------------------------

COROLLARY_PAIRS = {
    (5, "11/30"): (Gamma.G1, Gamma.G312),
    (4, "1/12"): (Gamma.G312, Gamma.G321),
    (5, "1/5"): (Gamma.G312, Gamma.G321),
}


@dataclass
class TheoremVerdicts:
    key: str
    checks: list
    verdicts: dict  # name -> True / False / None (out of scope)

    @property
    def ok(self):
        return all(c.passed for c in self.checks) and all(v is not False for v in self.verdicts.values())


def _all(checks):
    return all(c.passed for c in checks)


def _corollary(g, kinds, tag):
    sigs = [triangle_signature(k, g) for k in kinds]
    v = check_noncommensurable(*sigs)
    arith = [is_arithmetic(s) for s in sigs]
    ok = all(arith) and v.noncommensurable
    cert = {
        "restrictions": {k.value: str(s) for k, s in zip(kinds, sigs)},
        "arithmetic": {k.value: a for k, a in zip(kinds, arith)},
        "classes": {k.value: commensurability_class(s) for k, s in zip(kinds, sigs)},
        "verdict": v.verdict.value,
    }
    return Check(tag, "hybrid of two noncommensurable arithmetic lattices", ok, cert)


def theorem_suite(g, quotient_checks=None):
    """Chain the module results into the main statements for one pair."""
    key = g.params.key
    tag = f"hybrid.theorems{key}"
    checks = []
    verdicts = {}

    # finite index: K normal, group/K finite, hybrid contains K
    h1 = build_hybrid(g, HybridLabel.G1_G312)
    conds1 = h1.conditions()
    knorm = verify_K_normal(g)
    quot = quotient_checks if quotient_checks is not None else verify_quotient_chain(g.p)
    words = verify_hybrid_words(g)
    contains_k = [c for c in words if not c.id.endswith(".J")]
    gen_names = {a.name for a in h1.gens1 + h1.gens2}
    direct = "J R1 R3" in gen_names
    fi = _all(conds1) and _all(knorm) and _all(quot) and _all(contains_k) and direct
    checks += conds1
    checks.append(
        Check(
            f"{tag}.finite_index",
            "H(Gamma1, Gamma312) has finite index in the lattice",
            fi,
            {
                "K_normal": _all(knorm),
                "quotient_bound": next(c.certificate["bound"] for c in quot if c.id.endswith(".order")),
                "K_generators_in_hybrid": {"J R1 R3": "generator of the e1 stabilizer", "J R2 R1": "(R3 J) R1", "J R3 R2": "R1 (R3 J)"},
                "extra_relators": "omitted; the bound holds without them",
            },
        )
    )
    verdicts["finite_index"] = fi
    verdicts["virtually_hybrid"] = fi

    # full lattice, small phase
    if g.phase is Phase.SMALL:
        h2 = build_hybrid(g, HybridLabel.G312_G321)
        conds2 = h2.conditions()
        jword = [c for c in words if c.id.endswith(".J")]
        full = _all(conds2) and _all(jword)
        checks += conds2
        checks.append(
            Check(
                f"{tag}.full_lattice",
                "H(Gamma312, Gamma321) is the whole lattice <R1, J>",
                full,
                {"J": "(R3 J)^-1 (J R3^-1)^-1", "R1": "generator of the v312 stabilizer"},
            )
        )
        verdicts["full_lattice"] = full
    else:
        verdicts["full_lattice"] = None

    # corollaries
    for (p, t), kinds in COROLLARY_PAIRS.items():
        name = "corollary_" + "_".join(k.value for k in kinds)
        if (g.p, str(g.t)) == (p, t):
            c = _corollary(g, kinds, f"{tag}.{name}")
            checks.append(c)
            verdicts[name] = c.passed
        else:
            verdicts.setdefault(name, None)
    return TheoremVerdicts(key, checks, verdicts)
