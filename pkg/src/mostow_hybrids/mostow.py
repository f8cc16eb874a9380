"""Mostow's groups: generators R1, R2, R3, J over the cyclotomic field.

For p in {3, 4, 5} and rational t the group is generated by three complex
reflections of order p, permuted cyclically by the order-3 map J. The
generators are stored exactly as written down (no det = 1 rescaling), so all
relations are checked in PU(2,1), i.e. up to scalar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .cyclo import sign_of_real
from .datafiles import load_json
from .hermitian import HVector, is_orthogonal, mostow_constants, mostow_form
from .isometry import ProjIsometry, identity_isometry, proj_equal
from .matrix import from_rows, mat_vec, proportional
from .report import Check


class Phase(Enum):
    SMALL = "small"
    CRITICAL = "critical"
    LARGE = "large"


def critical_value(p):
    return Fraction(1, 2) - Fraction(1, p)


def phase_of(p, t):
    d = abs(Fraction(t)) - critical_value(p)
    if d < 0:
        return Phase.SMALL
    if d == 0:
        return Phase.CRITICAL
    return Phase.LARGE


@dataclass(frozen=True)
class MostowParams:
    p: int
    t: Fraction
    phase: Phase
    admissible: bool
    nonarithmetic: bool = None

    @property
    def key(self):
        return f"({self.p},{self.t})"


@lru_cache(maxsize=None)
def _catalogue():
    doc = load_json("admissible_pairs.json")
    out = []
    for row in doc["pairs"]:
        p, t = int(row["p"]), Fraction(row["t"])
        phase = phase_of(p, t)
        if phase.value != row["phase"]:
            raise ValueError(f"admissible_pairs: phase tag of ({p},{t}) disagrees with |t| vs 1/2 - 1/p")
        out.append(MostowParams(p, t, phase, True, bool(row["nonarithmetic"])))
    return tuple(out)


def admissible_pairs():
    """The 17 pairs (p, t), t >= 0, for which the group is discrete."""
    return list(_catalogue())


def params(p, t):
    t = Fraction(t)
    for mp in _catalogue():
        if (mp.p, mp.t) == (p, t):
            return mp
    return MostowParams(p, t, phase_of(p, t), False)


def is_admissible(p, t):
    return params(p, Fraction(t)).admissible


# -- the group -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(R[123]|J|\(|\)|\^\s*-?\d+)")


class WordSyntaxError(ValueError):
    pass


def parse_word(text):
    """Parse words like "J^-1 R1 R2" or "(R3 J)^-1 (J R3^-1)^-1".

    Returns a nested list of (atom, exponent) where atom is a generator name
    or a sub-list.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"cannot parse word at {text[pos:]!r}")
        tokens.append(m.group(1).replace(" ", ""))
        pos = m.end()

    def seq(k, depth):
        out = []
        while k < len(tokens):
            tok = tokens[k]
            if tok == ")":
                if depth == 0:
                    raise WordSyntaxError("unbalanced ')'")
                return out, k + 1
            if tok == "(":
                atom, k = seq(k + 1, depth + 1)
            elif tok.startswith("^"):
                raise WordSyntaxError("exponent without a base")
            else:
                atom, k = tok, k + 1
            exp = 1
            if k < len(tokens) and tokens[k].startswith("^"):
                exp = int(tokens[k][1:])
                k += 1
            out.append((atom, exp))
        if depth:
            raise WordSyntaxError("unbalanced '('")
        return out, k

    word, _ = seq(0, 0)
    if not word:
        raise WordSyntaxError("empty word")
    return word


class MostowGroup:
    """Generators of the lattice for one pair (p, t)."""

    def __init__(self, p, t, check=True):
        t = Fraction(t)
        if p not in (3, 4, 5):
            raise ValueError(f"p must be 3, 4 or 5, got {p}")
        if not abs(t) < 3 * critical_value(p):
            raise ValueError(f"|t| must be < 3(1/2 - 1/{p}) = {3 * critical_value(p)}, got {t}")
        self.params = params(p, t)
        self.form = mostow_form(p, t)
        f, eta, phi, alpha, i = mostow_constants(p, t)
        self.field = f
        self.eta, self.phi, self.alpha = eta, phi, alpha
        a = -i * eta * phi.conj()
        b = -i * eta * phi
        e2 = eta * eta
        rows = {
            "R1": [[e2, a, b], [0, 1, 0], [0, 0, 1]],
            "R2": [[1, 0, 0], [b, e2, a], [0, 0, 1]],
            "R3": [[1, 0, 0], [0, 1, 0], [a, b, e2]],
            "J": [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
        }
        self.gens = {
            name: ProjIsometry(from_rows(f, m), self.form, name, check=check) for name, m in rows.items()
        }

    @property
    def p(self):
        return self.params.p

    @property
    def t(self):
        return self.params.t

    @property
    def phase(self):
        return self.params.phase

    def __getattr__(self, name):
        gens = self.__dict__.get("gens")
        if gens and name in gens:
            return gens[name]
        raise AttributeError(name)

    def __repr__(self):
        return f"MostowGroup(p={self.p}, t={self.t})"

    def identity(self):
        return identity_isometry(self.form)

    def word(self, text):
        """Evaluate a word in R1, R2, R3, J (parentheses and ^n allowed)."""
        g = self._eval(parse_word(text))
        g.name = " ".join(text.split())
        return g

    def _eval(self, word):
        acc = self.identity()
        for atom, exp in word:
            base = self.gens[atom] if isinstance(atom, str) else self._eval(atom)
            acc = acc @ (base ** exp)
        return acc

    # -- polar vectors ---------------------------------------------------

    def polar_vectors(self):
        return polar_vectors(self)


@lru_cache(maxsize=64)
def build_group(p, t):
    """The group for (p, t); cached, since groups are immutable."""
    return MostowGroup(p, Fraction(t))


def verify_relations(g):
    """J^3, R_i^p, braid and conjugation relations, each as a Check."""
    tag = f"mostow.relations{g.params.key}"
    R = [g.R1, g.R2, g.R3]
    J, Jinv = g.J, g.J.inverse()
    checks = [
        Check(f"{tag}.J^3", "J has order 3", (J ** 3).is_scalar(), {"relation": "J^3 = Id"}),
    ]
    for k, r in enumerate(R, 1):
        checks.append(
            Check(f"{tag}.R{k}^p", f"R{k} has order p", (r ** g.p).is_scalar(), {"relation": f"R{k}^{g.p} = Id"})
        )
    for a, b in ((1, 2), (2, 3), (3, 1)):
        ra, rb = R[a - 1], R[b - 1]
        checks.append(
            Check(
                f"{tag}.braid{a}{b}",
                "braid relation",
                proj_equal(ra @ rb @ ra, rb @ ra @ rb),
                {"relation": f"R{a} R{b} R{a} = R{b} R{a} R{b}"},
            )
        )
    for k in range(3):
        nxt = (k + 1) % 3
        checks.append(
            Check(
                f"{tag}.conj{k + 1}",
                "J conjugates R_i to R_(i+1)",
                proj_equal(J @ R[k] @ Jinv, R[nxt]),
                {"relation": f"J R{k + 1} J^-1 = R{nxt + 1}"},
            )
        )
    return checks


# -- polar vectors and mirrors -------------------------------------------

POLAR_LABELS = ("123", "231", "312", "321", "132", "213")


def polar_vectors(g):
    """The six vectors v_ijk, keyed by label "ijk"."""
    f, eta, phi = g.field, g.eta, g.phi
    i = f.i
    a = -i * eta * phi.conj()  # -i eta conj(phi)
    b = i * eta.conj() * phi  # i conj(eta) phi
    c = i * eta.conj() * phi.conj()  # i conj(eta) conj(phi)
    d = -i * eta * phi  # -i eta phi
    one = f.one
    return {
        "123": HVector((a, one, b)),
        "231": HVector((b, a, one)),
        "312": HVector((one, b, a)),
        "321": HVector((c, one, d)),
        "132": HVector((d, c, one)),
        "213": HVector((one, d, c)),
    }


def basis_vector(g, k):
    f = g.field
    return HVector(tuple(f.one if j == k - 1 else f.zero for j in range(3)))


def polar_norm_signs(g):
    vs = polar_vectors(g)
    return {lab: sign_of_real(g.form.norm(v)) for lab, v in vs.items()}


def mirror_word(label):
    """The word J^(+-1) R_j R_k whose mirror is v_ijk^perp."""
    if label not in POLAR_LABELS:
        raise ValueError(f"bad polar label {label!r}; expected one of {POLAR_LABELS}")
    i, j, k = (int(c) for c in label)
    s = "J" if k == i % 3 + 1 else "J^-1"
    return f"{s} R{j} R{k}"


def perp_basis(g, v):
    """Two independent vectors spanning v^perp (for the form of g)."""
    w = g.form.linear_form(v)
    piv = next(k for k, c in enumerate(w) if not c.is_zero())
    zero = g.field.zero
    out = []
    for k in range(3):
        if k == piv:
            continue
        x = [zero, zero, zero]
        x[k] = w[piv]
        x[piv] = -w[k]
        out.append(tuple(x))
    return out


def fixes_pointwise(a, vectors):
    """a acts as one scalar on span(vectors): each vector and their sum are eigenvectors."""
    vectors = list(vectors)
    total = tuple(sum(col[1:], col[0]) for col in zip(*vectors))
    for x in vectors + [total]:
        if not proportional(mat_vec(a.matrix, x), x):
            return False
    return True


def mirror_check(g, label):
    """Whether v_label^perp (or e_k^perp for label "ek") is fixed pointwise by its word."""
    if label in ("e1", "e2", "e3"):
        k = int(label[1])
        v, a = basis_vector(g, k), g.gens[f"R{k}"]
    else:
        v, a = polar_vectors(g)[label], g.word(mirror_word(label))
    return fixes_pointwise(a, perp_basis(g, v))


# -- index-3 criterion ---------------------------------------------------


class Index3(Enum):
    EQUAL = "Equal"
    INDEX_DIVIDING_3 = "IndexDividing3"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class Index3Verdict:
    verdict: Index3
    k: Fraction = None
    l: Fraction = None
    alternative: Index3 = None
    alt_k: Fraction = None
    alt_l: Fraction = None
    note: str = ""


def _equal_test(k, l):
    if k is None or l is None or k.denominator != 1 or l.denominator != 1:
        return Index3.INDEX_DIVIDING_3
    if k % 3 == 0 and l % 3 == 0:
        return Index3.INDEX_DIVIDING_3
    return Index3.EQUAL


def index3_predicate(p, t):
    """Whether the reflection subgroup equals the full group (vs index 3).

    Evaluates k = 1/2 - 1/p - 1/t, l = 1/2 - 1/p + 1/t. Equal iff both are
    integers not both divisible by 3. The alternative reading with
    k = (1/4 - 1/(2p) - t/2)^-1, l = (1/4 - 1/(2p) + t/2)^-1 is reported
    alongside.
    """
    t = Fraction(t)
    c = critical_value(p)
    base = Fraction(1, 4) - Fraction(1, 2 * p)
    ak = 1 / (base - t / 2) if base != t / 2 else None
    al = 1 / (base + t / 2) if base != -t / 2 else None
    alt = _equal_test(ak, al)
    if t == 0:
        return Index3Verdict(
            Index3.INDETERMINATE,
            alternative=alt,
            alt_k=ak,
            alt_l=al,
            note="k and l involve 1/t, undefined at t = 0",
        )
    k, l = c - 1 / t, c + 1 / t
    return Index3Verdict(_equal_test(k, l), k, l, alt, ak, al)


def verify_orthogonality(g):
    """v_ijk _|_ v_jik, v_ijk _|_ v_ikj, and e_i _|_ v_jik for both orders of j, k."""
    vs = polar_vectors(g)
    tag = f"mostow.orthogonality{g.params.key}"
    checks = []
    seen = set()
    for i, j, k in permutations("123"):
        lab = i + j + k
        for other in (j + i + k, i + k + j):
            pair = tuple(sorted((lab, other)))
            if pair in seen:
                continue
            seen.add(pair)
            checks.append(
                Check(f"{tag}.v{pair[0]}_v{pair[1]}", "polar vectors differing by a transposition are orthogonal",
                      is_orthogonal(vs[pair[0]], vs[pair[1]], g.form), {})
            )
        # e_i against v_jik (i in the middle)
        e = basis_vector(g, int(i))
        mid = j + i + k
        checks.append(
            Check(f"{tag}.e{i}_v{mid}", "e_i is orthogonal to v_jik", is_orthogonal(e, vs[mid], g.form), {})
        )
    return checks
