"""Restriction of line stabilizers to Moebius transformations of a chart.

A complex line L = v^perp is parametrized by an affine lift z -> z u + w with
u, w spanning v^perp. An isometry A preserving L sends u and w back into
span(u, w); writing A u = a u + c w and A w = b u + d w, A acts on the chart
coordinate by z -> (a z + b) / (c z + d).

Restrictions are kept as GL(2) matrices over the cyclotomic field, up to
scalar. The scale-free quantity tr^2 / det is real and equals |tr|^2 of the
SU(1,1) normalization, so it classifies without square roots.
"""

from __future__ import annotations

import math

import mpmath
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .cyclo import abs_squared, sign_of_real
from .hermitian import ComplexLine, HVector
from .isometry import eigen_residual, minimal_exponent
from .matrix import det2, flatten, is_scalar, mat_mul, mat_pow, mat_vec, proportional, trace
from .mostow import Phase, basis_vector, polar_vectors
from .report import Check

INF = math.inf


class NotStabilizedError(ValueError):
    """The isometry does not preserve the chart's line."""

    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


# -- charts --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LineChart:
    """Affine parametrization z -> z u + w of the line polar^perp."""

    polar: HVector
    u: tuple
    w: tuple
    form: object
    name: str = ""

    def __post_init__(self):
        # affine in z, so orthogonality of u and w covers every z
        f = self.form
        if not (f.inner(self.u, self.polar).is_zero() and f.inner(self.w, self.polar).is_zero()):
            raise ValueError(f"chart {self.name}: lift is not orthogonal to the polar vector")
        if _pivot_minor(self.u, self.w) is None:
            raise ValueError(f"chart {self.name}: u and w are dependent")

    def lift(self, z):
        z = self.form.field.coerce(z)
        return HVector(tuple(z * a + b for a, b in zip(self.u, self.w)))

    def line(self):
        """The ComplexLine (requires a positive polar vector)."""
        return ComplexLine(self.polar, self.form, self.name)

    def transported(self, g, name=""):
        """Chart for g(L), pushing u and w forward by the isometry g."""
        return LineChart(
            g.apply(self.polar),
            mat_vec(g.matrix, self.u),
            mat_vec(g.matrix, self.w),
            self.form,
            name or f"{g.name}({self.name})",
        )


def _pivot_minor(u, w):
    for r in range(len(u)):
        for s in range(r + 1, len(u)):
            m = u[r] * w[s] - u[s] * w[r]
            if not m.is_zero():
                return r, s, m
    return None


def chart_e1(g):
    """e1^perp = {[z, phi z / alpha - phi^2, 1]}."""
    f, phi, alpha = g.field, g.phi, g.alpha
    u = (f.one, phi * alpha.inv(), f.zero)
    w = (f.zero, -phi * phi, f.one)
    return LineChart(basis_vector(g, 1), u, w, g.form, "e1")


def chart_v312(g):
    """v312^perp = {[z, i conj(eta) conj(phi), 1]}."""
    f = g.field
    c = f.i * g.eta.conj() * g.phi.conj()
    return LineChart(polar_vectors(g)["312"], (f.one, f.zero, f.zero), (f.zero, c, f.one), g.form, "v312")


def chart_v321(g):
    """v321^perp = {[i conj(eta) phi, z, 1]}."""
    f = g.field
    c = f.i * g.eta.conj() * g.phi
    return LineChart(polar_vectors(g)["321"], (f.zero, f.one, f.zero), (c, f.zero, f.one), g.form, "v321")


CHARTS = {"e1": chart_e1, "v312": chart_v312, "v321": chart_v321}


# -- Moebius classes -----------------------------------------------------


class MobiusKind(Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class MobiusType:
    kind: MobiusKind
    order: object = None  # int for elliptic of finite order, inf for parabolic

    def __str__(self):
        if self.kind is MobiusKind.ELLIPTIC:
            return f"Elliptic({self.order})"
        return self.kind.value.capitalize()


class MobiusClass:
    """A 2x2 matrix over the field up to nonzero scalar."""

    __slots__ = ("entries", "det")

    def __init__(self, entries):
        self.entries = tuple(tuple(r) for r in entries)
        self.det = det2(self.entries)
        if self.det.is_zero():
            raise ValueError("singular 2x2 matrix")

    @property
    def field(self):
        return self.det.field

    def trace(self):
        return trace(self.entries)

    def __matmul__(self, other):
        return MobiusClass(mat_mul(self.entries, other.entries))

    def inverse(self):
        (a, b), (c, d) = self.entries
        return MobiusClass(((d, -b), (-c, a)))

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        return MobiusClass(mat_pow(base.entries, abs(k)))

    def scaled(self, lam):
        return MobiusClass(tuple(tuple(lam * x for x in row) for row in self.entries))

    def is_scalar(self):
        return is_scalar(self.entries)

    def __eq__(self, other):
        if not isinstance(other, MobiusClass):
            return NotImplemented
        return proportional(flatten(self.entries), flatten(other.entries))

    __hash__ = None

    def apply(self, z):
        (a, b), (c, d) = self.entries
        return (a * z + b) / (c * z + d)

    def __repr__(self):
        return f"MobiusClass({self.entries!r})"


def restrict_isometry(a, chart):
    """The Moebius class induced by a on the chart coordinate."""
    res = eigen_residual(a, chart.polar)
    if res is not None:
        raise NotStabilizedError(
            f"{a.name or 'isometry'} does not stabilize {chart.name}: A v is not a multiple of v", res
        )
    r, s, m = _pivot_minor(chart.u, chart.w)
    minv = m.inv()
    u, w = chart.u, chart.w

    def coords(x):
        # Cramer on rows r, s: x = alpha u + beta w
        al = (x[r] * w[s] - x[s] * w[r]) * minv
        be = (u[r] * x[s] - u[s] * x[r]) * minv
        return al, be

    au, aw = mat_vec(a.matrix, u), mat_vec(a.matrix, w)
    ca, cc = coords(au)
    cb, cd = coords(aw)
    return MobiusClass(((ca, cb), (cc, cd)))


def mobius_trace_invariant(m):
    """tr^2 / det: real, scalar-invariant, = |tr|^2 after SU normalization."""
    tr = m.trace()
    return tr * tr * m.det.inv()


def classify_mobius(m, bound=None):
    """Elliptic (with order), parabolic or hyperbolic, from tr^2/det vs 4."""
    s = mobius_trace_invariant(m)
    if not s.is_real():
        raise ValueError("tr^2/det is not real; matrix is not a multiple of an SU(1,1) element")
    sign = sign_of_real(s - 4)
    if sign > 0:
        return MobiusType(MobiusKind.HYPERBOLIC)
    if sign == 0 and not m.is_scalar():
        return MobiusType(MobiusKind.PARABOLIC, INF)
    if bound is None:
        bound = 2 * math.lcm(2, m.field.conductor)
    n = minimal_exponent(lambda k: is_scalar(mat_pow(m.entries, k)), bound)
    return MobiusType(MobiusKind.ELLIPTIC, n)


# -- triangle signatures ---------------------------------------------------


def _entry(x):
    if x in (INF, "inf", "∞", "oo"):
        return INF
    n = int(x)
    if n < 2:
        raise ValueError(f"signature entries must be >= 2 or infinity, got {x}")
    return n


@dataclass(frozen=True, order=True)
class TriangleSignature:
    """(x, y, z), sorted ascending with infinity last."""

    entries: tuple

    def __post_init__(self):
        e = tuple(sorted(_entry(x) for x in self.entries))
        if len(e) != 3:
            raise ValueError("a triangle signature has three entries")
        object.__setattr__(self, "entries", e)

    @classmethod
    def parse(cls, text):
        text = text.strip().lstrip("△").strip("() ")
        return cls(tuple(x.strip() for x in text.split(",")))

    def __iter__(self):
        return iter(self.entries)

    def euler_sum(self):
        return sum((Fraction(0) if x == INF else Fraction(1, x)) for x in self.entries)

    def is_hyperbolic(self):
        return self.euler_sum() < 1

    def is_cocompact(self):
        return INF not in self.entries

    def key(self):
        return ",".join("inf" if x == INF else str(x) for x in self.entries)

    def __str__(self):
        return "△(" + ",".join("∞" if x == INF else str(x) for x in self.entries) + ")"


class Gamma(Enum):
    G312 = "Gamma312"
    G1 = "Gamma1"
    G321 = "Gamma321"


# chart, A, B, product word in A and B
PAIR_DATA = {
    Gamma.G312: ("v312", "R1", "R3 J", "A^-1 B"),
    Gamma.G1: ("e1", "J^-1 R1 R2", "J R1 R3", "A B"),
    Gamma.G321: ("v321", "R2", "J R3^-1", "A^-1 B"),
}


class RegimeError(ValueError):
    pass


def _require_regime(kind, g):
    if kind is Gamma.G321 and g.phase is not Phase.SMALL:
        raise RegimeError(f"Gamma321 is only considered for small phase shift; ({g.p},{g.t}) is {g.phase.value}")


def stabilizer_restrictions(kind, g):
    """(chart, A, B, restricted A, restricted B, restricted product)."""
    kind = Gamma(kind)
    _require_regime(kind, g)
    cname, wa, wb, prod = PAIR_DATA[kind]
    chart = CHARTS[cname](g)
    a, b = g.word(wa), g.word(wb)
    ma, mb = restrict_isometry(a, chart), restrict_isometry(b, chart)
    mp = (ma.inverse() @ mb) if prod == "A^-1 B" else (ma @ mb)
    return chart, a, b, ma, mb, mp


def _order_of(t):
    if t.kind is MobiusKind.HYPERBOLIC:
        raise ValueError("hyperbolic element; no triangle group signature")
    if t.order is None:
        raise ValueError("elliptic element of infinite or undetected order")
    return t.order


def triangle_signature(kind, g, detail=False):
    """Signature of the triangle group generated by the restricted A and B."""
    _, _, _, ma, mb, mp = stabilizer_restrictions(kind, g)
    types = [classify_mobius(m) for m in (ma, mb, mp)]
    sig = TriangleSignature(tuple(_order_of(t) for t in types))
    if detail:
        return sig, types
    return sig


# -- closed-form traces ----------------------------------------------------


def _closed_forms(kind, g):
    f, p, t = g.field, g.p, g.t
    e = f.exp_i_pi
    one = f.one
    if kind is Gamma.G312:
        return (one + e(Fraction(2, p)), f.zero, one + e(t - Fraction(1, 2) + Fraction(1, p)))
    if kind is Gamma.G1:
        return (
            one + e(t + Fraction(1, 2) - Fraction(1, p)),
            one + e(t - Fraction(1, 2) + Fraction(1, p)),
            -one + e(Fraction(6, p)),
        )
    return (
        e(Fraction(1, p)) + e(Fraction(-1, p)),
        f.zero,
        e(Fraction(1, 2) + Fraction(1, p) - t / 3) - e(2 * t / 3),
    )


_CLOSED_TEXT = {
    Gamma.G312: ("|1 + e^(2 pi i/p)|^2", "0", "|1 + e^(i pi (t - 1/2 + 1/p))|^2"),
    Gamma.G1: ("|1 + e^(i pi (t + 1/2 - 1/p))|^2", "|1 + e^(i pi (t - 1/2 + 1/p))|^2", "|-1 + e^(6 pi i/p)|^2"),
    Gamma.G321: ("|e^(i pi/p) + e^(-i pi/p)|^2", "0", "|e^(i pi (1/2 + 1/p - t/3)) - e^(2 pi i t/3)|^2"),
}


def verify_trace_formulas(g, kinds=None):
    """Compare tr^2/det of A, B and the product with the closed forms, exactly.

    Also checks sign(invariant - 4): <= 0 for Gamma312 and Gamma1, strictly
    < 0 for Gamma321 (small phase only).
    """
    checks = []
    if kinds is None:
        kinds = [Gamma.G312, Gamma.G1] + ([Gamma.G321] if g.phase is Phase.SMALL else [])
    for kind in kinds:
        kind = Gamma(kind)
        _, _, _, ma, mb, mp = stabilizer_restrictions(kind, g)
        prod = PAIR_DATA[kind][3]
        for role, m, closed, text in zip(("A", "B", prod), (ma, mb, mp), _closed_forms(kind, g), _CLOSED_TEXT[kind]):
            s = mobius_trace_invariant(m)
            target = abs_squared(closed)
            sgn = sign_of_real(s - 4)
            bound_ok = sgn < 0 if kind is Gamma.G321 else sgn <= 0
            rid = f"restrict.trace{g.params.key}.{kind.value}.{role.replace(' ', '')}"
            checks.append(
                Check(
                    rid,
                    f"{kind.value}: |Tr {role}|^2 = {text}",
                    s == target,
                    {"invariant": s.exact(), "closed_form": text, "approx": mpmath.nstr(s.to_complex(15).real, 12)},
                )
            )
            checks.append(
                Check(
                    rid + ".bound",
                    f"{kind.value}: |Tr {role}|^2 {'<' if kind is Gamma.G321 else '<='} 4",
                    bound_ok,
                    {"sign(invariant - 4)": sgn},
                )
            )
    return checks
