"""The Hermitian space C^{2,1}: forms, vectors, complex lines.

Inner products follow the convention <x, y> = x^T H conj(y): linear in the
first slot, conjugate-linear in the second. Projective points are kept as
exact lifts and never normalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cyclo import abs_squared, field_for_params, sign_of_real
from .matrix import conj_transpose, cross_kernel, det, from_rows, proportional, trace


class SignatureError(ValueError):
    """A form does not have the required signature (2, 1)."""


@dataclass(frozen=True)
class HVector:
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise ValueError("empty vector")
        field = coords[0].field
        coords = tuple(field.coerce(c) for c in coords)
        if all(c.is_zero() for c in coords):
            raise ValueError("HVector must be nonzero")
        object.__setattr__(self, "coords", coords)

    @property
    def field(self):
        return self.coords[0].field

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __len__(self):
        return len(self.coords)

    def scaled(self, c):
        return HVector(tuple(x * c for x in self.coords))

    def is_proportional(self, other):
        return proportional(self.coords, tuple(other))


@dataclass(frozen=True, eq=False)
class HermitianForm:
    """A Hermitian matrix over a cyclotomic field."""

    matrix: tuple
    params: tuple = None

    def __post_init__(self):
        if self.matrix != conj_transpose(self.matrix):
            raise ValueError("matrix is not Hermitian")

    @property
    def field(self):
        return self.matrix[0][0].field

    @property
    def dim(self):
        return len(self.matrix)

    def linear_form(self, y):
        """Coefficients w with <x, y> = sum_i x_i w_i, i.e. w = H conj(y)."""
        yb = [c.conj() for c in y]
        return tuple(_dot(row, yb) for row in self.matrix)

    def inner(self, x, y):
        return _dot(tuple(x), self.linear_form(y))

    def norm(self, x):
        return self.inner(x, x)

    def signature(self):
        return signature(self)


def _dot(u, v):
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


@dataclass(frozen=True, eq=False)
class ComplexLine:
    """The complex line polar^perp, for a positive polar vector."""

    polar: HVector
    form: HermitianForm
    label: str = ""

    def __post_init__(self):
        if sign_of_real(self.form.norm(self.polar)) <= 0:
            raise ValueError(f"polar vector of {self.label or 'line'} is not positive")

    def contains(self, x):
        return self.form.inner(x, self.polar).is_zero()


# -- construction --------------------------------------------------------


def mostow_constants(p, t):
    """(field, eta, phi, alpha, i) for the pair (p, t)."""
    t = Fraction(t)
    f = field_for_params(p, t)
    i = f.i
    eta = f.exp_i_pi(Fraction(1, p))
    phi = f.exp_i_pi(t / 3)
    # 2 sin(pi/p) = -i (eta - conj(eta))
    alpha = (-i * (eta - eta.conj())).inv()
    return f, eta, phi, alpha, i


def mostow_form(p, t, check=True):
    """The Hermitian form H(p, t) preserved by Mostow's reflections."""
    t = Fraction(t)
    f, eta, phi, alpha, i = mostow_constants(p, t)
    a_phi = alpha * phi
    a_phib = alpha * phi.conj()
    rows = [
        [1, -a_phi, -a_phib],
        [-a_phib, 1, -a_phi],
        [-a_phi, -a_phib, 1],
    ]
    form = HermitianForm(from_rows(f, rows), params=(p, t))
    if check:
        sig = signature(form)
        if sig != (2, 1, 0):
            raise SignatureError(f"H({p}, {t}) has signature {sig}, expected (2, 1, 0)")
    return form


# -- operations ----------------------------------------------------------


def inner(x, y, form):
    return form.inner(x, y)


def _sign_changes(signs):
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _leading_minors(m):
    n = len(m)
    return [det(tuple(tuple(row[:k]) for row in m[:k])) if k > 1 else m[0][0] for k in range(1, n + 1)]


def charpoly(m):
    """Coefficients of det(xI - M), highest degree first (2x2 or 3x3)."""
    if len(m) == 2:
        return [m[0][0].field.one, -trace(m), det(m)]
    c2 = (
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1]
    )
    return [m[0][0].field.one, -trace(m), c2, -det(m)]


def signature(form):
    """Exact inertia (n_plus, n_minus, n_zero) of a 2x2 or 3x3 Hermitian form.

    Leading principal minors when none vanishes; otherwise Descartes' rule on
    the characteristic polynomial, exact because all its roots are real.
    """
    m = form.matrix if isinstance(form, HermitianForm) else form
    if m != conj_transpose(m):
        raise ValueError("signature of a non-Hermitian matrix")
    n = len(m)
    minors = [sign_of_real(d) for d in _leading_minors(m)]
    if all(minors):
        neg = _sign_changes([1] + minors)
        return (n - neg, neg, 0)
    coeffs = [sign_of_real(c) for c in charpoly(m)]
    zero = 0
    while zero < n and coeffs[n - zero] == 0:
        zero += 1
    pos = _sign_changes(coeffs)
    flipped = [c if (n - k) % 2 == 0 else -c for k, c in enumerate(coeffs)]
    neg = _sign_changes(flipped)
    return (pos, neg, zero)


def norm_sign(x, form):
    """-1 inside complex hyperbolic space, 0 on its boundary, +1 outside."""
    return sign_of_real(form.norm(x))


def line_intersection(l1, l2, form=None):
    """A vector orthogonal to both polar vectors (unique up to scale)."""
    form = form or l1.form
    p1 = l1.polar if isinstance(l1, ComplexLine) else l1
    p2 = l2.polar if isinstance(l2, ComplexLine) else l2
    x = cross_kernel((form.linear_form(p1), form.linear_form(p2)))
    if all(c.is_zero() for c in x):
        raise ValueError("polar vectors are proportional; the lines coincide")
    return HVector(x)


def is_orthogonal(l1, l2, form=None):
    form = form or l1.form
    p1 = l1.polar if isinstance(l1, ComplexLine) else l1
    p2 = l2.polar if isinstance(l2, ComplexLine) else l2
    return form.inner(p1, p2).is_zero()


def bergman_distance(x, y, form, dps=30):
    """Distance between the points [x], [y] of complex hyperbolic space.

    cosh^2(d/2) = |<x,y>|^2 / (<x,x><y,y>); the ratio is computed exactly and
    only the final acosh is numeric.
    """
    nx, ny = form.norm(x), form.norm(y)
    if sign_of_real(nx) >= 0 or sign_of_real(ny) >= 0:
        raise ValueError("bergman_distance needs negative vectors")
    ratio = abs_squared(form.inner(x, y)) / (nx * ny)
    if ratio == 1:
        return mpmath.mpf(0)
    with mpmath.workdps(dps + 10):
        r = ratio.to_complex(dps + 10).real
        d = 2 * mpmath.acosh(mpmath.sqrt(r))
    return +d
