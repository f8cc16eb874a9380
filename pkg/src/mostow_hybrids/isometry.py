"""Projective unitary isometries of the Hermitian space and their types.

Matrices are kept exactly as given (no det = 1 normalization). Every
decision uses scalar-invariant quantities: |tr A|^2 and Re(tr(A)^3 / det A)
for the elliptic / parabolic / loxodromic trichotomy, and proportionality
for equality in PU(2,1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .cyclo import abs_squared, divisors, sign_of_real
from .hermitian import HVector, charpoly
from .matrix import (
    adjugate,
    det,
    flatten,
    identity,
    is_scalar,
    is_zero_matrix,
    mat_add,
    mat_mul,
    mat_pow,
    mat_scale,
    mat_vec,
    proportional,
    trace,
    transpose,
    conj_mat,
)


class IsoType(Enum):
    REGULAR_ELLIPTIC = "regular elliptic"
    SPECIAL_ELLIPTIC = "special elliptic"
    PARABOLIC = "parabolic"
    LOXODROMIC = "loxodromic"

    @property
    def is_elliptic(self):
        return self in (IsoType.REGULAR_ELLIPTIC, IsoType.SPECIAL_ELLIPTIC)


@dataclass(frozen=True)
class IsometryClass:
    tag: IsoType
    discriminant: object
    discriminant_sign: int
    squarefree_minpoly: bool = None

    @property
    def is_elliptic(self):
        return self.tag.is_elliptic


def is_unitary(m, form):
    """A^T H conj(A) == H, i.e. <Ax, Ay> = <x, y>."""
    return mat_mul(mat_mul(transpose(m), form.matrix), conj_mat(m)) == form.matrix


class ProjIsometry:
    """A form-preserving 3x3 matrix, considered up to scalar."""

    __slots__ = ("matrix", "form", "name")

    def __init__(self, matrix, form, name="", check=True):
        self.matrix = tuple(tuple(row) for row in matrix)
        self.form = form
        self.name = name
        if check:
            if not is_unitary(self.matrix, form):
                raise ValueError(f"{name or 'matrix'} does not preserve the form")

    def _wrap(self, m, name=""):
        return ProjIsometry(m, self.form, name, check=False)

    @property
    def field(self):
        return self.form.field

    def __matmul__(self, other):
        name = f"{self.name} {other.name}".strip() if self.name and other.name else ""
        return self._wrap(mat_mul(self.matrix, other.matrix), name)

    def det(self):
        return det(self.matrix)

    def trace(self):
        return trace(self.matrix)

    def inverse(self):
        # |det A| = 1 for unitary A, so A^-1 = adj(A) conj(det A) exactly
        return self._wrap(mat_scale(adjugate(self.matrix), self.det().conj()), self.name and f"({self.name})^-1")

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        return self._wrap(mat_pow(base.matrix, abs(k)))

    def apply(self, v):
        return HVector(mat_vec(self.matrix, tuple(v)))

    def is_scalar(self):
        return is_scalar(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, ProjIsometry):
            return NotImplemented
        return proj_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return f"ProjIsometry({self.name or '?'})"

    def stabilizes(self, polar):
        """True iff the line polar^perp is invariant (polar is an eigenvector)."""
        return eigen_residual(self, polar) is None


def identity_isometry(form):
    return ProjIsometry(identity(form.field, form.dim), form, "Id", check=False)


def eigen_residual(a, v):
    """None if a v is proportional to v, else the offending image vector."""
    image = mat_vec(a.matrix, tuple(v))
    if proportional(image, tuple(v)):
        return None
    return image


def proj_equal(a, b):
    """A = lambda B for some nonzero scalar lambda (exact)."""
    return proportional(flatten(a.matrix), flatten(b.matrix))


def complex_reflection(v, zeta, form):
    """R_{v,zeta}: x -> x + (zeta - 1) <x, v> / <v, v> v, for <v, v> > 0."""
    nv = form.norm(v)
    if sign_of_real(nv) <= 0:
        raise ValueError("complex reflection needs a positive polar vector")
    if abs_squared(zeta) != 1:
        raise ValueError("zeta must have unit modulus")
    w = form.linear_form(v)
    c = (zeta - 1) * nv.inv()
    f = form.field
    rank1 = tuple(tuple(c * vi * wj for wj in w) for vi in v)
    m = mat_add(identity(f, len(v)), rank1)
    return ProjIsometry(m, form, check=False)


def goldman_discriminant(a):
    """f = |tau|^4 - 8 Re(tau^3) + 18 |tau|^2 - 27 for the SU(2,1) lift.

    tau = tr A / cbrt(det A); |tau|^2 = |tr A|^2 and tau^3 = tr(A)^3 / det A,
    with 1/det A = conj(det A) for unitary A.
    """
    tr = a.trace()
    d = a.det()
    t2 = abs_squared(tr)
    cube = tr * tr * tr * d.conj()
    re_cube = cube.real_part()
    return t2 * t2 - 8 * re_cube + 18 * t2 - 27


def _poly_trim(p):
    k = 0
    while k < len(p) - 1 and p[k].is_zero():
        k += 1
    return p[k:]


def _poly_rem(a, b):
    # coefficients highest first, over the field
    a = list(a)
    lead_inv = b[0].inv()
    while len(a) >= len(b):
        q = a[0] * lead_inv
        for k in range(len(b)):
            a[k] = a[k] - q * b[k]
        a.pop(0)
    return _poly_trim(a) if a else []


def _poly_gcd(a, b):
    a, b = _poly_trim(a), _poly_trim(b)
    while b and any(not c.is_zero() for c in b):
        a, b = b, _poly_rem(a, b)
    return a


def _poly_quot(a, b):
    a = list(a)
    out = []
    lead_inv = b[0].inv()
    while len(a) >= len(b):
        q = a[0] * lead_inv
        out.append(q)
        for k in range(len(b)):
            a[k] = a[k] - q * b[k]
        a = a[1:]
    return out


def _poly_at_matrix(p, m):
    f = m[0][0].field
    acc = mat_scale(identity(f, len(m)), p[0])
    for c in p[1:]:
        acc = mat_add(mat_mul(acc, m), mat_scale(identity(f, len(m)), c))
    return acc


def minpoly_is_squarefree(m):
    """Whether A is diagonalizable: rad(charpoly)(A) == 0."""
    chi = charpoly(m)
    n = len(chi) - 1
    deriv = [c * (n - k) for k, c in enumerate(chi[:-1])]
    g = _poly_gcd(chi, deriv)
    rad = _poly_quot(chi, g) if len(g) > 1 else chi
    return is_zero_matrix(_poly_at_matrix(rad, m))


def classify(a):
    """Elliptic (regular or special), parabolic or loxodromic."""
    f = goldman_discriminant(a)
    s = sign_of_real(f)
    if s > 0:
        return IsometryClass(IsoType.LOXODROMIC, f, s)
    if s < 0:
        return IsometryClass(IsoType.REGULAR_ELLIPTIC, f, s)
    sq = minpoly_is_squarefree(a.matrix)
    tag = IsoType.SPECIAL_ELLIPTIC if sq else IsoType.PARABOLIC
    return IsometryClass(tag, f, s, sq)


def minimal_exponent(is_trivial_power, bound):
    """Least n | bound with is_trivial_power(n), or None.

    The exponents n with g^n trivial form the multiples of the order, so
    start at bound and strip prime factors while the power stays trivial.
    """
    if not is_trivial_power(bound):
        return None
    n = bound
    for q in _primes_of(bound):
        while n % q == 0 and is_trivial_power(n // q):
            n //= q
    return n


def _primes_of(n):
    return [q for q in divisors(n)[1:] if all(q % r for r in range(2, int(q ** 0.5) + 1))]


def projective_order(a, bound=None):
    """Least n >= 1 with A^n scalar, searched among divisors of bound."""
    if bound is None:
        bound = 2 * math.lcm(2, a.field.conductor)
    return minimal_exponent(lambda n: is_scalar(mat_pow(a.matrix, n)), bound)
