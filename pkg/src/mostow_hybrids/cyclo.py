"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(d-1) with d = phi(N),
as an integer numerator vector over a single positive denominator. Every
operation reduces modulo the N-th cyclotomic polynomial, so equality is plain
coefficient comparison.

Signs of real elements are decided symbolically for zero and by certified
interval evaluation of the embedding z -> exp(2 pi i / N) otherwise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from contextlib import contextmanager
from functools import lru_cache
from numbers import Rational

import mpmath

__all__ = [
    "CycloField",
    "CycloNum",
    "FieldMismatchError",
    "SignUndecidedError",
    "cyclotomic_polynomial",
    "divisors",
    "field_for_params",
    "sign_of_real",
    "root_of_unity_order",
    "abs_squared",
    "interval_value",
]

_START_BITS = 64
_MAX_BITS = 4096


@contextmanager
def _iv_precision(bits):
    iv = mpmath.iv
    saved = iv.prec
    iv.prec = bits
    try:
        yield iv
    finally:
        iv.prec = saved


class FieldMismatchError(ValueError):
    """Operands live in different cyclotomic fields."""


class SignUndecidedError(ArithmeticError):
    """Interval evaluation failed to separate a nonzero value from 0."""


def divisors(n):
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _prime_factors(n):
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _poly_divexact(num, den):
    # integer polynomials, low degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    assert not any(num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n == 1:
        return (-1, 1)
    primes = _prime_factors(n)
    rad = math.prod(primes)
    if rad != n:
        base = cyclotomic_polynomial(rad)
        step = n // rad
        out = [0] * ((len(base) - 1) * step + 1)
        for k, c in enumerate(base):
            out[k * step] = c
        return tuple(out)
    # squarefree: (x^n - 1) / prod_{d | n, d < n} Phi_d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _pack(coeffs, width):
    x = 0
    for c in reversed(coeffs):
        x = (x << width) + c
    return x


def _unpack(x, width, count):
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    full = 1 << width
    out = []
    for _ in range(count):
        low = x & mask
        if low >= half:
            low -= full
        out.append(low)
        x = (x - low) >> width
    return out


def _poly_mul(a, b):
    # Kronecker substitution: one big-integer product instead of d^2 loops.
    ma = max(map(abs, a))
    mb = max(map(abs, b))
    n = len(a) + len(b) - 1
    if not ma or not mb:
        return [0] * n
    width = (ma * mb * min(len(a), len(b))).bit_length() + 2
    return _unpack(_pack(a, width) * _pack(b, width), width, n)


class CycloField:
    """The cyclotomic field Q(zeta_N), N >= 1."""

    _instances: dict = {}

    def __new__(cls, conductor):
        conductor = int(conductor)
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        # one instance per conductor so identity comparison is field equality
        inst = cls._instances.get(conductor)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(conductor)
            cls._instances[conductor] = inst
        return inst

    def _setup(self, n):
        self.conductor = n
        phi = cyclotomic_polynomial(n)
        self.modulus = phi
        self.degree = len(phi) - 1
        # z^d = -sum_{j<d} phi_j z^j
        self._tail = tuple((j, c) for j, c in enumerate(phi[:-1]) if c)
        self._cos_cache = {}
        self._units = tuple(a for a in range(1, n + 1) if math.gcd(a, n) == 1)
        self._cyclic = _unit_group_basis(n)

    def __repr__(self):
        return f"CycloField({self.conductor})"

    def __reduce__(self):
        return (CycloField, (self.conductor,))

    # -- reduction -------------------------------------------------------

    def _reduce(self, coeffs):
        d = self.degree
        if len(coeffs) <= d:
            return coeffs + [0] * (d - len(coeffs))
        r = list(coeffs)
        tail = self._tail
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c:
                base = k - d
                for j, cj in tail:
                    r[base + j] -= c * cj
        return r[:d]

    def _from_exponents(self, pairs, den=1):
        # pairs: iterable of (exponent, integer coefficient), exponents mod N
        n = self.conductor
        buf = [0] * max(n, self.degree)
        for e, c in pairs:
            buf[e % n] += c
        return CycloNum._make(self, self._reduce(buf), den)

    # -- constructors ----------------------------------------------------

    def __call__(self, value):
        return self.coerce(value)

    def coerce(self, value):
        if isinstance(value, CycloNum):
            if value.field is not self:
                raise FieldMismatchError(f"{value.field!r} vs {self!r}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return CycloNum._make(self, [value] + [0] * (self.degree - 1), 1)
        if isinstance(value, Rational):
            q = Fraction(value)
            return CycloNum._make(self, [q.numerator] + [0] * (self.degree - 1), q.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def zeta(self, k=1):
        """zeta_N ** k for any integer k."""
        return self._from_exponents([(k, 1)])

    def root_of_unity(self, order, k=1):
        """exp(2 pi i k / order); order must divide N."""
        if self.conductor % order:
            raise ValueError(f"zeta_{order} is not in {self!r}")
        return self.zeta(k * (self.conductor // order))

    def exp_i_pi(self, q):
        """exp(i pi q) for rational q, when it lies in the field."""
        q = Fraction(q)
        e = q * self.conductor / 2
        if e.denominator != 1:
            raise ValueError(f"exp(i pi * {q}) is not in {self!r}")
        return self.zeta(int(e))

    @property
    def i(self):
        return self.root_of_unity(4)

    def element(self, coeffs, den=1):
        """Element from rational power-basis coefficients (any length)."""
        fr = [Fraction(c) for c in coeffs]
        common = math.lcm(*(f.denominator for f in fr), 1) if fr else 1
        ints = [f.numerator * (common // f.denominator) for f in fr]
        return self._from_exponents(enumerate(ints), common * den)

    def embed(self, x):
        """Coerce x from a subfield Q(zeta_M), M | N, into this field."""
        src = x.field
        if self.conductor % src.conductor:
            raise FieldMismatchError(f"{src!r} is not a subfield of {self!r}")
        step = self.conductor // src.conductor
        return self._from_exponents(((k * step, c) for k, c in enumerate(x.num)), x.den)

    # -- numerics --------------------------------------------------------

    def _cos_table(self, bits):
        table = self._cos_cache.get(bits)
        if table is None:
            with _iv_precision(bits) as iv:
                two_pi = 2 * iv.pi
                table = [iv.cos(two_pi * k / self.conductor) for k in range(self.degree)]
            self._cos_cache[bits] = table
        return table


class CycloNum:
    """An element of Q(zeta_N); immutable."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, coeffs, den=1):
        x = field.element(coeffs, den)
        self.field, self.num, self.den, self._hash = x.field, x.num, x.den, None

    @classmethod
    def _make(cls, field, num, den):
        g = math.gcd(den, *num)
        if den < 0:
            g = -g
        if g not in (0, 1):
            num = [c // g for c in num]
            den //= g
        obj = object.__new__(cls)
        obj.field = field
        obj.num = tuple(num)
        obj.den = den
        obj._hash = None
        return obj

    # -- coercion helpers ------------------------------------------------

    def _other(self, other):
        if isinstance(other, CycloNum):
            if other.field is not self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Rational)):
            return self.field.coerce(other)
        return NotImplemented

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            num = [a + b for a, b in zip(self.num, o.num)]
            return CycloNum._make(self.field, num, self.den)
        num = [a * o.den + b * self.den for a, b in zip(self.num, o.num)]
        return CycloNum._make(self.field, num, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._make(self.field, [-a for a in self.num], self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        prod = _poly_mul(self.num, o.num)
        return CycloNum._make(self.field, self.field._reduce(prod), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        k = abs(k)
        acc = self.field.one
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def galois(self, a):
        """Apply the automorphism zeta -> zeta^a (a coprime to N)."""
        n = self.field.conductor
        if math.gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit mod {n}")
        return self.field._from_exponents(((a * k, c) for k, c in enumerate(self.num) if c), self.den)

    def conj(self):
        """Complex conjugation, zeta -> zeta^(N-1)."""
        return self.galois(self.field.conductor - 1)

    def inv(self):
        """Multiplicative inverse; ZeroDivisionError on 0.

        Uses x^-1 = prod_{a != 1} sigma_a(x) / N(x), the norm being rational.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in " + repr(self.field))
        if self.is_rational():
            return self.field.coerce(Fraction(self.den, self.num[0]))
        f = self.field
        # clear the denominator first; sigma_a fixes rationals
        base = CycloNum._make(f, list(self.num), 1)
        # Walk the unit group one cyclic factor <g> of order m at a time:
        # y -> prod_k sigma_g^k(y), tracking the cofactor with base * cof = y.
        y, cof = base, f.one
        for g, m in f._cyclic:
            rest = _orbit_product(y.galois(g), g, m - 1, f.conductor)
            cof = cof * rest
            y = y * rest
        norm = y
        assert norm.is_rational(), "norm left the rationals"
        return cof * Fraction(self.den * norm.den, norm.num[0])

    # -- predicates / conversions ---------------------------------------

    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def is_real(self):
        return self == self.conj()

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def real_part(self):
        return (self + self.conj()) * Fraction(1, 2)

    def to_complex(self, dps=30):
        n = self.field.conductor
        with mpmath.workdps(dps + 10):
            z = mpmath.mpf(0)
            for k, c in enumerate(self.num):
                if c:
                    z += c * mpmath.expjpi(mpmath.mpf(2 * k) / n)
            z /= self.den
        return z

    def __complex__(self):
        return complex(self.to_complex(17))

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return other.field is self.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.conductor, self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def exact(self):
        """Exact text form in the power basis, z = exp(2 pi i / N)."""
        terms = []
        for k, c in enumerate(self.num):
            if c:
                q = Fraction(c, self.den)
                terms.append(str(q) if k == 0 else f"{q}*z^{k}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"<{self.exact()} in Q(z{self.field.conductor})>"

    def __str__(self):
        z = self.to_complex(12)
        return mpmath.nstr(z, 10)


# -- module-level operations ---------------------------------------------


def _unit_group_basis(n):
    """(g, m) pairs with (Z/n)^x the internal direct product of the <g>.

    Uses the prime-power factorization: odd prime powers and 4 have cyclic
    unit groups, 2^k (k >= 3) is <-1> x <5>; generators are lifted by CRT.
    """
    parts = []
    for q in _prime_factors(n):
        k = 0
        m = n
        while m % q == 0:
            m //= q
            k += 1
        qk = q ** k
        if q == 2:
            if k == 2:
                parts.append((qk, 3, 2))
            elif k >= 3:
                parts.append((qk, qk - 1, 2))
                parts.append((qk, 5, 2 ** (k - 2)))
        else:
            order = qk - qk // q
            g = next(a for a in range(2, qk) if _has_order(a, order, qk))
            parts.append((qk, g, order))
    out = []
    for qk, g, order in parts:
        other = n // qk
        # x = g mod qk, x = 1 mod other
        x = g if other == 1 else (g * other * pow(other, -1, qk) + qk * pow(qk, -1, other)) % n
        out.append((x % n, order))
    return tuple(out)


def _has_order(a, order, mod):
    if pow(a, order, mod) != 1:
        return False
    return all(pow(a, order // r, mod) != 1 for r in _prime_factors(order))


def _orbit_product(y, g, count, n):
    """prod_{k < count} sigma_g^k(y) with O(log count) multiplications."""
    if count == 0:
        return y.field.one
    if count == 1:
        return y
    half = count // 2
    p = _orbit_product(y, g, half, n)
    p = p * p.galois(pow(g, half, n))
    if count % 2:
        p = p * y.galois(pow(g, count - 1, n))
    return p


def field_for_params(p, t):
    """Smallest field used for the Mostow group Gamma(p, t).

    Conductor lcm(4, 2p, 6b) for t = a/b in lowest terms; it contains
    eta = exp(i pi / p), phi = exp(i pi t / 3), i and 1/(2 sin(pi/p)).
    """
    if p not in (3, 4, 5):
        raise ValueError(f"p must be 3, 4 or 5, got {p}")
    t = Fraction(t)
    return CycloField(math.lcm(4, 2 * p, 6 * t.denominator))


def abs_squared(x):
    """x * conj(x), a real element."""
    return x * x.conj()


def sign_of_real(x):
    """Exact sign of a real field element: -1, 0 or +1."""
    if not x.is_real():
        raise ValueError(f"sign_of_real needs a real element, got {x!r}")
    if x.is_zero():
        return 0
    if x.is_rational():
        return 1 if x.num[0] > 0 else -1
    return _interval_sign(x)


def _interval_sign(x):
    bits = _START_BITS
    f = x.field
    while bits <= _MAX_BITS:
        table = f._cos_table(bits)
        with _iv_precision(bits) as iv:
            acc = iv.mpf(0)
            for k, c in enumerate(x.num):
                if c:
                    acc += c * table[k]
        if acc.a > 0:
            return 1
        if acc.b < 0:
            return -1
        bits *= 2
    raise SignUndecidedError(f"could not separate {x!r} from 0 at {_MAX_BITS} bits")


def interval_value(x, bits=_START_BITS):
    """Certified real interval containing the real element x."""
    if not x.is_real():
        raise ValueError("interval_value needs a real element")
    table = x.field._cos_table(bits)
    with _iv_precision(bits) as iv:
        acc = iv.mpf(0)
        for k, c in enumerate(x.num):
            if c:
                acc += c * table[k]
        return acc / x.den


def root_of_unity_order(x):
    """Multiplicative order of x if it is a root of unity, else None.

    Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
    """
    if abs_squared(x) != 1:
        raise ValueError(f"{x!r} does not have unit modulus")
    bound = math.lcm(2, x.field.conductor)
    for n in divisors(bound):
        if x ** n == 1:
            return n
    return None
