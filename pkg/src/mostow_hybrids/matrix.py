"""Small exact matrices over a cyclotomic field.

Matrices are tuples of row tuples of CycloNum; vectors are tuples. Only the
handful of operations the geometry needs are provided, all exact.
"""

from __future__ import annotations


def identity(field, n=3):
    one, zero = field.one, field.zero
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def from_rows(field, rows):
    return tuple(tuple(field.coerce(x) for x in row) for row in rows)


def mat_mul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(_dot(row, col) for col in cols) for row in a)


def mat_vec(a, v):
    return tuple(_dot(row, v) for row in a)


def _dot(u, v):
    acc = None
    for x, y in zip(u, v):
        if x.is_zero() or y.is_zero():
            continue
        term = x * y
        acc = term if acc is None else acc + term
    return acc if acc is not None else u[0].field.zero


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def transpose(a):
    return tuple(zip(*a))


def conj_mat(a):
    return tuple(tuple(x.conj() for x in row) for row in a)


def conj_transpose(a):
    return transpose(conj_mat(a))


def trace(a):
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


def det2(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def det3(a):
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def det(a):
    if len(a) == 2:
        return det2(a)
    if len(a) == 3:
        return det3(a)
    raise ValueError("only 2x2 and 3x3 determinants are supported")


def adjugate(a):
    """Classical adjugate, adj(A) A = det(A) I."""
    if len(a) == 2:
        return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        r = [k for k in range(3) if k != i]
        for j in range(3):
            c = [k for k in range(3) if k != j]
            minor = a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]]
            cof[j][i] = minor if (i + j) % 2 == 0 else -minor
    return tuple(tuple(row) for row in cof)


def mat_pow(a, k, mul=mat_mul):
    """a**k for k >= 0 by repeated squaring."""
    if k < 0:
        raise ValueError("negative powers need an inverse")
    result = identity(a[0][0].field, len(a))
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def is_zero_matrix(a):
    return all(x.is_zero() for row in a for x in row)


def is_scalar(a):
    d = a[0][0]
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if i == j:
                if x != d:
                    return False
            elif not x.is_zero():
                return False
    return not d.is_zero()


def proportional(u, v):
    """True iff the flat sequences u, v are nonzero multiples of each other."""
    pivot = next((k for k, y in enumerate(v) if not y.is_zero()), None)
    if pivot is None or u[pivot].is_zero():
        return False
    up, vp = u[pivot], v[pivot]
    return all((x * vp) == (up * y) for x, y in zip(u, v))


def flatten(a):
    return tuple(x for row in a for x in row)


def cross_kernel(rows):
    """Nonzero vector killed by two independent linear forms on C^3.

    The cross product of the two coefficient rows; zero iff they are dependent.
    """
    (a0, a1, a2), (b0, b1, b2) = rows
    return (a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)
