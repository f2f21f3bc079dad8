"""Exact linear algebra over the rationals.

Matrices are tuples of tuples of `fractions.Fraction`; vectors are tuples.
Everything here is pure and allocation-happy — dimensions in this package
are the Picard number of a surface, i.e. tiny.
"""

from fractions import Fraction

from .errors import DegenerateFormError, InputError

Matrix = tuple
Vector = tuple


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(f"not an exact rational: {x!r}")


def vector(entries) -> Vector:
    return tuple(to_fraction(x) for x in entries)


def matrix(rows) -> Matrix:
    rows = tuple(vector(r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InputError("ragged matrix")
    return rows


def identity(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_vec(m: Matrix, v: Vector) -> Vector:
    if len(m[0]) != len(v):
        raise InputError("dimension mismatch in mat_vec")
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise InputError("dimension mismatch in mat_mul")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    c = to_fraction(c)
    return tuple(c * a for a in v)


def zero_vector(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises DegenerateFormError on singular input."""
    n = len(m)
    a = [list(row) + list(identity(n)[i]) for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise DegenerateFormError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def solve(m: Matrix, b: Vector) -> Vector:
    return mat_vec(inverse(m), b)


def rref(m: Matrix):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    a = [list(r) for r in m]
    n_rows, n_cols = len(a), len(a[0]) if a else 0
    pivots = []
    row = 0
    for col in range(n_cols):
        piv = next((r for r in range(row, n_rows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        a[row] = [x / p for x in a[row]]
        for r in range(n_rows):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    return tuple(tuple(r) for r in a), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix):
    """Basis of the right null space, deterministic (free columns in order)."""
    rows, pivots = rref(m)
    n_cols = len(m[0])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return tuple(basis)


def mat_pow(m: Matrix, k: int) -> Matrix:
    n = len(m)
    if k < 0:
        return mat_pow(inverse(m), -k)
    result = identity(n)
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result
