"""Exact rational vectors and dense linear algebra over the rationals.

Vectors are plain tuples of ``fractions.Fraction``; every operation here is
exact, deterministic and free of floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import InputError

Vector = tuple[Fraction, ...]


def as_vector(values) -> Vector:
    """Coerce an iterable of ints/Fractions/strings to a Vector."""
    out = tuple(Fraction(v) for v in values)
    if not out:
        raise InputError("vectors must have dimension >= 1")
    return out


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def check_dim(v: Vector, dim: int) -> None:
    if len(v) != dim:
        raise InputError(f"expected vector of dimension {dim}, got {len(v)}")


def dot(a: Vector, b: Vector) -> Fraction:
    if len(a) != len(b):
        raise InputError(f"dimension mismatch in inner product: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vadd(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise InputError("dimension mismatch in vector addition")
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise InputError("dimension mismatch in vector subtraction")
    return tuple(x - y for x, y in zip(a, b))


def vscale(v: Vector, c) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in v)


def vneg(v: Vector) -> Vector:
    return tuple(-x for x in v)


def is_zero_vector(v: Vector) -> bool:
    return all(x == 0 for x in v)


def primitive_direction(v: Vector) -> tuple[int, ...]:
    """Canonical integer representative of a nonzero vector's positive ray.

    Two vectors are positive multiples of one another exactly when their
    primitive directions are equal.
    """
    if is_zero_vector(v):
        raise InputError("the zero vector has no direction")
    scale = lcm(*(x.denominator for x in v))
    ints = [int(x * scale) for x in v]
    g = gcd(*ints)
    return tuple(n // g for n in ints)


def _integer_rows(vectors) -> list[list[int]]:
    rows = []
    for v in vectors:
        scale = lcm(*(x.denominator for x in v)) if v else 1
        rows.append([int(x * scale) for x in v])
    return rows


def rank(vectors) -> int:
    """Exact rank of a family of vectors via fraction-free (Bareiss) elimination."""
    vectors = list(vectors)
    if not vectors:
        return 0
    dim = len(vectors[0])
    for v in vectors:
        if len(v) != dim:
            raise InputError("rank: all vectors must share one dimension")
    m = _integer_rows(vectors)
    nrows = len(m)
    row = 0
    prev = 1
    for col in range(dim):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for r in range(row + 1, nrows):
            for c in range(col + 1, dim):
                m[r][c] = (m[r][c] * m[row][col] - m[r][col] * m[row][c]) // prev
            m[r][col] = 0
        prev = m[row][col]
        row += 1
        if row == nrows:
            break
    return row


def _gauss_any_solution(matrix: list[list[Fraction]], rhs: list[Fraction]):
    """One exact solution of matrix * y = rhs with free variables set to 0,
    or None if the system is inconsistent."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if aug[r][ncols] != 0:
            return None
    y = [Fraction(0)] * ncols
    for r, c in pivots:
        y[c] = aug[r][ncols]
    return y


def solve_linear(rows, rhs) -> Vector | None:
    """Solve the linear system ``rows . x = rhs`` exactly.

    Returns None when inconsistent.  Underdetermined systems yield the unique
    minimum-norm solution, i.e. the solution lying in the row space: with
    G = A A^T we solve G y = rhs and return A^T y.
    """
    rows = [tuple(Fraction(c) for c in r) for r in rows]
    rhs = [Fraction(b) for b in rhs]
    if len(rows) != len(rhs):
        raise InputError("solve_linear: one right-hand side per row required")
    if not rows:
        raise InputError("solve_linear: empty system has no defined dimension")
    dim = len(rows[0])
    for r in rows:
        if len(r) != dim:
            raise InputError("solve_linear: rows must share one dimension")
    k = len(rows)
    gram = [[dot(rows[i], rows[j]) for j in range(k)] for i in range(k)]
    y = _gauss_any_solution(gram, rhs)
    if y is None:
        return None
    x = [Fraction(0)] * dim
    for i in range(k):
        if y[i]:
            for j in range(dim):
                x[j] += y[i] * rows[i][j]
    return tuple(x)
