"""Exact integer linear algebra: HNF, determinants, primitive vectors, basis completion.

Vectors are tuples of Python ints, matrices are tuples of row tuples.
Everything is arbitrary precision; no floating point enters the library
anywhere downstream of this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NonPrimitiveVector, ZeroVector

IntVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


def gcd_vector(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_primitive(v) -> bool:
    """True iff the gcd of the coordinates is 1. Raises ZeroVector on 0."""
    g = gcd_vector(v)
    if g == 0:
        raise ZeroVector(f"zero vector {tuple(v)}")
    return g == 1


def primitive_part(v) -> IntVector:
    """v divided by the gcd of its coordinates."""
    g = gcd_vector(v)
    if g == 0:
        raise ZeroVector(f"zero vector {tuple(v)}")
    return tuple(x // g for x in v)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: IntMatrix, v) -> IntVector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _row_hnf_upper(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style HNF: returns (h, u) with u @ m = h, |det u| = 1.

    h is in row echelon form with positive pivots; entries above each
    pivot are reduced into [0, pivot).
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [list(r) for r in m]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]

    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        # Euclid on the entries of this column at rows >= pivot_row.
        while True:
            nz = [i for i in range(pivot_row, rows) if h[i][col] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(h[i][col]))
            if i_min != pivot_row:
                h[pivot_row], h[i_min] = h[i_min], h[pivot_row]
                u[pivot_row], u[i_min] = u[i_min], u[pivot_row]
            p = h[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, rows):
                if h[i][col] != 0:
                    q = h[i][col] // p
                    h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
                    if h[i][col] != 0:
                        done = False
            if done:
                break
        if h[pivot_row][col] == 0:
            continue
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        p = h[pivot_row][col]
        for i in range(pivot_row):
            q = h[i][col] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
        pivot_row += 1

    return tuple(tuple(r) for r in h), tuple(tuple(r) for r in u)


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style HNF: returns (h, u) with u @ m = h and |det u| = 1.

    For square nonsingular m, h is lower triangular with positive diagonal
    and sub-diagonal entries reduced modulo the pivot in their column. This
    is the upper row HNF conjugated by the order-reversing permutation.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rev = tuple(tuple(m[rows - 1 - i][cols - 1 - j] for j in range(cols)) for i in range(rows))
    h_up, u_up = _row_hnf_upper(rev)
    h = tuple(
        tuple(h_up[rows - 1 - i][cols - 1 - j] for j in range(cols)) for i in range(rows)
    )
    u = tuple(
        tuple(u_up[rows - 1 - i][rows - 1 - j] for j in range(rows)) for i in range(rows)
    )
    return h, u


def row_hnf(m: IntMatrix) -> IntMatrix:
    """Canonical row-style HNF of m (the echelon matrix only)."""
    return _row_hnf_upper(m)[0]


def row_hnf_with_transform(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    return _row_hnf_upper(m)


def unimodular_inverse(u: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix with determinant +-1."""
    n = len(u)
    d = det(u)
    if d not in (1, -1):
        raise ValueError(f"matrix has determinant {d}, not +-1")
    if n == 1:
        return ((d,),)
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(u[r][c] for c in range(n) if c != i)
                for r in range(n)
                if r != j
            )
            cof = det(minor)
            row.append(cof * d if (i + j) % 2 == 0 else -cof * d)
        inv.append(tuple(row))
    return tuple(inv)


def complete_to_basis(v) -> IntMatrix:
    """Unimodular n x n matrix whose first column is the primitive vector v.

    Canonical deterministic choice: reduce v (as a column) to e1 by the HNF
    row transform and return the inverse transform.
    """
    _, u = basis_with_transform(v)
    return unimodular_inverse(u)


def basis_with_transform(v) -> tuple[IntMatrix, IntMatrix]:
    """Returns (basis, u) with u @ basis = identity and basis[:,0] = v.

    u @ v = e1, so the rows of u after the first span the canonical
    coordinate map of the lattice projection with kernel R*v.
    """
    v = tuple(v)
    if not is_primitive(v):
        raise NonPrimitiveVector(f"vector {v} has gcd {gcd_vector(v)}")
    column = tuple((x,) for x in v)
    h, u = _row_hnf_upper(column)
    # Primitive column reduces to e1 exactly.
    assert h[0][0] == 1 and all(h[i][0] == 0 for i in range(1, len(v)))
    basis = unimodular_inverse(u)
    return basis, u


def solve_rational(a: IntMatrix, rhs) -> tuple[Fraction, ...] | None:
    """Solve a @ x = rhs exactly over the rationals; None if singular/inconsistent."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(a, rhs)]
    col = 0
    pivots = []
    for colv in range(n):
        piv = None
        for r in range(col, n):
            if m[r][colv] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][colv]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][colv] != 0:
                f = m[r][colv]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        pivots.append(colv)
        col += 1
    for r in range(col, n):
        if m[r][n] != 0:
            return None
    if len(pivots) < n:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = m[r][n]
    return tuple(x)
