"""Exact integer and rational linear algebra.

Everything here works with arbitrary-precision Python ints and
``fractions.Fraction``; no floating point is used anywhere.  Matrices are
immutable tuples of row tuples.
"""

from fractions import Fraction
from math import gcd

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def as_matrix(rows) -> Matrix:
    """Validate and freeze a rectangular integer matrix."""
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if not mat or not mat[0]:
        raise ValueError("matrix must have at least one row and one column")
    width = len(mat[0])
    if any(len(row) != width for row in mat):
        raise ValueError("matrix rows must all have the same length")
    return mat


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(mat: Matrix) -> Matrix:
    return tuple(zip(*mat))


def mat_vec(mat, vec):
    return tuple(sum(a * x for a, x in zip(row, vec)) for row in mat)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def is_zero(v) -> bool:
    return all(a == 0 for a in v)


def vec_gcd(v) -> int:
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive(v) -> Vector:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(int(a) for a in v)
    return tuple(int(a) // g for a in v)


def det(mat: Matrix) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant needs a square matrix")
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def hermite_normal_form(mat) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form with its unimodular transform.

    Returns (H, U) with U * mat == H, |det U| == 1, H in row echelon form
    with positive pivots and entries above each pivot reduced into
    [0, pivot).
    """
    mat = as_matrix(mat)
    rows, cols = len(mat), len(mat[0])
    h = [list(r) for r in mat]
    u = [list(r) for r in identity(rows)]
    top = 0
    for col in range(cols):
        while True:
            nz = [i for i in range(top, rows) if h[i][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(h[i][col]), i))
            if best != top:
                h[top], h[best] = h[best], h[top]
                u[top], u[best] = u[best], u[top]
            pivot = h[top][col]
            done = True
            for i in range(top + 1, rows):
                if h[i][col] != 0:
                    q = h[i][col] // pivot
                    h[i] = [a - q * b for a, b in zip(h[i], h[top])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[top])]
                    if h[i][col] != 0:
                        done = False
            if done:
                break
        if top < rows and h[top][col] != 0:
            if h[top][col] < 0:
                h[top] = [-a for a in h[top]]
                u[top] = [-a for a in u[top]]
            pivot = h[top][col]
            for i in range(top):
                q = h[i][col] // pivot
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[top])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[top])]
            top += 1
            if top == rows:
                break
    return tuple(tuple(r) for r in h), tuple(tuple(r) for r in u)


def hnf_basis(vectors, dim: int) -> Matrix:
    """Canonical (HNF-reduced) basis of the lattice spanned by ``vectors``."""
    vecs = [v for v in vectors if not is_zero(v)]
    if not vecs:
        return ()
    h, _ = hermite_normal_form(vecs)
    return tuple(row for row in h if not is_zero(row))


def rank(mat) -> int:
    h, _ = hermite_normal_form(mat)
    return sum(1 for row in h if not is_zero(row))


def pivot_columns(h: Matrix) -> list[int]:
    """Pivot column indices of a row-echelon matrix."""
    cols = []
    for row in h:
        for j, a in enumerate(row):
            if a != 0:
                cols.append(j)
                break
    return cols


def integer_kernel(mat) -> tuple[Vector, ...]:
    """Basis of the saturated lattice {x in Z^n : mat @ x = 0}.

    The rows of the returned matrix are an HNF-canonical basis; every
    integer kernel element is an integer combination of them.
    """
    mat = as_matrix(mat)
    h, u = hermite_normal_form(transpose(mat))
    kernel = [u[i] for i in range(len(h)) if is_zero(h[i])]
    return hnf_basis(kernel, len(mat[0]))


def in_lattice(basis, v) -> bool:
    """Does v lie in the integer span of the basis rows?"""
    if is_zero(v):
        return True
    if not basis:
        return False
    before = hnf_basis(basis, len(v))
    after = hnf_basis(list(basis) + [tuple(v)], len(v))
    return before == after


def solve_diophantine(mat, rhs) -> Vector | None:
    """One integer solution of mat @ x = rhs, or None if there is none."""
    mat = as_matrix(mat)
    rows, cols = len(mat), len(mat[0])
    if len(rhs) != rows:
        raise ValueError("right-hand side has wrong length")
    h, u = hermite_normal_form(transpose(mat))
    # columns of transpose(u) multiply mat into the column-echelon form
    # transpose(h); solve column by column, most significant first.
    g = transpose(h)  # rows x cols, column-echelon
    residual = [int(b) for b in rhs]
    y = [0] * cols
    for j in range(cols):
        lead = next((i for i in range(rows) if g[i][j] != 0), None)
        if lead is None:
            continue
        if residual[lead] % g[lead][j] != 0:
            return None
        y[j] = residual[lead] // g[lead][j]
        for i in range(rows):
            residual[i] -= y[j] * g[i][j]
    if any(residual):
        return None
    ut = transpose(u)
    return mat_vec(ut, y)


def solve_pivot(mat, rhs) -> Vector | None:
    """Integer solution of mat @ x = rhs with all free coordinates zero.

    Solves through the row HNF of ``mat``; returns None when the pivot
    divisions do not come out integral (a solution may still exist with
    nonzero free coordinates; use solve_diophantine for that).
    """
    mat = as_matrix(mat)
    h, u = hermite_normal_form(mat)
    beta = mat_vec(u, rhs)
    cols = len(mat[0])
    pivots = []
    for i, row in enumerate(h):
        lead = next((j for j, a in enumerate(row) if a != 0), None)
        if lead is None:
            if beta[i] != 0:
                return None
        else:
            pivots.append((i, lead))
    x = [0] * cols
    for i, lead in reversed(pivots):
        residual = beta[i] - sum(h[i][j] * x[j] for j in range(lead + 1, cols))
        if residual % h[i][lead] != 0:
            return None
        x[lead] = residual // h[i][lead]
    return tuple(x)


def solve_fraction(mat, rhs) -> tuple[Fraction, ...] | None:
    """One rational solution of mat @ x = rhs (free coordinates zero)."""
    rows = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        inv = 1 / rows[top][col]
        rows[top] = [a * inv for a in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[top])]
        pivots.append((top, col))
        top += 1
    for i in range(top, len(rows)):
        if rows[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, col in pivots:
        x[col] = rows[i][ncols]
    return tuple(x)


def solve_square_fraction(mat, rhs) -> tuple[Fraction, ...] | None:
    """Solve a square rational system; None if the matrix is singular."""
    n = len(mat)
    rows = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [a * inv for a in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
    return tuple(rows[i][n] for i in range(n))


def fraction_kernel(mat) -> list[tuple[Fraction, ...]]:
    """Basis of the rational kernel of mat (row-reduced free-variable form)."""
    kernel = integer_kernel(mat)
    return [tuple(Fraction(a) for a in v) for v in kernel]


def unimodular_inverse(mat: Matrix) -> Matrix:
    """Inverse of an integer matrix with determinant +-1."""
    n = len(mat)
    d = det(mat)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    # adjugate via cofactors; n stays tiny in this engine
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [
                [mat[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            m = det(tuple(tuple(r) for r in minor)) if n > 1 else 1
            row.append((-1) ** (i + j) * m)
        cof.append(row)
    adj = transpose(tuple(tuple(r) for r in cof))
    return tuple(tuple(a * d for a in row) for row in adj)
