"""Exact integer and rational matrix arithmetic.

Everything here works on tuples of tuples so results are hashable and can be
used as canonical dictionary keys (deduplicating flats, group elements).  No
floating point anywhere; rational work uses ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

IntMatrix = tuple[tuple[int, ...], ...]
QMatrix = tuple[tuple[Fraction, ...], ...]
IntVector = tuple[int, ...]


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple[tuple, ...]:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple:
    """Column-vector action ``m @ v``."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def dot(u: Sequence, v: Sequence) -> int | Fraction:
    return sum(x * y for x, y in zip(u, v))


def det(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            d = -d
        d *= a[c][c]
        inv = Fraction(1) / a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def int_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a matrix that is invertible over the integers (det = +/-1)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        a[c], a[pivot] = a[pivot], a[c]
        inv = Fraction(1) / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    out = []
    for i in range(n):
        row = a[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not invertible over the integers")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def nullspace(rows: Iterable[Sequence], ncols: int) -> QMatrix:
    """Deterministic basis of {v : row . v = 0 for every row}."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    return tuple(basis)


def solve_combination(basis_rows: Sequence[Sequence], target: Sequence):
    """Coefficients c with sum(c_i * basis_i) == target, or None.

    Free coefficients (dependent basis rows) are set to zero.
    """
    k = len(basis_rows)
    n = len(target)
    if k == 0:
        return () if all(x == 0 for x in target) else None
    aug = [[Fraction(basis_rows[i][j]) for i in range(k)] + [Fraction(target[j])]
           for j in range(n)]
    red, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for i, p in enumerate(pivots):
        coeffs[p] = red[i][k]
    return tuple(coeffs)


def hnf(rows: Iterable[Sequence[int]]) -> IntMatrix:
    """Canonical row Hermite normal form (positive pivots, reduced above)."""
    mat = [list(map(int, row)) for row in rows if any(row)]
    if not mat:
        return ()
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        while True:
            nz = [i for i in range(r, len(mat)) if mat[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(mat[i][c]), i))
            mat[r], mat[i0] = mat[i0], mat[r]
            done = True
            for i in range(r + 1, len(mat)):
                if mat[i][c]:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
                    if mat[i][c]:
                        done = False
            if done:
                break
        if mat[r][c] == 0:
            continue
        if mat[r][c] < 0:
            mat[r] = [-x for x in mat[r]]
        for i in range(r):
            q = mat[i][c] // mat[r][c]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return tuple(tuple(row) for row in mat[:r] if any(row))


def int_kernel(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """HNF basis of the saturated lattice {x in Z^ncols : row . x = 0 for all rows}."""
    rows = [r for r in rows if any(r)]
    m = len(rows)
    if m == 0:
        return identity(ncols)
    big = [tuple(rows[j][i] for j in range(m)) + tuple(1 if k == i else 0 for k in range(ncols))
           for i in range(ncols)]
    reduced = hnf(big)
    kernel = [row[m:] for row in reduced if all(x == 0 for x in row[:m])]
    return hnf(kernel)


def saturate_span(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Canonical saturated integer basis of the rational span of the rows."""
    return int_kernel(int_kernel(rows, ncols), ncols)


def restrict_action(m: Sequence[Sequence], basis_rows: Sequence[Sequence]) -> QMatrix:
    """Matrix of v -> m @ v on the subspace spanned by basis_rows.

    Row i holds the coordinates of the image of basis vector i; traces and
    characteristic polynomials of the restriction are read off directly.
    Raises ValueError when the subspace is not m-stable.
    """
    out = []
    for b in basis_rows:
        img = mat_vec(m, b)
        coeffs = solve_combination(basis_rows, img)
        if coeffs is None:
            raise ValueError("subspace is not stable under the given matrix")
        out.append(coeffs)
    return tuple(out)


def charpoly(m: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Coefficients c[0..n] of det(tI - m) = sum c[k] t^k (Faddeev-LeVerrier)."""
    n = len(m)
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    if n == 0:
        return tuple(c)
    mq = tuple(tuple(Fraction(x) for x in row) for row in m)
    aux = mq
    c[n - 1] = -sum(aux[i][i] for i in range(n))
    for k in range(2, n + 1):
        shifted = tuple(
            tuple(aux[i][j] + (c[n - k + 1] if i == j else 0) for j in range(n))
            for i in range(n)
        )
        aux = mat_mul(mq, shifted)
        c[n - k] = -Fraction(sum(aux[i][i] for i in range(n)), k)
    return tuple(c)


def det_one_minus_q(m: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Coefficients of det(I - q m) as a polynomial in q."""
    c = charpoly(m)
    n = len(m)
    return tuple(c[n - j] for j in range(n + 1))


def series_inverse(d: Sequence[Fraction], cutoff: int) -> tuple[Fraction, ...]:
    """Power series coefficients of 1/d(q) through q^cutoff; needs d[0] != 0."""
    inv = [Fraction(1) / Fraction(d[0])]
    for k in range(1, cutoff + 1):
        s = Fraction(0)
        for j in range(1, min(k, len(d) - 1) + 1):
            s += Fraction(d[j]) * inv[k - j]
        inv.append(-s * inv[0])
    return tuple(inv)
