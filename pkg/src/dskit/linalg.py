"""Dense exact linear algebra over the Gaussian rationals.

Matrices are plain lists of lists of Scalar. Everything here is textbook
Gaussian elimination; no pivoting heuristics are needed because the
arithmetic is exact.
"""

from __future__ import annotations

from typing import Sequence

from .core import OrbitSpec, Scalar, ScalarLike
from .errors import InputError

Matrix = list[list[Scalar]]
Vector = list[Scalar]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Scalar(0) for _ in range(cols)] for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[Scalar(1) if i == j else Scalar(0) for j in range(n)] for i in range(n)]


def mat_of(rows: Sequence[Sequence[ScalarLike]]) -> Matrix:
    out = [[Scalar.of(x) for x in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise InputError("ragged matrix")
    return out


def dims(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def copy_matrix(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(s: ScalarLike, a: Matrix) -> Matrix:
    sc = Scalar.of(s)
    return [[sc * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ca != rb:
        raise InputError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = list(zip(*b)) if b else []
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        for j in range(cb):
            s = Scalar(0)
            bcol = bt[j]
            for k in range(ca):
                if arow[k]:
                    s = s + arow[k] * bcol[k]
            out[i][j] = s
    return out


def mat_pow(a: Matrix, k: int) -> Matrix:
    n, m = dims(a)
    if n != m:
        raise InputError("matrix power needs a square matrix")
    if k < 0:
        raise InputError("negative matrix power not supported here")
    result = identity(n)
    base = copy_matrix(a)
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def trace(a: Matrix) -> Scalar:
    t = Scalar(0)
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return dims(a) == dims(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def kron(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = dims(a)
    rb, cb = dims(b)
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            if not a[i][j]:
                continue
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return out


def _row_echelon(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = copy_matrix(a)
    rows, cols = dims(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Scalar(1) / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(_row_echelon(a)[1])


def det(a: Matrix) -> Scalar:
    n, m = dims(a)
    if n != m:
        raise InputError("determinant needs a square matrix")
    mat = copy_matrix(a)
    result = Scalar(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if mat[i][c]), None)
        if pivot is None:
            return Scalar(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            result = -result
        result = result * mat[c][c]
        inv = Scalar(1) / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c]:
                f = inv * mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    return result


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One solution of a x = b, or None if the system is inconsistent.

    Free variables are set to zero.
    """
    rows, cols = dims(a)
    if len(b) != rows:
        raise InputError("right-hand side has wrong length")
    aug = [a[i][:] + [Scalar.of(b[i])] for i in range(rows)]
    ech, pivots = _row_echelon(aug)
    if cols in pivots:
        return None
    x = [Scalar(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = ech[r][cols]
    return x


def mat_inv(a: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or None if singular."""
    n, m = dims(a)
    if n != m:
        raise InputError("inverse needs a square matrix")
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    ech, pivots = _row_echelon(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in ech]


def nullspace(a: Matrix) -> list[Vector]:
    """A basis of the kernel of a."""
    rows, cols = dims(a)
    if cols == 0:
        return []
    if rows == 0:
        return [
            [Scalar(1) if i == j else Scalar(0) for i in range(cols)]
            for j in range(cols)
        ]
    ech, pivots = _row_echelon(a)
    free = [c for c in range(cols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        v = [Scalar(0)] * cols
        v[f] = Scalar(1)
        for r, c in enumerate(pivots):
            v[c] = -ech[r][f]
        basis.append(v)
    return basis


def vec_rows(x: Matrix) -> Vector:
    """Stack the rows of x into one vector."""
    return [entry for row in x for entry in row]


def unvec_rows(v: Vector, rows: int, cols: int) -> Matrix:
    if len(v) != rows * cols:
        raise InputError("vector length does not match shape")
    return [list(v[i * cols : (i + 1) * cols]) for i in range(rows)]


def sylvester_solve(p: Matrix, q: Matrix, rhs: Matrix) -> Matrix | None:
    """Solve p x - x q = rhs for x, or None when the operator is singular.

    Row-stacking turns the operator into p (x) I - I (x) q^t, since
    vec(p x) = (p (x) I) vec(x) and vec(x q) = (I (x) q^t) vec(x).
    """
    n = len(p)
    m = len(q)
    op = mat_sub(kron(p, identity(m)), kron(identity(n), transpose(q)))
    sol = solve(op, vec_rows(rhs))
    if sol is None:
        return None
    return unvec_rows(sol, n, m)


def ad_eigen_shift_singular(b: Matrix, k: int) -> bool:
    """Whether x -> b x - x b - k x is singular, i.e. whether k is a
    difference of two eigenvalues of b."""
    n = len(b)
    op = mat_sub(kron(b, identity(n)), kron(identity(n), transpose(b)))
    for i in range(n * n):
        op[i][i] = op[i][i] - k
    return rank(op) < n * n


def jordan_matrix(o: OrbitSpec) -> Matrix:
    """The block-diagonal Jordan representative of an orbit specification."""
    n = o.n
    m = zeros(n, n)
    pos = 0
    for eig, part in o.blocks:
        for size in part:
            for t in range(size):
                m[pos + t][pos + t] = eig
                if t + 1 < size:
                    m[pos + t][pos + t + 1] = Scalar(1)
            pos += size
    return m


def jordan_type_of_nilpotent(a: Matrix) -> tuple[int, ...]:
    """Jordan partition of a nilpotent matrix from its power-rank sequence."""
    n = len(a)
    ranks = [n]
    power = identity(n)
    for _ in range(n):
        power = mat_mul(power, a)
        ranks.append(rank(power))
    if ranks[-1] != 0:
        raise InputError("matrix is not nilpotent")
    # parts of the dual partition: d_k = rank(a^{k-1}) - rank(a^k)
    dual = [ranks[k - 1] - ranks[k] for k in range(1, n + 1)]
    dual = [d for d in dual if d > 0]
    # transpose back
    if not dual:
        return ()
    return tuple(sum(1 for d in dual if d >= k) for k in range(1, dual[0] + 1))
