"""Dense exact matrices over Q(i) as tuples of row tuples."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotInvertible
from .exactnum import ONE, ZERO, as_scalar

Matrix = tuple  # tuple of row tuples of Scalar


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(as_scalar(x) for x in row) for row in rows)


def shape(m: Matrix) -> tuple[int, int]:
    """(rows, cols); an empty matrix reports zero columns."""
    return len(m), (len(m[0]) if m else 0)


def zeros(r: int, c: int) -> Matrix:
    return tuple((ZERO,) * c for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    vals = [as_scalar(x) for x in entries]
    return tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix, cols: int | None = None) -> Matrix:
    """Product a*b.  ``cols`` gives the result width when ``b`` has no rows."""
    ra = len(a)
    ca = len(a[0]) if a else len(b)
    rb = len(b)
    cb = len(b[0]) if b else (cols or 0)
    if ra and ca != rb:
        raise DimensionMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    b_nz = [[(j, y) for j, y in enumerate(brow) if not y.is_zero()] for brow in b]
    out = []
    for row in a:
        acc = [ZERO] * cb
        for k, x in enumerate(row):
            if x.is_zero():
                continue
            for j, y in b_nz[k]:
                acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return tuple(out)


def matmul_chain(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        out = matmul(out, m)
    return out


def add(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise DimensionMismatch("shape mismatch in addition")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise DimensionMismatch("shape mismatch in subtraction")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, m: Matrix) -> Matrix:
    c = as_scalar(c)
    return tuple(tuple(c * x for x in row) for row in m)


def transpose(m: Matrix, rows: int | None = None) -> Matrix:
    r, c = shape(m)
    if r == 0:
        return zeros(rows or 0, 0)
    return tuple(tuple(m[i][j] for i in range(r)) for j in range(c))


def conj_mat(m: Matrix) -> Matrix:
    return tuple(tuple(x.conj() for x in row) for row in m)


def adjoint(m: Matrix) -> Matrix:
    return conj_mat(transpose(m))


def is_zero_matrix(m: Matrix) -> bool:
    return all(x.is_zero() for row in m for x in row)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with row/column index (i, k) -> i*len(b) + k."""
    rb, cb = shape(b)
    out = []
    for row_a in a:
        for k in range(rb):
            row_b = b[k]
            out.append(tuple(x * y for x in row_a for y in row_b))
    return tuple(out)


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m]
    r, c = shape(m)
    rk = 0
    for col in range(c):
        piv = next((i for i in range(rk, r) if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = rows[rk][col].inverse()
        for i in range(rk + 1, r):
            f = rows[i][col]
            if f.is_zero():
                continue
            f = f * inv
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def _monomial_inverse(m: Matrix, n: int) -> Matrix | None:
    """Inverse of a matrix with exactly one nonzero per row and column."""
    where = []
    for i, row in enumerate(m):
        nz = [j for j, x in enumerate(row) if not x.is_zero()]
        if len(nz) != 1:
            return None
        where.append(nz[0])
    if len(set(where)) != n:
        return None
    out = [[ZERO] * n for _ in range(n)]
    for i, j in enumerate(where):
        out[j][i] = m[i][j].inverse()
    return tuple(tuple(r) for r in out)


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises NotInvertible on singular input."""
    n, c = shape(m)
    if n != c:
        raise NotInvertible(f"non-square {n}x{c} matrix")
    fast = _monomial_inverse(m, n)
    if fast is not None:
        return fast
    work = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if not work[i][col].is_zero()), None)
        if piv is None:
            raise NotInvertible("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        inv = work[col][col].inverse()
        prow = [x * inv if not x.is_zero() else x for x in work[col]]
        work[col] = prow
        nz = [j for j, y in enumerate(prow) if not y.is_zero()]
        for i in range(n):
            if i == col:
                continue
            f = work[i][col]
            if f.is_zero():
                continue
            row = work[i]
            for j in nz:
                row[j] = row[j] - f * prow[j]
    return tuple(tuple(row[n:]) for row in work)


def is_invertible(m: Matrix) -> bool:
    r, c = shape(m)
    return r == c and rank(m) == r


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """A solution X of a X = b, or None if the system is inconsistent."""
    r, c = shape(a)
    nb = len(b[0]) if b else 0
    work = [list(a[i]) + list(b[i]) for i in range(r)]
    pivots = []
    rk = 0
    for col in range(c):
        piv = next((i for i in range(rk, r) if not work[i][col].is_zero()), None)
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        inv = work[rk][col].inverse()
        work[rk] = [x * inv for x in work[rk]]
        for i in range(r):
            if i != rk and not work[i][col].is_zero():
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[rk])]
        pivots.append(col)
        rk += 1
    for i in range(rk, r):
        if any(not x.is_zero() for x in work[i][c:]):
            return None
    x = [[ZERO] * nb for _ in range(c)]
    for i, col in enumerate(pivots):
        x[col] = list(work[i][c:])
    return tuple(tuple(row) for row in x)


def permutation_matrix(perm: Sequence[int], signs: Sequence[int] | None = None) -> Matrix:
    """Matrix sending basis vector j to signs[j] * e_{perm[j]}."""
    n = len(perm)
    rows = [[ZERO] * n for _ in range(n)]
    for j, i in enumerate(perm):
        rows[i][j] = ONE if signs is None or signs[j] > 0 else -ONE
    return tuple(tuple(r) for r in rows)


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    top = tuple(tuple(row) + (ZERO,) * cb for row in a)
    bot = tuple((ZERO,) * ca + tuple(row) for row in b)
    return top + bot


def format_matrix(m: Matrix) -> str:
    if not m:
        return "[]"
    cells = [[str(x) for x in row] for row in m]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)
