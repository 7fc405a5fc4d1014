"""Exact dense linear algebra over Q(v).

Matrices are lists of rows, vectors are lists; entries are
:class:`~qforms.coeffs.RatFunc`. Zero tests are exact because
rational functions are kept in canonical form.
"""

from __future__ import annotations

from .coeffs import ONE, ZERO, RatFunc


def zeros(nrows, ncols):
    return [[ZERO] * ncols for _ in range(nrows)]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(mat, ncols=None):
    if not mat:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*mat)]


def matmul(a, b, inner=None):
    """Product of an ``m x k`` and a ``k x n`` matrix."""
    if not a:
        return []
    if not b:
        ncols = 0
        return [[] for _ in a]
    ncols = len(b[0])
    out = []
    for row in a:
        acc = [ZERO] * ncols
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a, x):
    out = []
    for row in a:
        acc = ZERO
        for r, y in zip(row, x):
            if r and y:
                acc = acc + r * y
        out.append(acc)
    return out


def dot(x, y):
    acc = ZERO
    for a, b in zip(x, y):
        if a and b:
            acc = acc + a * b
    return acc


def bilinear(x, gram, y):
    return dot(x, matvec(gram, y))


def congruence(basis, gram):
    """``B^T G B`` where the columns of ``B`` are the vectors in ``basis``."""
    gb = [matvec(gram, y) for y in basis]
    return [[dot(x, gy) for gy in gb] for x in basis]


def _size(x):
    return len(x.num._c) + len(x.den._c)


def rref(rows, ncols, col_order=None):
    """Reduced row echelon form.

    Columns are scanned in ``col_order`` (default left to right); each
    pivot row is normalized to 1 at its pivot and the pivot column is
    cleared in every other row. Returns ``(rows, pivots)`` with
    ``rows[i]`` having its pivot at ``pivots[i]``.
    """
    m = [list(r) for r in rows if any(r)]
    order = list(range(ncols)) if col_order is None else list(col_order)
    pivots = []
    r = 0
    for c in order:
        if r >= len(m):
            break
        best = None
        for i in range(r, len(m)):
            if m[i][c]:
                if best is None or _size(m[i][c]) < _size(m[best][c]):
                    best = i
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        piv = m[r][c]
        if piv != ONE:
            inv = piv.inverse()
            m[r] = [x * inv if x else ZERO for x in m[r]]
        prow = m[r]
        nz = [j for j, x in enumerate(prow) if x]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(mat, ncols=None):
    if not mat:
        return 0
    ncols = len(mat[0]) if ncols is None else ncols
    return len(rref(mat, ncols)[1])


def nullspace(mat, ncols):
    """Basis of ``{x : mat x = 0}``; one vector per free column, 1 at that column."""
    red, pivots = rref(mat, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(red, pivots):
            if row[f]:
                x[p] = -row[f]
        basis.append(x)
    return basis


def span_basis(vectors, n):
    """Echelon basis (reduced rows) of the span of ``vectors`` in dimension ``n``."""
    return rref(vectors, n)[0]


def solve(mat, b, ncols):
    """One solution of ``mat x = b`` (free variables set to 0).

    Raises ``ValueError`` when the system is inconsistent.
    """
    aug = [list(row) + [rhs] for row, rhs in zip(mat, b)]
    red, pivots = rref(aug, ncols + 1, col_order=range(ncols + 1))
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    x = [ZERO] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def in_span(vectors, x, n):
    if not any(x):
        return True
    r0 = rank(vectors, n) if vectors else 0
    return rank(list(vectors) + [x], n) == r0


def subspace_contains(big, small, n):
    """True when every vector of ``small`` lies in the span of ``big``."""
    if not small or not any(any(v) for v in small):
        return True
    r0 = rank(big, n) if big else 0
    return rank(list(big) + list(small), n) == r0


def complement_units(vectors, n):
    """Indices of the first unit vectors completing ``span(vectors)`` to the whole space."""
    red, pivots = rref(vectors, n) if vectors else ([], [])
    chosen = []
    current = [list(r) for r in red]
    r0 = len(red)
    for i in range(n):
        e = [ZERO] * n
        e[i] = ONE
        if rank(current + [e], n) > r0:
            current.append(e)
            r0 += 1
            chosen.append(i)
        if r0 == n:
            break
    return chosen


def coords_in(basis, x, n):
    """Coordinates of ``x`` in the (independent) ``basis``; raises if ``x`` is outside the span."""
    if not basis:
        if any(x):
            raise ValueError("vector not in span")
        return []
    cols = transpose(basis)
    return solve(cols, x, len(basis))


def leading_minors(mat):
    """Leading principal minors ``det(mat[:k, :k])`` for ``k = 1..n`` (exact)."""
    n = len(mat)
    out = []
    for k in range(1, n + 1):
        out.append(det([row[:k] for row in mat[:k]]))
    return out


def det(mat):
    n = len(mat)
    if n == 0:
        return ONE
    m = [list(r) for r in mat]
    sign = 1
    acc = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        acc = acc * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                for j in range(c, n):
                    if m[c][j]:
                        m[i][j] = m[i][j] - f * m[c][j]
    return acc if sign > 0 else -acc


def is_symmetric(mat):
    n = len(mat)
    return all(mat[i][j] == mat[j][i] for i in range(n) for j in range(i + 1, n))


def coerce_matrix(rows):
    return [[RatFunc.coerce(x) for x in row] for row in rows]
