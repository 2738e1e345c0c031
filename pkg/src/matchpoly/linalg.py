"""Exact integer and rational linear algebra.

Everything here works on plain Python ints and fractions.Fraction; there is
no floating point on any code path. Sizes are small (dimensions up to a few
dozen), so the routines favour clarity and exactness over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def vdot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def content(vec) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
        if g == 1:
            return 1
    return g


def primitive(vec):
    """Divide an integer vector by its content; the zero vector is returned as is."""
    g = content(vec)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def bareiss_det(rows) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[i][i]
        irow = a[i]
        for r in range(i + 1, n):
            arow = a[r]
            ari = arow[i]
            for c in range(i + 1, n):
                arow[c] = (piv * arow[c] - ari * irow[c]) // prev
            arow[i] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def cross_normal(diffs, dim):
    """Cofactor vector orthogonal to dim-1 independent integer vectors in Z^dim.

    Entry i is (-1)^i times the minor obtained by deleting column i. The result
    spans the orthogonal complement of the row span when the rows are independent.
    """
    if dim == 1:
        return (1,)
    out = []
    for i in range(dim):
        minor = [[row[c] for c in range(dim) if c != i] for row in diffs]
        out.append((-1) ** i * bareiss_det(minor))
    return tuple(out)


def frac_rank(rows) -> int:
    """Rank over Q."""
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, m):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(m):
            if r != rank and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def frac_solve(A, b):
    """Solve A x = b exactly over Q; A square nonsingular. Returns list[Fraction]."""
    n = len(A)
    a = [[Fraction(x) for x in row] + [Fraction(bb)] for row, bb in zip(A, b)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def frac_inverse(A):
    """Exact inverse of a square rational matrix."""
    n = len(A)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == r)) for i in range(n)]
         for r, row in enumerate(A)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def hnf_with_transform(rows, ncols):
    """Row Hermite normal form.

    Returns (H, U, rank) with U unimodular, U @ rows == H, pivots positive,
    entries above each pivot reduced, and zero rows at the bottom.
    """
    m = len(rows)
    H = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(r, m) if H[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(H[i][col]), i))
            if i0 != r:
                H[r], H[i0] = H[i0], H[r]
                U[r], U[i0] = U[i0], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][col] != 0:
                    q = H[i][col] // H[r][col]
                    if q:
                        H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                        U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if H[i][col] != 0:
                        done = False
            if done:
                break
        if r < m and H[r][col] != 0:
            if H[r][col] < 0:
                H[r] = [-x for x in H[r]]
                U[r] = [-x for x in U[r]]
            for i in range(r):
                q = H[i][col] // H[r][col]
                if q:
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
            r += 1
            if r == m:
                break
    return H, U, r


def int_kernel(rows, ncols):
    """Basis of {x in Z^ncols : rows @ x = 0}. The basis generates a saturated lattice."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    # kernel of A = left kernel of A^T: rows of U aligned with zero rows of HNF(A^T)
    At = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
    H, U, rank = hnf_with_transform(At, len(rows))
    return [tuple(U[i]) for i in range(rank, ncols)]


def saturated_basis(vectors, dim):
    """Basis of span_Q(vectors) ∩ Z^dim (the saturation of the generated lattice)."""
    vecs = [tuple(v) for v in vectors if any(v)]
    if not vecs:
        return []
    K = int_kernel(vecs, dim)
    if not K:
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    return int_kernel(K, dim)


def coords_in_basis(basis, vec):
    """Integer coordinates of vec in an integer basis (vec must lie in its span_Z)."""
    d = len(basis)
    # pick d independent coordinate positions of the basis matrix
    cols = _independent_columns(basis)
    A = [[basis[j][c] for j in range(d)] for c in cols]
    b = [vec[c] for c in cols]
    sol = frac_solve(A, b)
    out = []
    for x in sol:
        if x.denominator != 1:
            raise ValueError("vector not in the integer span of the basis")
        out.append(int(x))
    # verify (guards against vec outside the span)
    if tuple(sum(out[j] * basis[j][c] for j in range(d)) for c in range(len(vec))) != tuple(vec):
        raise ValueError("vector not in the span of the basis")
    return tuple(out)


def _independent_columns(rows):
    """Indices of a maximal independent set of columns, greedily from the left."""
    m = len(rows)
    chosen = []
    work: list[list[Fraction]] = []
    for c in range(len(rows[0])):
        cand = [Fraction(rows[r][c]) for r in range(m)]
        vec = cand[:]
        for w, pivpos in work:
            f = vec[pivpos]
            if f != 0:
                vec = [x - f * y for x, y in zip(vec, w)]
        piv = next((i for i, x in enumerate(vec) if x != 0), None)
        if piv is None:
            continue
        inv = 1 / vec[piv]
        vec = [x * inv for x in vec]
        work.append((vec, piv))
        chosen.append(c)
        if len(chosen) == m:
            break
    return chosen
