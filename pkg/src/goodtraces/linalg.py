"""Exact linear algebra over Q and Z: reduced echelon forms, kernels,
Hermite/Smith normal forms, Diophantine solving, and LLL/Babai for the
approximation oracle.  Matrices are lists of lists; rational entries are
Fractions, integer routines require ints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


# ---------------------------------------------------------------------------
# rational matrices

def mat_copy(m):
    return [list(row) for row in m]


def rref(matrix):
    """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rational_rank(matrix) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def rational_kernel(matrix):
    """Basis of {x : matrix @ x = 0} over Q (x indexed by columns)."""
    if not matrix:
        return []
    cols = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -red[r][f]
        basis.append(vec)
    return basis


def rational_solve(matrix, rhs):
    """One solution of matrix @ x = rhs over Q, or None."""
    if not matrix:
        return [] if all(Fraction(b) == 0 for b in rhs) else None
    cols = len(matrix[0])
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None  # pivot in the rhs column: inconsistent
    x = [Fraction(0)] * cols
    for r, p in enumerate(pivots):
        x[p] = red[r][cols]
    return x


def mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def mat_vec(a, v):
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def identity(n, one=1):
    return [[one if i == j else one * 0 for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# integer matrices

def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def hnf_rows(matrix):
    """Row-style Hermite normal form basis of the lattice spanned by the rows.

    Returns the nonzero rows: an upper-triangular-ish Z-basis.
    """
    m = [list(map(int, row)) for row in matrix if any(x != 0 for x in row)]
    if not m:
        return []
    cols = len(m[0])
    r = 0
    for c in range(cols):
        # euclid on column c below row r
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(m[i][c]))
            _swap_rows(m, r, piv)
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if any(m[i][c] != 0 for i in range(r, len(m))):
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
    return [row for row in m if any(x != 0 for x in row)]


def snf(matrix):
    """Smith normal form: returns (U, S, V) with U @ A @ V = S, U, V unimodular,
    S diagonal with divisibility along the diagonal."""
    S = [list(map(int, row)) for row in matrix]
    rows = len(S)
    cols = len(S[0]) if rows else 0
    U = identity(rows)
    V = identity(cols)

    def row_op(i, j, q):  # row_i -= q*row_j
        S[i] = [a - q * b for a, b in zip(S[i], S[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q*col_j
        for row in S:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(rows, cols):
        # find pivot
        nz = [
            (abs(S[i][j]), i, j)
            for i in range(t, rows)
            for j in range(t, cols)
            if S[i][j] != 0
        ]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        again = True
        while again:
            again = False
            for i in range(t + 1, rows):
                if S[i][t] != 0:
                    q = S[i][t] // S[t][t]
                    row_op(i, t, q)
                    if S[i][t] != 0:
                        swap_rows(t, i)
                        again = True
            for j in range(t + 1, cols):
                if S[t][j] != 0:
                    q = S[t][j] // S[t][t]
                    col_op(j, t, q)
                    if S[t][j] != 0:
                        swap_cols(t, j)
                        again = True
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        # divisibility: fold in any entry not divisible by the pivot
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if S[i][j] % S[t][t] != 0:
                    bad = (i, j)
                    break
            if bad:
                break
        if bad:
            i, j = bad
            row_op(t, i, -1)  # add row i to row t, creating a mixable entry
            continue
        t += 1
    return U, S, V


def integer_kernel(matrix):
    """Basis of {x in Z^n : matrix @ x = 0}; the lattice is saturated."""
    rows = len(matrix)
    if rows == 0:
        return []
    cols = len(matrix[0])
    if cols == 0:
        return []
    U, S, V = snf(matrix)
    rank = sum(1 for t in range(min(rows, cols)) if S[t][t] != 0)
    basis = []
    for j in range(rank, cols):
        basis.append([V[i][j] for i in range(cols)])
    return basis


def solve_integer(matrix, rhs):
    """All integer solutions of matrix @ x = rhs: (particular, kernel_basis)
    or None when no integer solution exists."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    U, S, V = snf(matrix)
    c = [sum(U[i][k] * int(rhs[k]) for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        d = S[i][i] if i < min(rows, cols) else 0
        if d != 0:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
        else:
            if c[i] != 0:
                return None
    x = [sum(V[i][k] * y[k] for k in range(cols)) for i in range(cols)]
    return x, integer_kernel(matrix)


def clear_denominators(rational_rows):
    """Scale each row of a rational matrix to coprime integers."""
    out = []
    for row in rational_rows:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        ints = [int(x * den) for x in row]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a if a else 1


def integer_kernel_of_rational(rational_rows):
    """Basis of {x in Z^n : M x = 0} for a rational matrix M."""
    if not rational_rows:
        return []
    return integer_kernel(clear_denominators(rational_rows))


def lattice_basis(generators):
    """Z-basis (HNF rows) of the lattice generated by integer vectors."""
    return hnf_rows(generators)


def lattice_member(basis_rows, v):
    """Does integer vector v lie in the lattice spanned by basis_rows?"""
    if not basis_rows:
        return all(x == 0 for x in v)
    cols = [[row[j] for row in basis_rows] for j in range(len(v))]
    return solve_integer(cols, list(v)) is not None


def lattice_intersection(gens_a, gens_b):
    """Generators of the intersection of two integer lattices in Z^n."""
    if not gens_a or not gens_b:
        return []
    n = len(gens_a[0])
    # solve sum x_i a_i = sum y_j b_j: kernel of [A^T | -B^T]
    mat = [
        [gens_a[i][r] for i in range(len(gens_a))]
        + [-gens_b[j][r] for j in range(len(gens_b))]
        for r in range(n)
    ]
    out = []
    for vec in integer_kernel(mat):
        xs = vec[: len(gens_a)]
        w = [sum(xs[i] * gens_a[i][r] for i in range(len(gens_a))) for r in range(n)]
        if any(w):
            out.append(w)
    return lattice_basis(out)


# ---------------------------------------------------------------------------
# LLL and Babai (used by the constructive approximation oracle)

def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def lll_reduce(basis, delta=Fraction(3, 4)):
    """LLL-reduce a list of linearly independent rational vectors (rows)."""
    b = [[Fraction(x) for x in row] for row in basis]
    n = len(b)

    def gram_schmidt():
        star = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = list(b[i])
            for j in range(i):
                denom = _dot(star[j], star[j])
                mu[i][j] = _dot(b[i], star[j]) / denom if denom else Fraction(0)
                v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
            star.append(v)
        return star, mu

    star, mu = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = mu[k][j]
            r = Fraction(round(q))
            if abs(q - r) > Fraction(1, 2):  # round() ties; adjust
                r = Fraction(int(q) + (1 if q > 0 else -1))
            if r != 0:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
        star, mu = gram_schmidt()
        lhs = _dot(star[k], star[k])
        rhs = (delta - mu[k][k - 1] ** 2) * _dot(star[k - 1], star[k - 1])
        if lhs >= rhs:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            star, mu = gram_schmidt()
            k = max(k - 1, 1)
    return b


def babai_nearest(basis, target):
    """Babai's nearest-plane on an (ideally LLL-reduced) basis; returns the
    integer coefficient vector of a lattice point near target."""
    b = [[Fraction(x) for x in row] for row in basis]
    n = len(b)
    star = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        v = list(b[i])
        for j in range(i):
            denom = _dot(star[j], star[j])
            mu[i][j] = _dot(b[i], star[j]) / denom if denom else Fraction(0)
            v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
        star.append(v)
    w = [Fraction(x) for x in target]
    coeffs = [0] * n
    for i in range(n - 1, -1, -1):
        denom = _dot(star[i], star[i])
        c = _dot(w, star[i]) / denom if denom else Fraction(0)
        ci = round(c)
        coeffs[i] = ci
        w = [x - ci * y for x, y in zip(w, b[i])]
    return coeffs
