"""Exact homology of the quotient complexes over Z and Z_p.

All arithmetic is plain Python integers, so Smith normal form is exact
for any entry growth.  Matrices are dense lists of rows; the bases are
the nondegenerate generators in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import LB, NIE

DEFAULT_GENERATOR_CAP = 200_000


class CapExceeded(RuntimeError):
    """A degree asked for more generators than the configured cap."""


def _require_prime(p):
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError("coefficients must be Z or Z_p with p prime; got %d" % p)


@dataclass(frozen=True)
class HomologyResult:
    """Free rank plus invariant factors (each > 1, each dividing the next)."""

    free_rank: int
    torsion: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion factors must divide in order")
        if any(t <= 1 for t in self.torsion):
            raise ValueError("torsion factors must exceed 1")

    def __str__(self):
        parts = ["Z^%d" % self.free_rank] if self.free_rank else []
        parts += ["Z/%d" % t for t in self.torsion]
        return " + ".join(parts) if parts else "0"


# -- integer matrix utilities ------------------------------------------


def smith_diagonal(mat):
    """Invariant factors of an integer matrix (nonzero ones, in order)."""
    d, _ = smith_with_row_transform(mat)
    return d


def smith_with_row_transform(mat):
    """Diagonalize by unimodular row and column operations.

    Returns (diagonal, U) with U unimodular so that U*mat*V has the
    returned nonnegative diagonal d1 | d2 | ..; V is not tracked.
    """
    a = [list(row) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    diag = []

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def addmul_row(i, j, q):
        # row i += q * row j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    def addmul_col(i, j, q):
        for row in a:
            row[i] += q * row[j]

    t = 0
    while t < min(m, n):
        # smallest nonzero pivot in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    addmul_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, n):
                if a[t][j]:
                    addmul_col(j, t, -(a[t][j] // a[t][t]))
            rows_clear = all(a[i][t] == 0 for i in range(t + 1, m))
            cols_clear = all(a[t][j] == 0 for j in range(t + 1, n))
            if rows_clear and cols_clear:
                # pivot must divide the rest of the block
                offender = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % a[t][t]:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                addmul_row(t, offender, 1)
            else:
                # re-pick the smallest pivot and loop
                best = (t, t)
                for i in range(t, m):
                    for j in range(t, n):
                        if a[i][j] and abs(a[i][j]) < abs(a[best[0]][best[1]]):
                            best = (i, j)
                swap_rows(t, best[0])
                swap_cols(t, best[1])
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        diag.append(a[t][t])
        t += 1
    return diag, u


def rational_rank(mat):
    """Rank over Q by fraction-free Gaussian elimination."""
    a = [list(row) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for i in range(row + 1, m):
            if a[i][col]:
                p, q = a[row][col], a[i][col]
                a[i] = [p * x - q * y for x, y in zip(a[i], a[row])]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def rank_mod_p(mat, p):
    a = [[x % p for x in row] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], p - 2, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for i in range(m):
            if i != row and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[row])]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def nullspace_mod_p(mat, p, ncols):
    """Reduced-echelon kernel basis over Z_p, lexicographic pivots."""
    a = [[x % p for x in row] for row in mat]
    m = len(a)
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, m) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], p - 2, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for i in range(m):
            if i != row and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-a[r][f]) % p
        basis.append(vec)
    return basis


def solve_mod_p(mat, rhs, p):
    """One solution of mat*x = rhs over Z_p, or None."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [[mat[i][j] % p for j in range(n)] + [rhs[i] % p] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], p - 2, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for i in range(m):
            if i != row and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if a[i][n]:
            return None
    x = [0] * n
    for r, c in enumerate(pivots):
        x[c] = a[r][n]
    return x


# -- boundary matrices and homology ------------------------------------


def boundary_matrix(ctx, side, n, cap=DEFAULT_GENERATOR_CAP):
    """Matrix of the projected boundary on nondegenerate bases.

    Rows follow the degree-(n-1) basis, columns the degree-n basis, both
    lexicographic.
    """
    if side not in (LB, NIE):
        raise ValueError("unknown side %r" % side)
    raw_cols = ctx.size ** (n + 1) if side == LB else ctx.size ** (n + 2)
    if raw_cols > cap:
        raise CapExceeded("side %s degree %d needs %d generators, cap is %d"
                          % (side, n, raw_cols, cap))
    cols = ctx.generators(side, n)
    rows = ctx.generators(side, n - 1)
    index = {g: i for i, g in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, g in enumerate(cols):
        for h, coeff in ctx.project_nondegenerate(ctx.boundary(side, g)).support.items():
            mat[index[h]][j] = coeff
    return mat, rows, cols


def homology(ctx, side, n, modulus=0, cap=DEFAULT_GENERATOR_CAP):
    """H_n of the quotient complex over Z (modulus 0) or Z_p (p prime)."""
    d_n, _, basis = boundary_matrix(ctx, side, n, cap)
    d_next, _, _ = boundary_matrix(ctx, side, n + 1, cap)
    dim = len(basis)
    if modulus == 0:
        rank_n = rational_rank(d_n)
        factors = smith_diagonal(d_next)
        rank_next = len(factors)
        return HomologyResult(dim - rank_n - rank_next,
                              tuple(f for f in factors if f > 1))
    p = modulus
    _require_prime(p)
    return HomologyResult(dim - rank_mod_p(d_n, p) - rank_mod_p(d_next, p))


def class_coordinates(ctx, chain, cap=DEFAULT_GENERATOR_CAP):
    """Label of a cycle's homology class: Smith coordinates mod boundaries.

    Two cycles get equal labels exactly when they differ by a boundary.
    """
    side, n = chain.side, chain.degree
    basis = ctx.generators(side, n)
    index = {g: i for i, g in enumerate(basis)}
    vec = [0] * len(basis)
    for g, c in ctx.project_nondegenerate(chain).support.items():
        vec[index[g]] = c
    d_next, _, _ = boundary_matrix(ctx, side, n + 1, cap)
    diag, u = smith_with_row_transform(d_next)
    w = [sum(ur[j] * vec[j] for j in range(len(vec))) for ur in u]
    label = []
    for i, x in enumerate(w):
        if i < len(diag) and diag[i]:
            label.append(x % diag[i])
        else:
            label.append(x)
    return tuple(label)
