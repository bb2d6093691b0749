"""Exact linear algebra over the integers: Smith form, Hermite echelon, kernels.

Matrices are lists of row lists of Python ints, so everything is arbitrary
precision.  Sizes in this project stay small (a handful of generators), which
keeps the classical algorithms comfortably fast.
"""
from __future__ import annotations

Matrix = list[list[int]]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def copy_matrix(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = len(a), len(a[0]) if a else 0
    cb = len(b[0]) if b else 0
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            x = arow[k]
            if x:
                brow = b[k]
                for j in range(cb):
                    orow[j] += x * brow[j]
    return out


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return copy_matrix(b)
    if not b:
        return copy_matrix(a)
    return [a[i] + b[i] for i in range(len(a))]


def columns(a: Matrix) -> list[list[int]]:
    if not a or not a[0]:
        return []
    return [list(col) for col in zip(*a)]


def from_columns(cols: list[list[int]], rows: int) -> Matrix:
    if not cols:
        return [[] for _ in range(rows)]
    return [[c[i] for c in cols] for i in range(rows)]


def smith_normal_form(a: Matrix):
    """Return (U, D, V) with U @ a @ V == D diagonal, d1 | d2 | ... >= 0.

    U and V are unimodular.  Use smith_with_inverses when U^-1/V^-1 are needed.
    """
    u, _, d, v, _ = smith_with_inverses(a)
    return u, d, v


def smith_with_inverses(a: Matrix):
    """Return (U, Uinv, D, V, Vinv) with U @ a @ V == D in Smith form."""
    m = len(a)
    n = len(a[0]) if m else 0
    d = copy_matrix(a)
    u, ui = identity(m), identity(m)
    v, vi = identity(n), identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for row in ui:
            row[i], row[j] = row[j], row[i]

    def neg_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for row in ui:
            row[i] = -row[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        d[i] = [x + c * y for x, y in zip(d[i], d[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        for row in ui:
            row[j] -= c * row[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vi[i], vi[j] = vi[j], vi[i]

    def neg_col(i):
        for row in d:
            row[i] = -row[i]
        for row in v:
            row[i] = -row[i]
        vi[i] = [-x for x in vi[i]]

    def add_col(i, j, c):
        # col_i += c * col_j
        for row in d:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]
        vi[j] = [x - c * y for x, y in zip(vi[j], vi[i])]

    size = min(m, n)
    s = 0
    while s < size:
        # locate a pivot of minimal absolute value in the trailing block
        piv = None
        best = None
        for i in range(s, m):
            for j in range(s, n):
                x = d[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != s:
            swap_rows(s, piv[0])
        if piv[1] != s:
            swap_cols(s, piv[1])
        if d[s][s] < 0:
            neg_row(s)
        while True:
            # clear column s
            restart = False
            for i in range(s + 1, m):
                if d[i][s]:
                    q = d[i][s] // d[s][s]
                    add_row(i, s, -q)
                    if d[i][s]:
                        swap_rows(s, i)
                        restart = True
                        break
            if restart:
                continue
            # clear row s
            for j in range(s + 1, n):
                if d[s][j]:
                    q = d[s][j] // d[s][s]
                    add_col(j, s, -q)
                    if d[s][j]:
                        swap_cols(s, j)
                        restart = True
                        break
            if restart:
                continue
            # force divisibility of the remaining block by the pivot
            offender = None
            p = d[s][s]
            for i in range(s + 1, m):
                for j in range(s + 1, n):
                    if d[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(s, offender, 1)
        if d[s][s] < 0:
            neg_row(s)
        s += 1
    return u, ui, d, v, vi


def diagonal_of(d: Matrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def kernel_basis(a: Matrix) -> list[list[int]]:
    """Basis (as column vectors) of {x : a @ x == 0} over the integers."""
    m = len(a)
    n = len(a[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [col for col in identity(n)]
    _, d, v = smith_normal_form(a)
    diag = diagonal_of(d)
    out = []
    for j in range(n):
        if j >= len(diag) or diag[j] == 0:
            out.append([v[i][j] for i in range(n)])
    return out


def solve(a: Matrix, b: list[int]) -> list[int] | None:
    """One integer solution of a @ x == b, or None."""
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return [0] * n
    u, d, v = smith_normal_form(a)
    c = mat_vec(u, b)
    diag = diagonal_of(d)
    y = [0] * n
    for i in range(m):
        if i < len(diag) and diag[i]:
            if i < n and c[i] % diag[i] == 0:
                y[i] = c[i] // diag[i]
            else:
                return None
        elif c[i]:
            return None
    return mat_vec(v, y)


class ColumnEchelonLattice:
    """Canonical column-echelon (Hermite-style) basis of an integer column span.

    basis[k] is the k-th basis column; pivot rows are strictly increasing,
    pivots positive, and every entry in a pivot row of an earlier column is
    reduced into [0, pivot).  The form is unique per lattice, so `key` is a
    canonical identifier.
    """

    __slots__ = ("rows", "basis", "pivots")

    def __init__(self, rows: int, cols: list[list[int]]):
        self.rows = rows
        work = [c[:] for c in cols if any(c)]
        basis: list[list[int]] = []
        pivots: list[int] = []
        for r in range(rows):
            live = [c for c in work if c[r]]
            if not live:
                continue
            rest = [c for c in work if not c[r]]
            # gcd-reduce the live columns at row r down to a single column
            while len(live) > 1:
                live.sort(key=lambda c: abs(c[r]))
                head = live[0]
                new_live = [head]
                for c in live[1:]:
                    q = c[r] // head[r]
                    reduced = [x - q * y for x, y in zip(c, head)]
                    if reduced[r]:
                        new_live.append(reduced)
                    elif any(reduced):
                        rest.append(reduced)
                live = new_live
            col = live[0]
            if col[r] < 0:
                col = [-x for x in col]
            basis.append(col)
            pivots.append(r)
            work = [c for c in rest if any(c)]
        # canonical reduction of earlier columns against later pivots
        for k in range(len(basis)):
            for later in range(k + 1, len(basis)):
                r = pivots[later]
                q = basis[k][r] // basis[later][r]
                if q:
                    basis[k] = [x - q * y for x, y in zip(basis[k], basis[later])]
        self.basis = basis
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.basis)

    def key(self) -> tuple:
        return tuple(tuple(c) for c in self.basis)

    def contains(self, vec: list[int]) -> bool:
        v = list(vec)
        for k, r in enumerate(self.pivots):
            if v[r]:
                piv = self.basis[k][r]
                if v[r] % piv:
                    return False
                q = v[r] // piv
                v = [x - q * y for x, y in zip(v, self.basis[k])]
        return not any(v)

    def contains_all(self, cols: list[list[int]]) -> bool:
        return all(self.contains(c) for c in cols)

    def determinant_index(self) -> int:
        """Product of pivots: the group order of Z^rows / lattice when full rank."""
        out = 1
        for k, _ in enumerate(self.pivots):
            out *= self.basis[k][self.pivots[k]]
        return out
