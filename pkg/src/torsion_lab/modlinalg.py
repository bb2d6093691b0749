"""Dense linear algebra over prime fields F_p, plus subspace enumeration.

Vectors are tuples of ints in [0, p); subspaces are canonical row-reduced
echelon bases, which makes equality and deduplication trivial.
"""
from __future__ import annotations

from itertools import combinations, product

Vec = tuple[int, ...]
Rows = tuple[Vec, ...]


def vec_add(u: Vec, v: Vec, p: int) -> Vec:
    return tuple((a + b) % p for a, b in zip(u, v))


def vec_scale(c: int, v: Vec, p: int) -> Vec:
    c %= p
    return tuple((c * a) % p for a in v)


def mat_vec_mod(mat, v: Vec, p: int) -> Vec:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) % p for row in mat)


def matmul_mod(a, b, p: int):
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            x = a[i][k] % p
            if x:
                for j in range(cols):
                    out[i][j] = (out[i][j] + x * b[k][j]) % p
    return out


def rref(rows_in, p: int) -> tuple[list[list[int]], list[int]]:
    """Row-reduced echelon form; returns (nonzero rows, pivot column list)."""
    mat = [list(map(lambda x: x % p, r)) for r in rows_in]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat[:r], pivots


def rank_mod(rows_in, p: int) -> int:
    return len(rref(rows_in, p)[0])


def kernel_mod(mat, p: int) -> list[Vec]:
    """Basis of the right kernel {x : mat @ x == 0 mod p}."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    red, pivots = rref(mat, p)
    free = [c for c in range(n) if c not in pivots]
    out = []
    for c in free:
        vec = [0] * n
        vec[c] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-red[r][c]) % p
        out.append(tuple(vec))
    return out


def solve_mod(mat, b: Vec, p: int) -> Vec | None:
    """One solution of mat @ x == b mod p, or None."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    aug = [list(mat[i]) + [b[i] % p] for i in range(m)]
    red, pivots = rref(aug, p)
    x = [0] * n
    for r, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = red[r][n]
    return tuple(x)


class Subspace:
    """Subspace of F_p^dim held as a canonical RREF row basis."""

    __slots__ = ("p", "dim", "rows", "pivots")

    def __init__(self, p: int, dim: int, vectors) -> None:
        self.p = p
        self.dim = dim
        red, piv = rref([list(v) for v in vectors], p) if vectors else ([], [])
        self.rows = tuple(tuple(r) for r in red)
        self.pivots = tuple(piv)

    @classmethod
    def full(cls, p: int, dim: int) -> "Subspace":
        return cls(p, dim, [[1 if j == i else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def zero(cls, p: int, dim: int) -> "Subspace":
        return cls(p, dim, [])

    @property
    def rank(self) -> int:
        return len(self.rows)

    def key(self) -> Rows:
        return self.rows

    def contains(self, vec) -> bool:
        v = [x % self.p for x in vec]
        for r, pc in enumerate(self.pivots):
            if v[pc]:
                f = v[pc]
                v = [(x - f * y) % self.p for x, y in zip(v, self.rows[r])]
        return not any(v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.p, self.dim, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.rows or not other.rows:
            return Subspace.zero(self.p, self.dim)
        # x = a^T u = b^T w: kernel of [A^T | -B^T]
        a, b = self.rows, other.rows
        mat = [[a[i][r] for i in range(len(a))] + [(-b[j][r]) % self.p for j in range(len(b))]
               for r in range(self.dim)]
        vecs = []
        for k in kernel_mod(mat, self.p):
            coeffs = k[: len(a)]
            vec = [0] * self.dim
            for i, c in enumerate(coeffs):
                if c:
                    for r in range(self.dim):
                        vec[r] = (vec[r] + c * a[i][r]) % self.p
            vecs.append(vec)
        return Subspace(self.p, self.dim, vecs)

    def coordinates_of(self, vec) -> Vec | None:
        """Coefficients of vec in the row basis, or None if outside."""
        if not self.rows:
            return () if not any(x % self.p for x in vec) else None
        mat = [[self.rows[i][r] for i in range(len(self.rows))] for r in range(self.dim)]
        return solve_mod(mat, tuple(x % self.p for x in vec), self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.rows == other.rows and self.dim == other.dim

    def __hash__(self) -> int:
        return hash((self.p, self.dim, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(p={self.p}, dim={self.dim}, rank={self.rank})"


def all_subspaces(p: int, dim: int) -> list[Subspace]:
    """Every subspace of F_p^dim, enumerated via canonical RREF matrices."""
    out = [Subspace.zero(p, dim)]
    for k in range(1, dim + 1):
        for pivot_cols in combinations(range(dim), k):
            free_positions = []
            for r in range(k):
                for c in range(pivot_cols[r] + 1, dim):
                    if c not in pivot_cols:
                        free_positions.append((r, c))
            for fill in product(range(p), repeat=len(free_positions)):
                rows = [[0] * dim for _ in range(k)]
                for r in range(k):
                    rows[r][pivot_cols[r]] = 1
                for (r, c), val in zip(free_positions, fill):
                    rows[r][c] = val
                out.append(Subspace(p, dim, rows))
    return out
