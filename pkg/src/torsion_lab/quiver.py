"""Finite-dimensional representations of finite acyclic quivers over prime fields.

A representation assigns F_p^d to each vertex and a (target x source) matrix
to each arrow.  Subrepresentations are per-vertex subspaces stable under all
arrow maps; their canonical form is the tuple of RREF bases, which gives
deterministic enumeration order and cheap equality.
"""
from __future__ import annotations

from itertools import product as iproduct

from .errors import InputError
from .modlinalg import Subspace, all_subspaces, kernel_mod, rref
from .primes import is_prime

ENUM_DIM_BOUND = 4
ENUM_PRIMES = (2, 3, 5)


class Quiver:
    __slots__ = ("vertex_count", "arrows", "_topo")

    def __init__(self, vertex_count: int, arrows):
        if vertex_count < 1:
            raise InputError("a quiver needs at least one vertex")
        arr = []
        for s, t in arrows:
            s, t = int(s), int(t)
            if not (0 <= s < vertex_count and 0 <= t < vertex_count):
                raise InputError(f"arrow ({s},{t}) references a missing vertex")
            arr.append((s, t))
        self.vertex_count = vertex_count
        self.arrows = tuple(arr)
        self._topo = self._topological_order()

    def _topological_order(self) -> tuple[int, ...]:
        indeg = [0] * self.vertex_count
        for _, t in self.arrows:
            indeg[t] += 1
        order = []
        ready = sorted(v for v in range(self.vertex_count) if indeg[v] == 0)
        while ready:
            v = ready.pop(0)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0 and t not in ready:
                        ready.append(t)
            ready.sort()
        if len(order) != self.vertex_count:
            raise InputError("quiver has a directed cycle")
        return tuple(order)

    @property
    def topological_order(self) -> tuple[int, ...]:
        return self._topo

    def __eq__(self, other):
        return (isinstance(other, Quiver) and other.vertex_count == self.vertex_count
                and other.arrows == self.arrows)

    def __hash__(self):
        return hash((self.vertex_count, self.arrows))

    def __repr__(self):
        return f"Quiver({self.vertex_count} vertices, arrows={list(self.arrows)})"


def a_n_quiver(n: int) -> Quiver:
    """The linearly oriented A_n quiver 0 -> 1 -> ... -> n-1."""
    return Quiver(n, [(i, i + 1) for i in range(n - 1)])


class QuiverRep:
    __slots__ = ("quiver", "p", "dims", "maps")

    def __init__(self, quiver: Quiver, p: int, dims, maps):
        if not is_prime(p):
            raise InputError(f"representations need a prime field, got p={p!r}")
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.vertex_count:
            raise InputError("one dimension per vertex required")
        if any(d < 0 for d in dims):
            raise InputError("dimensions must be >= 0")
        if len(maps) != len(quiver.arrows):
            raise InputError("one matrix per arrow required")
        norm_maps = []
        for (s, t), mat in zip(quiver.arrows, maps):
            rows = [tuple(int(x) % p for x in row) for row in mat]
            if len(rows) != dims[t] or any(len(r) != dims[s] for r in rows):
                raise InputError(
                    f"arrow ({s},{t}) needs a {dims[t]}x{dims[s]} matrix")
            norm_maps.append(tuple(rows))
        self.quiver = quiver
        self.p = p
        self.dims = dims
        self.maps = tuple(norm_maps)

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def support(self) -> list[int]:
        return [v for v, d in enumerate(self.dims) if d > 0]

    def key(self):
        return (self.dims, self.maps)

    def __eq__(self, other):
        return (isinstance(other, QuiverRep) and other.quiver == self.quiver
                and other.p == self.p and other.key() == self.key())

    def __hash__(self):
        return hash((self.quiver, self.p, self.key()))

    def __repr__(self):
        return f"QuiverRep(p={self.p}, dims={self.dims})"


def simple_rep(quiver: Quiver, p: int, vertex: int) -> QuiverRep:
    dims = [1 if v == vertex else 0 for v in range(quiver.vertex_count)]
    maps = [[[0] * dims[s] for _ in range(dims[t])] for s, t in quiver.arrows]
    return QuiverRep(quiver, p, dims, maps)


def zero_rep(quiver: Quiver, p: int) -> QuiverRep:
    return QuiverRep(quiver, p, [0] * quiver.vertex_count,
                     [[] for _ in quiver.arrows])


def direct_sum(x: QuiverRep, y: QuiverRep) -> QuiverRep:
    if x.quiver != y.quiver or x.p != y.p:
        raise InputError("direct sum needs the same quiver and field")
    dims = [a + b for a, b in zip(x.dims, y.dims)]
    maps = []
    for k, (s, t) in enumerate(x.quiver.arrows):
        block = [[0] * dims[s] for _ in range(dims[t])]
        for i in range(x.dims[t]):
            for j in range(x.dims[s]):
                block[i][j] = x.maps[k][i][j]
        for i in range(y.dims[t]):
            for j in range(y.dims[s]):
                block[x.dims[t] + i][x.dims[s] + j] = y.maps[k][i][j]
        maps.append(block)
    return QuiverRep(x.quiver, x.p, dims, maps)


class SubRep:
    """Arrow-stable tuple of per-vertex subspaces of an ambient representation."""

    __slots__ = ("ambient", "spaces")

    def __init__(self, ambient: QuiverRep, spaces, check: bool = True):
        if len(spaces) != ambient.quiver.vertex_count:
            raise InputError("one subspace per vertex required")
        norm = []
        for v, sp in enumerate(spaces):
            if isinstance(sp, Subspace):
                if sp.dim != ambient.dims[v] or sp.p != ambient.p:
                    raise InputError(f"subspace at vertex {v} has wrong ambient dimension")
                norm.append(sp)
            else:
                norm.append(Subspace(ambient.p, ambient.dims[v], sp))
        self.ambient = ambient
        self.spaces = tuple(norm)
        if check and not self.is_stable():
            raise InputError("subspaces are not stable under the arrow maps")

    def is_stable(self) -> bool:
        for k, (s, t) in enumerate(self.ambient.quiver.arrows):
            mat = self.ambient.maps[k]
            for vec in self.spaces[s].rows:
                img = tuple(sum(mat[i][j] * vec[j] for j in range(len(vec))) % self.ambient.p
                            for i in range(self.ambient.dims[t]))
                if not self.spaces[t].contains(img):
                    return False
        return True

    @staticmethod
    def zero(ambient: QuiverRep) -> "SubRep":
        return SubRep(ambient, [Subspace.zero(ambient.p, d) for d in ambient.dims],
                      check=False)

    @staticmethod
    def full(ambient: QuiverRep) -> "SubRep":
        return SubRep(ambient, [Subspace.full(ambient.p, d) for d in ambient.dims],
                      check=False)

    def dims(self) -> tuple[int, ...]:
        return tuple(sp.rank for sp in self.spaces)

    def total_dim(self) -> int:
        return sum(sp.rank for sp in self.spaces)

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def is_full(self) -> bool:
        return self.dims() == self.ambient.dims

    def key(self):
        return tuple(sp.rows for sp in self.spaces)

    def sort_token(self):
        return (self.total_dim(), self.dims(), self.key())

    def contains(self, other: "SubRep") -> bool:
        return all(a.contains_space(b) for a, b in zip(self.spaces, other.spaces))

    def sum(self, other: "SubRep") -> "SubRep":
        return SubRep(self.ambient, [a.sum(b) for a, b in zip(self.spaces, other.spaces)],
                      check=False)

    def intersect(self, other: "SubRep") -> "SubRep":
        return SubRep(self.ambient,
                      [a.intersect(b) for a, b in zip(self.spaces, other.spaces)],
                      check=False)

    def as_rep(self) -> QuiverRep:
        """The subrepresentation on its own subspace bases."""
        amb = self.ambient
        dims = [sp.rank for sp in self.spaces]
        maps = []
        for k, (s, t) in enumerate(amb.quiver.arrows):
            mat = amb.maps[k]
            cols = []
            for vec in self.spaces[s].rows:
                img = tuple(sum(mat[i][j] * vec[j] for j in range(len(vec))) % amb.p
                            for i in range(amb.dims[t]))
                coords = self.spaces[t].coordinates_of(img)
                if coords is None:
                    raise InputError("subspaces are not stable under the arrow maps")
                cols.append(coords)
            maps.append([[cols[j][i] for j in range(dims[s])] for i in range(dims[t])])
        return QuiverRep(amb.quiver, amb.p, dims, maps)

    def __eq__(self, other):
        return (isinstance(other, SubRep) and other.ambient == self.ambient
                and other.key() == self.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"SubRep(dims={self.dims()} of {self.ambient.dims})"


def hom_space(x: QuiverRep, y: QuiverRep) -> list[tuple]:
    """Basis of Hom(x, y): each morphism is a tuple of per-vertex matrices.

    Solves the commuting-square system f_t X_a = Y_a f_s for all arrows.
    """
    if x.quiver != y.quiver or x.p != y.p:
        raise InputError("hom needs the same quiver and prime field")
    p = x.p
    nv = x.quiver.vertex_count
    offsets = []
    total = 0
    for v in range(nv):
        offsets.append(total)
        total += x.dims[v] * y.dims[v]
    if total == 0:
        return []
    rows = []
    for k, (s, t) in enumerate(x.quiver.arrows):
        xa, ya = x.maps[k], y.maps[k]
        for i in range(y.dims[t]):
            for j in range(x.dims[s]):
                row = [0] * total
                # (f_t X_a)_{i,j} = sum_m f_t[i][m] * X_a[m][j]
                for m in range(x.dims[t]):
                    row[offsets[t] + i * x.dims[t] + m] = (row[offsets[t] + i * x.dims[t] + m]
                                                           + xa[m][j]) % p
                # (Y_a f_s)_{i,j} = sum_m Y_a[i][m] * f_s[m][j]
                for m in range(y.dims[s]):
                    row[offsets[s] + m * x.dims[s] + j] = (row[offsets[s] + m * x.dims[s] + j]
                                                           - ya[i][m]) % p
                if any(row):
                    rows.append(row)
    basis_vecs = kernel_mod(rows, p) if rows else [
        tuple(1 if i == j else 0 for i in range(total)) for j in range(total)]
    out = []
    for vec in basis_vecs:
        mats = []
        for v in range(nv):
            mat = [[vec[offsets[v] + i * x.dims[v] + j] for j in range(x.dims[v])]
                   for i in range(y.dims[v])]
            mats.append(tuple(tuple(r) for r in mat))
        out.append(tuple(mats))
    return out


def hom_dim(x: QuiverRep, y: QuiverRep) -> int:
    return len(hom_space(x, y))


def enumerate_subreps(x: QuiverRep, dim_bound: int = ENUM_DIM_BOUND) -> list[SubRep]:
    """All arrow-stable subspace tuples, canonically ordered."""
    if x.p not in ENUM_PRIMES:
        raise InputError(f"subrepresentation enumeration supports p in {ENUM_PRIMES}")
    if any(d > dim_bound for d in x.dims):
        raise InputError(
            f"per-vertex dimension exceeds the enumeration bound {dim_bound}")
    per_vertex = [all_subspaces(x.p, d) for d in x.dims]
    order = x.quiver.topological_order
    arrows_by_target_pos: dict[int, list[int]] = {}
    pos_of = {v: i for i, v in enumerate(order)}
    for k, (s, t) in enumerate(x.quiver.arrows):
        key = max(pos_of[s], pos_of[t])
        arrows_by_target_pos.setdefault(key, []).append(k)
    chosen: list = [None] * x.quiver.vertex_count
    out = []

    def rec(pos: int):
        if pos == len(order):
            out.append(SubRep(x, [chosen[v] for v in range(x.quiver.vertex_count)],
                              check=False))
            return
        v = order[pos]
        for sp in per_vertex[v]:
            chosen[v] = sp
            ok = True
            for k in arrows_by_target_pos.get(pos, []):
                s, t = x.quiver.arrows[k]
                mat = x.maps[k]
                for vec in chosen[s].rows:
                    img = tuple(sum(mat[i][j] * vec[j] for j in range(len(vec))) % x.p
                                for i in range(x.dims[t]))
                    if not chosen[t].contains(img):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                rec(pos + 1)
        chosen[v] = None

    rec(0)
    out.sort(key=lambda s: s.sort_token())
    return out


def quotient_rep(x: QuiverRep, sub: SubRep):
    """(quotient representation, per-vertex projection matrices)."""
    if sub.ambient != x:
        raise InputError("subrepresentation does not live in the given representation")
    if not sub.is_stable():
        raise InputError("cannot form the quotient by an unstable subspace tuple")
    p = x.p
    projections = []
    qdims = []
    for v in range(x.quiver.vertex_count):
        sp = sub.spaces[v]
        d = x.dims[v]
        free_cols = [c for c in range(d) if c not in sp.pivots]
        qdims.append(len(free_cols))
        proj = []
        for c in free_cols:
            row = [0] * d
            row[c] = 1
            # subtract the subspace contribution: e_c reduced by RREF rows
            for r, pc in enumerate(sp.pivots):
                row[pc] = (row[pc] - sp.rows[r][c]) % p
            # row encodes the linear functional reading the c-coordinate of the
            # reduction of a vector modulo the subspace
            proj.append(row)
        projections.append(proj)
    qmaps = []
    for k, (s, t) in enumerate(x.quiver.arrows):
        mat = x.maps[k]
        free_s = [c for c in range(x.dims[s]) if c not in sub.spaces[s].pivots]
        block = []
        for i in range(qdims[t]):
            block.append([0] * qdims[s])
        for jq, c in enumerate(free_s):
            vec = tuple(mat[i][c] % p for i in range(x.dims[t]))
            img = [sum(projections[t][i][j] * vec[j] for j in range(x.dims[t])) % p
                   for i in range(qdims[t])]
            for i in range(qdims[t]):
                block[i][jq] = img[i]
        qmaps.append(block)
    q = QuiverRep(x.quiver, p, qdims, qmaps)
    return q, projections


def composition_factors(x: QuiverRep) -> dict[int, int]:
    """Multiplicity of the simple at each vertex; for acyclic quivers this is dims."""
    return {v: d for v, d in enumerate(x.dims) if d > 0}


def rep_length(x: QuiverRep) -> int:
    return x.total_dim()


def single_vertex_support(x: QuiverRep) -> bool:
    """True iff the representation is concentrated in one vertex."""
    return len(x.support()) == 1


def is_isomorphic(x: QuiverRep, y: QuiverRep) -> bool:
    """Isomorphism test by exhaustive search for an invertible morphism."""
    if x.quiver != y.quiver or x.p != y.p:
        return False
    if x.dims != y.dims:
        return False
    if x.is_zero():
        return True
    basis = hom_space(x, y)
    if not basis:
        return False
    p = x.p
    if p ** len(basis) > 200_000:
        raise InputError("isomorphism search space too large")
    for coeffs in iproduct(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        good = True
        for v in range(x.quiver.vertex_count):
            d = x.dims[v]
            if d == 0:
                continue
            mat = [[sum(c * basis[b][v][i][j] for b, c in enumerate(coeffs)) % p
                    for j in range(d)] for i in range(d)]
            if len(rref(mat, p)[0]) != d:
                good = False
                break
        if good:
            return True
    return False
