"""Finitely generated modules over Z and Z/n presented by integer relation matrices.

A module is the cokernel of the column map of its relation matrix.  Over Z/n
the lattice of relations always contains n*Z^g, so the same integer machinery
serves both rings; this is also what makes the Z vs Z/n comparison suites
meaningful (identical canonical forms on both sides).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from . import intlinalg as la
from .errors import InputError
from .primes import factorize, p_adic_valuation, prime_divisors
from .rings import KIND_Z, KIND_ZMOD, Ring

Matrix = list[list[int]]


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of associated primes of Spec Z (or Spec Z/n)."""

    primes: tuple[int, ...]
    includes_zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(sorted(set(self.primes))))

    def __len__(self) -> int:
        return len(self.primes) + (1 if self.includes_zero else 0)

    def as_list(self) -> list:
        out: list = [0] if self.includes_zero else []
        return out + list(self.primes)


@dataclass(frozen=True)
class SpClosedSubset:
    """Specialisation-closed subset of Spec Z: a set of maximal primes, or everything.

    Containing (0) forces the whole spectrum, since every prime contains (0)'s
    closure; that case is the explicit whole-spectrum marker.
    """

    primes: tuple[int, ...]
    whole_spectrum: bool = False

    @staticmethod
    def from_primes(primes, include_zero: bool = False) -> "SpClosedSubset":
        if include_zero:
            return SpClosedSubset((), True)
        return SpClosedSubset(tuple(sorted(set(primes))), False)

    def contains_prime(self, p: int) -> bool:
        if self.whole_spectrum:
            return True
        if p == 0:
            return False
        return p in self.primes

    def contains_ass(self, ass: PrimeSet) -> bool:
        if self.whole_spectrum:
            return True
        if ass.includes_zero:
            return False
        return all(p in self.primes for p in ass.primes)


class PresentedModule:
    """Cokernel of an integer relation matrix (g generators, columns = relations)."""

    __slots__ = ("ring", "gens", "relations", "_dec", "_rel_lattice")

    def __init__(self, ring: Ring, gens: int, relations: Matrix):
        if ring.kind not in (KIND_Z, KIND_ZMOD):
            raise InputError("presented modules live over Z or Z/n")
        if gens < 0:
            raise InputError("generator count must be >= 0")
        rels = [list(map(int, row)) for row in relations]
        if len(rels) != gens:
            raise InputError(f"relation matrix must have {gens} rows, got {len(rels)}")
        width = {len(r) for r in rels}
        if len(width) > 1:
            raise InputError("relation matrix rows must have equal length")
        if ring.kind == KIND_ZMOD:
            rels = [[x % ring.n for x in row] for row in rels]
        self.ring = ring
        self.gens = gens
        self.relations = rels
        self._dec = None
        self._rel_lattice = None

    # -- presentation-level helpers -----------------------------------------

    def _full_relation_matrix(self) -> Matrix:
        """Relations plus n*I over Z/n, so the lattice is the true relation lattice."""
        if self.ring.kind == KIND_ZMOD:
            extra = [[self.ring.n if i == j else 0 for j in range(self.gens)]
                     for i in range(self.gens)]
            return la.hstack(self.relations, extra)
        return self.relations

    def relation_lattice(self) -> la.ColumnEchelonLattice:
        if self._rel_lattice is None:
            self._rel_lattice = la.ColumnEchelonLattice(
                self.gens, la.columns(self._full_relation_matrix()))
        return self._rel_lattice

    def _decomposition(self):
        """(Uinv, coords) with coords = list of (index, delta) for delta != 1.

        delta = 0 marks a free coordinate; the module is the direct sum of
        Z/delta (resp. Z) over coords, and an element with coordinate vector x
        has generator coordinates Uinv @ pad(x).
        """
        if self._dec is None:
            full = self._full_relation_matrix()
            u, ui, d, _, _ = la.smith_with_inverses(full)
            diag = la.diagonal_of(d)
            deltas = [diag[i] if i < len(diag) else 0 for i in range(self.gens)]
            coords = [(i, delta) for i, delta in enumerate(deltas) if delta != 1]
            self._dec = (u, ui, coords)
        return self._dec

    # -- structure invariants --------------------------------------------------

    def canonical_decomposition(self) -> tuple[int, list[int]]:
        """(free_rank, invariant_factors) with 1 < d1 | d2 | ..."""
        _, _, coords = self._decomposition()
        factors = [delta for _, delta in coords if delta >= 2]
        free = sum(1 for _, delta in coords if delta == 0)
        return free, factors

    @property
    def free_rank(self) -> int:
        return self.canonical_decomposition()[0]

    @property
    def invariant_factors(self) -> list[int]:
        return self.canonical_decomposition()[1]

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int:
        if not self.is_finite():
            raise InputError("module is infinite")
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def coords_to_generators(self, coeffs: list[int]) -> list[int]:
        """Generator coordinates of the element with decomposition coords `coeffs`."""
        _, ui, coords = self._decomposition()
        vec = [0] * self.gens
        for (idx, _), c in zip(coords, coeffs):
            vec[idx] = c
        return la.mat_vec(ui, vec)

    def element_vectors(self):
        """Iterate generator-coordinate vectors of all elements (finite modules)."""
        from itertools import product as iproduct
        _, _, coords = self._decomposition()
        if any(delta == 0 for _, delta in coords):
            raise InputError("cannot enumerate an infinite module")
        ranges = [range(delta) for _, delta in coords]
        for combo in iproduct(*ranges):
            yield self.coords_to_generators(list(combo))

    def __eq__(self, other) -> bool:
        # equality of modules, not of presentations
        return (isinstance(other, PresentedModule)
                and self.ring == other.ring
                and self.canonical_decomposition() == other.canonical_decomposition())

    def __hash__(self):
        free, factors = self.canonical_decomposition()
        return hash((self.ring, free, tuple(factors)))

    def describe(self) -> str:
        free, factors = self.canonical_decomposition()
        parts = ["Z"] * free + [f"Z/{d}" for d in factors]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"PresentedModule({self.describe()} over {self.ring.describe()})"


# -----------------------------------------------------------------------------
# subobjects
# -----------------------------------------------------------------------------


class Subobject:
    """A submodule given by generator-coordinate columns inside a fixed ambient."""

    __slots__ = ("ambient", "embedding", "lattice", "_as_module")

    def __init__(self, ambient: PresentedModule, embedding: Matrix):
        if len(embedding) != ambient.gens:
            raise InputError("embedding matrix must have one row per ambient generator")
        self.ambient = ambient
        self.embedding = [list(map(int, row)) for row in embedding]
        cols = la.columns(self.embedding) + [c[:] for c in ambient.relation_lattice().basis]
        self.lattice = la.ColumnEchelonLattice(ambient.gens, cols)
        self._as_module = None

    @staticmethod
    def zero(ambient: PresentedModule) -> "Subobject":
        return Subobject(ambient, [[] for _ in range(ambient.gens)])

    @staticmethod
    def full(ambient: PresentedModule) -> "Subobject":
        return Subobject(ambient, la.identity(ambient.gens))

    def key(self) -> tuple:
        return self.lattice.key()

    def is_zero(self) -> bool:
        return self.key() == self.ambient.relation_lattice().key()

    def is_full(self) -> bool:
        return all(self.lattice.contains([1 if i == j else 0 for i in range(self.ambient.gens)])
                   for j in range(self.ambient.gens))

    def contains(self, other: "Subobject") -> bool:
        return self.lattice.contains_all(la.columns(other.embedding))

    def order(self) -> int:
        if not self.ambient.is_finite():
            raise InputError("subobject order needs a finite ambient module")
        return abs(self.ambient.relation_lattice().determinant_index()
                   // self.lattice.determinant_index())

    def as_module(self) -> PresentedModule:
        """The subobject presented on its own embedding columns."""
        if self._as_module is None:
            emb_cols = la.columns(self.embedding)
            k = len(emb_cols)
            rel_basis = self.ambient.relation_lattice().basis
            stacked = la.from_columns(emb_cols + rel_basis, self.ambient.gens)
            rels = []
            for kern in la.kernel_basis(stacked):
                rels.append(kern[:k])
            rel_matrix = la.from_columns(rels, k) if rels else [[] for _ in range(k)]
            self._as_module = PresentedModule(self.ambient.ring, k, rel_matrix)
        return self._as_module

    def sum(self, other: "Subobject") -> "Subobject":
        return Subobject(self.ambient, la.hstack(self.embedding, other.embedding))

    def intersect(self, other: "Subobject") -> "Subobject":
        a = self.lattice.basis
        b = other.lattice.basis
        if not a or not b:
            return Subobject.zero(self.ambient)
        stacked = la.from_columns(a + [[-x for x in c] for c in b], self.ambient.gens)
        cols = []
        for kern in la.kernel_basis(stacked):
            coeffs = kern[: len(a)]
            vec = [0] * self.ambient.gens
            for c, col in zip(coeffs, a):
                for i in range(self.ambient.gens):
                    vec[i] += c * col[i]
            cols.append(vec)
        return Subobject(self.ambient, la.from_columns(cols, self.ambient.gens))

    def sort_token(self):
        if self.ambient.is_finite():
            return (self.order(), self.key())
        return (0, self.key())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subobject) and self.ambient == other.ambient
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Subobject({self.as_module().describe()} in {self.ambient.describe()})"


# -----------------------------------------------------------------------------
# operations
# -----------------------------------------------------------------------------


def smith_normal_form(a: Matrix):
    """Re-export of the exact Smith form (U, D, V) with U @ a @ V = D."""
    return la.smith_normal_form(a)


def quotient(module: PresentedModule, sub: Subobject) -> PresentedModule:
    if sub.ambient is not module and sub.ambient != module:
        raise InputError("subobject does not live in the given module")
    return PresentedModule(module.ring, module.gens,
                           la.hstack(module.relations, sub.embedding))


def _subgroup_matrices(deltas: list[int]):
    """All canonical lower-triangular lattice bases T with diag(deltas) <= span(T).

    Enumerates each subgroup of  Z/d_1 + ... + Z/d_k  exactly once, by solving
    the divisibility congruences row by row instead of filtering a product
    space.  `sols[j]` tracks the partial solution of T x = d_j e_j.
    """
    k = len(deltas)
    results: list[list[list[int]]] = []

    def extend(i: int, rows: list[list[int]], sols: list[list[int]]):
        if i == k:
            results.append([row[:] for row in rows])
            return
        for t in _divisors(deltas[i]):
            row = [0] * k
            row[i] = t

            def pick(j: int, chosen: dict):
                if j < 0:
                    new_rows = rows + [row[:]]
                    new_sols = []
                    for jj, sol in enumerate(sols):
                        total = sum(row[l] * sol[l] for l in range(jj, i))
                        new_sols.append(sol + [(-total) // t])
                    new_sols.append([0] * i + [deltas[i] // t])
                    extend(i + 1, new_rows, new_sols)
                    return
                sol = sols[j]
                a = sol[j]
                c = (-sum(row[l] * sol[l] for l in range(j + 1, i))) % t
                g = math.gcd(a % t, t)
                if c % g:
                    return
                m = t // g
                a_red = (a % t) // g
                c_red = (c // g) % m
                base = (c_red * pow(a_red, -1, m)) % m if m > 1 else 0
                for step in range(g):
                    row[j] = base + step * m
                    pick(j - 1, chosen)
                row[j] = 0

            pick(i - 1, {})

    extend(0, [], [])
    return results


def enumerate_submodules(module: PresentedModule) -> list[Subobject]:
    """Every submodule exactly once, sorted by (order, canonical lattice key)."""
    if not module.is_finite():
        raise InputError(
            "submodule enumeration needs a finite module; for infinite modules "
            "use the associated-prime criterion instead")
    _, _, coords = module._decomposition()
    deltas = [delta for _, delta in coords]
    subs = []
    for t_mat in _subgroup_matrices(deltas):
        cols = [module.coords_to_generators([t_mat[r][c] for r in range(len(deltas))])
                for c in range(len(deltas))]
        subs.append(Subobject(module, la.from_columns(cols, module.gens)))
    subs.sort(key=lambda s: s.sort_token())
    return subs


# -- hom groups ---------------------------------------------------------------


def _hom_summands(src: PresentedModule, dst: PresentedModule):
    """Cyclic summands of Hom(src, dst): (src coord, dst coord, order, coeff).

    order 0 encodes an infinite cyclic summand.  The generator morphism sends
    src coordinate i to coeff times dst coordinate j.
    """
    _, _, coords_s = src._decomposition()
    _, _, coords_d = dst._decomposition()
    out = []
    for i, da in coords_s:
        for j, db in coords_d:
            if da == 0 and db == 0:
                out.append((i, j, 0, 1))
            elif da == 0:
                out.append((i, j, db, 1))
            elif db == 0:
                continue  # Hom(Z/a, Z) = 0
            else:
                g = math.gcd(da, db)
                if g > 1:
                    out.append((i, j, g, db // g))
    return out


def hom_group(src: PresentedModule, dst: PresentedModule):
    """(H, basis): H presents Hom(src, dst) as a module; basis are lifted matrices.

    basis[k] is a dst.gens x src.gens integer matrix describing the k-th
    generator morphism on generator coordinates.
    """
    if src.ring != dst.ring:
        raise InputError("hom requires modules over the same ring")
    summands = _hom_summands(src, dst)
    u_s, _, _ = src._decomposition()
    _, ui_d, _ = dst._decomposition()
    basis = []
    for i, j, _, coeff in summands:
        mat = [[ui_d[r][j] * coeff * u_s[i][s] for s in range(src.gens)]
               for r in range(dst.gens)]
        basis.append(mat)
    rel_cols = []
    count = len(summands)
    for idx, (_, _, order, _) in enumerate(summands):
        if order:
            col = [0] * count
            col[idx] = order
            rel_cols.append(col)
    h = PresentedModule(src.ring, count, la.from_columns(rel_cols, count))
    return h, basis


def hom_is_zero(src: PresentedModule, dst: PresentedModule) -> bool:
    if src.ring != dst.ring:
        raise InputError("hom requires modules over the same ring")
    return not _hom_summands(src, dst)


# -- associated primes and primary parts ---------------------------------------


def associated_primes(module: PresentedModule) -> PrimeSet:
    free, factors = module.canonical_decomposition()
    primes: set[int] = set()
    for d in factors:
        primes.update(prime_divisors(d))
    return PrimeSet(tuple(sorted(primes)), includes_zero=free > 0)


def _p_primary_columns(module: PresentedModule, p: int) -> list[list[int]]:
    _, _, coords = module._decomposition()
    cols = []
    for pos, (idx, delta) in enumerate(coords):
        if delta == 0:
            continue
        v = p_adic_valuation(delta, p)
        if v > 0:
            coeffs = [0] * len(coords)
            coeffs[pos] = delta // (p ** v)
            cols.append(module.coords_to_generators(coeffs))
    return cols


def primary_component(module: PresentedModule, p: int) -> Subobject:
    """Largest submodule annihilated by a power of p (finite modules)."""
    if not module.is_finite():
        raise InputError("primary components are computed for finite modules")
    return Subobject(module, la.from_columns(_p_primary_columns(module, p), module.gens))


def primary_component_of_torsion(module: PresentedModule, p: int) -> Subobject:
    """p-primary part of the torsion submodule; defined for any f.g. module."""
    return Subobject(module, la.from_columns(_p_primary_columns(module, p), module.gens))


def torsion_submodule(module: PresentedModule) -> Subobject:
    """The full torsion part (finite factors) of a f.g. module over Z."""
    _, _, coords = module._decomposition()
    cols = []
    for pos, (idx, delta) in enumerate(coords):
        if delta >= 2:
            coeffs = [0] * len(coords)
            coeffs[pos] = 1
            cols.append(module.coords_to_generators(coeffs))
    return Subobject(module, la.from_columns(cols, module.gens))


def multiplication_endo(module: PresentedModule, c: int) -> Matrix:
    """Generator-coordinate matrix of multiplication by c."""
    return [[c if i == j else 0 for j in range(module.gens)] for i in range(module.gens)]


# -- catalogues (used by suites and tests) --------------------------------------


def _partitions(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return out


def cyclic_module(ring: Ring, d: int) -> PresentedModule:
    return PresentedModule(ring, 1, [[d]])


def direct_sum_module(ring: Ring, orders: list[int]) -> PresentedModule:
    k = len(orders)
    rels = [[orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
    return PresentedModule(ring, k, rels)


def finite_abelian_modules(order: int, ring: Ring | None = None) -> list[PresentedModule]:
    """One presentation per isomorphism class of abelian groups of this order."""
    ring = ring or Ring.integers()
    if order < 1:
        raise InputError("order must be >= 1")
    if order == 1:
        return [PresentedModule(ring, 0, [])]
    factorisation = factorize(order)
    per_prime = []
    for p in sorted(factorisation):
        e = factorisation[p]
        per_prime.append([[p ** part for part in lam] for lam in _partitions(e)])
    groups = [[]]
    for options in per_prime:
        groups = [g + choice for g in groups for choice in options]
    return [direct_sum_module(ring, orders) for orders in groups]
