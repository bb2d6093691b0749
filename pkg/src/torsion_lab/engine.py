"""Torsion machinery over abstract finite-length universes.

The engine never looks inside objects: it talks to a handle that knows how to
enumerate subobjects, compute hom bases, form quotients with projections, and
push/pull subobjects along morphisms.  Two handles are provided, one for
finitely generated modules over Z or Z/n and one for quiver representations.

A subobject w of x is a torsion part iff Hom(w, x/w) = 0; the engine computes
the set of all torsion parts, decides torsion-simplicity, and evaluates the
iterated trace/reject constructions for radicals and coradicals of generated
and cogenerated torsion pairs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import abelian as ab
from . import intlinalg as la
from . import modlinalg as ml
from . import quiver as qv
from .errors import ContradictionError, InputError
from .primes import factorize
from .rings import Ring


@dataclass(frozen=True)
class Morph:
    """Handle-specific morphism: matrix (modules) or per-vertex matrices (quivers)."""

    src: object
    dst: object
    data: object


@dataclass
class TorsionPartSet:
    obj: object
    parts: list
    pruned: bool

    def __len__(self) -> int:
        return len(self.parts)

    def keys(self) -> list:
        return [w.key() for w in self.parts]


@dataclass
class SimplicityReport:
    verdict: bool
    method: str
    witness: Optional[object] = None
    type_tag: Optional[tuple] = None


@dataclass
class InjectiveCriterionReport:
    kernel_essential: bool
    kernel_in_image: bool
    hypotheses_hold: bool
    checked_parts: int = 0


@dataclass
class AxiomCheckResult:
    object_desc: str
    orthogonal: bool
    maximal: bool
    idempotent: bool

    @property
    def passed(self) -> bool:
        return self.orthogonal and self.maximal and self.idempotent


# ---------------------------------------------------------------------------
# handles
# ---------------------------------------------------------------------------


class AbelianHandle:
    """Finitely generated modules over Z or Z/n as a torsion universe."""

    def __init__(self, ring: Ring):
        if ring.kind not in ("Z", "IntegersMod"):
            raise InputError("the module handle works over Z or Z/n")
        self.ring = ring

    # objects are PresentedModule, subobjects are ab.Subobject

    def is_zero_object(self, x) -> bool:
        return x.is_zero()

    def enumerable(self, x) -> bool:
        return x.is_finite()

    def subobjects(self, x):
        return ab.enumerate_submodules(x)

    def zero_sub(self, x):
        return ab.Subobject.zero(x)

    def full_sub(self, x):
        return ab.Subobject.full(x)

    def sub_as_object(self, w):
        return w.as_module()

    def quotient(self, x, w):
        q = ab.quotient(x, w)
        return q, Morph(x, q, la.identity(x.gens))

    def hom_basis(self, a, b):
        _, basis = ab.hom_group(a, b)
        return [Morph(a, b, m) for m in basis]

    def hom_is_zero(self, a, b) -> bool:
        return ab.hom_is_zero(a, b)

    def endo_basis(self, x):
        return self.hom_basis(x, x)

    def identity_morph(self, x):
        return Morph(x, x, la.identity(x.gens))

    def multiplication_morph(self, x, c: int):
        return Morph(x, x, ab.multiplication_endo(x, c))

    def image(self, f: Morph):
        return ab.Subobject(f.dst, f.data)

    def push_sub(self, f: Morph, w):
        return ab.Subobject(f.dst, la.matmul(f.data, w.embedding))

    def pull_sub(self, f: Morph, w):
        src_g = f.src.gens
        lw = w.lattice.basis
        stacked = la.from_columns(la.columns(f.data) + lw, f.dst.gens)
        cols = [k[:src_g] for k in la.kernel_basis(stacked)]
        return ab.Subobject(f.src, la.from_columns(cols, src_g))

    def kernel(self, f: Morph):
        return self.pull_sub(f, ab.Subobject.zero(f.dst))

    def compose_sub(self, x, w, inner):
        emb = la.matmul(w.embedding, inner.embedding)
        return ab.Subobject(x, emb)

    def sum_subs(self, x, ws):
        acc = ab.Subobject.zero(x)
        for w in ws:
            acc = acc.sum(w)
        return acc

    def part_test(self, x, w) -> bool:
        """Hom(w, x/w) = 0, using the coprime-order rule on finite modules."""
        if x.is_finite():
            order_w = w.order()
            return math.gcd(order_w, x.order() // order_w) == 1
        q, _ = self.quotient(x, w)
        return self.hom_is_zero(self.sub_as_object(w), q)

    def sub_stable(self, x, w, endos) -> bool:
        basis = w.lattice.basis
        for f in endos:
            for col in basis:
                if not w.lattice.contains(la.mat_vec(f.data, col)):
                    return False
        return True

    def composition_tags(self, x) -> dict:
        if not x.is_finite():
            raise InputError("composition factors need a finite-length object")
        tags: dict = {}
        for d in x.invariant_factors:
            for p, e in factorize(d).items():
                tags[("prime", p)] = tags.get(("prime", p), 0) + e
        return tags

    def associated_primes(self, x) -> ab.PrimeSet:
        return ab.associated_primes(x)

    def describe(self, x) -> str:
        return x.describe()


class QuiverHandle:
    """Finite-dimensional representations of a fixed acyclic quiver over F_p."""

    def __init__(self, quiver: qv.Quiver, p: int, dim_bound: int = qv.ENUM_DIM_BOUND):
        self.quiver = quiver
        self.p = p
        self.dim_bound = dim_bound

    def is_zero_object(self, x) -> bool:
        return x.is_zero()

    def enumerable(self, x) -> bool:
        return True

    def subobjects(self, x):
        return qv.enumerate_subreps(x, dim_bound=self.dim_bound)

    def zero_sub(self, x):
        return qv.SubRep.zero(x)

    def full_sub(self, x):
        return qv.SubRep.full(x)

    def sub_as_object(self, w):
        return w.as_rep()

    def quotient(self, x, w):
        q, projections = qv.quotient_rep(x, w)
        return q, Morph(x, q, tuple(tuple(tuple(r) for r in m) for m in projections))

    def hom_basis(self, a, b):
        return [Morph(a, b, mats) for mats in qv.hom_space(a, b)]

    def hom_is_zero(self, a, b) -> bool:
        return not qv.hom_space(a, b)

    def endo_basis(self, x):
        return self.hom_basis(x, x)

    def identity_morph(self, x):
        mats = tuple(tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
                     for d in x.dims)
        return Morph(x, x, mats)

    def image(self, f: Morph):
        spaces = []
        for v in range(f.dst.quiver.vertex_count):
            mat = f.data[v]
            cols = [[mat[i][j] for i in range(f.dst.dims[v])] for j in range(f.src.dims[v])]
            spaces.append(ml.Subspace(self.p, f.dst.dims[v], cols))
        return qv.SubRep(f.dst, spaces, check=False)

    def push_sub(self, f: Morph, w):
        spaces = []
        for v in range(f.dst.quiver.vertex_count):
            mat = f.data[v]
            vecs = [ml.mat_vec_mod(mat, vec, self.p) for vec in w.spaces[v].rows]
            spaces.append(ml.Subspace(self.p, f.dst.dims[v], vecs))
        return qv.SubRep(f.dst, spaces, check=False)

    def pull_sub(self, f: Morph, w):
        spaces = []
        for v in range(f.src.quiver.vertex_count):
            d_src = f.src.dims[v]
            d_dst = f.dst.dims[v]
            sp = w.spaces[v]
            # functionals cutting out w at this vertex
            functionals = []
            free_cols = [c for c in range(d_dst) if c not in sp.pivots]
            for c in free_cols:
                row = [0] * d_dst
                row[c] = 1
                for r, pc in enumerate(sp.pivots):
                    row[pc] = (row[pc] - sp.rows[r][c]) % self.p
                functionals.append(row)
            if not functionals:
                spaces.append(ml.Subspace.full(self.p, d_src))
                continue
            mat = ml.matmul_mod(functionals, f.data[v], self.p) if d_src else []
            vecs = ml.kernel_mod([r for r in mat], self.p) if d_src else []
            spaces.append(ml.Subspace(self.p, d_src, vecs))
        return qv.SubRep(f.src, spaces, check=False)

    def kernel(self, f: Morph):
        return self.pull_sub(f, qv.SubRep.zero(f.dst))

    def compose_sub(self, x, w, inner):
        spaces = []
        for v in range(x.quiver.vertex_count):
            amb_rows = w.spaces[v].rows
            vecs = []
            for coeffs in inner.spaces[v].rows:
                vec = [0] * x.dims[v]
                for c, row in zip(coeffs, amb_rows):
                    for i in range(x.dims[v]):
                        vec[i] = (vec[i] + c * row[i]) % self.p
                vecs.append(vec)
            spaces.append(ml.Subspace(self.p, x.dims[v], vecs))
        return qv.SubRep(x, spaces, check=False)

    def sum_subs(self, x, ws):
        acc = qv.SubRep.zero(x)
        for w in ws:
            acc = acc.sum(w)
        return acc

    def composition_tags(self, x) -> dict:
        return {("vertex", v): d for v, d in qv.composition_factors(x).items()}

    def part_test(self, x, w) -> bool:
        q, _ = self.quotient(x, w)
        return self.hom_is_zero(self.sub_as_object(w), q)

    def sub_stable(self, x, w, endos) -> bool:
        for f in endos:
            if not w.contains(self.push_sub(f, w)):
                return False
        return True

    def describe(self, x) -> str:
        return f"rep dims={list(x.dims)} over F_{self.p}"


# ---------------------------------------------------------------------------
# generic torsion machinery
# ---------------------------------------------------------------------------


def endo_stable_subobjects(handle, x, subs=None):
    """Subobjects stable under every endomorphism (a necessary torsion-part test)."""
    subs = handle.subobjects(x) if subs is None else subs
    endos = handle.endo_basis(x)
    return [w for w in subs if handle.sub_stable(x, w, endos)]


def torsion_parts(handle, x, prune: bool = True) -> TorsionPartSet:
    """All subobjects w with Hom(w, x/w) = 0, in canonical order."""
    subs = handle.subobjects(x)
    if prune:
        subs = endo_stable_subobjects(handle, x, subs)
    parts = [w for w in subs if handle.part_test(x, w)]
    return TorsionPartSet(x, parts, prune)


def is_torsion_simple(handle, x, method: str = "auto", prune: bool = True) -> SimplicityReport:
    if handle.is_zero_object(x):
        raise InputError("torsion-simplicity is defined for non-zero objects")
    if method == "auto":
        method = "brute-force" if handle.enumerable(x) else "ass-criterion"
    if method == "brute-force":
        parts = torsion_parts(handle, x, prune=prune)
        verdict = len(parts) == 2
        witness = None
        if not verdict:
            for w in parts.parts:
                if not w.is_zero() and not w.is_full():
                    witness = w
                    break
        return SimplicityReport(verdict, "brute-force", witness)
    if method == "ass-criterion":
        ass = handle.associated_primes(x)
        if len(ass) == 1:
            return SimplicityReport(True, "ass-criterion", None)
        # witness: the p-primary torsion part for a maximal associated prime
        p = min(ass.primes)
        witness = ab.primary_component_of_torsion(x, p)
        q, _ = handle.quotient(x, witness)
        if not handle.hom_is_zero(handle.sub_as_object(witness), q):
            raise ContradictionError(
                "primary torsion part failed its hom-vanishing recheck")
        return SimplicityReport(False, "ass-criterion", witness)
    if method == "single-vertex-criterion":
        verdict = qv.single_vertex_support(x)
        witness = None
        if not verdict:
            parts = torsion_parts(handle, x, prune=prune)
            for w in parts.parts:
                if not w.is_zero() and not w.is_full():
                    witness = w
                    break
        return SimplicityReport(verdict, "single-vertex-criterion", witness)
    raise InputError(f"unknown simplicity method {method!r}")


def trace(handle, sources, x):
    """Smallest subobject of x containing the image of every morphism from sources."""
    images = [handle.zero_sub(x)]
    for s in sources:
        for f in handle.hom_basis(s, x):
            images.append(handle.image(f))
    return handle.sum_subs(x, images)


def torsion_radical_generated(handle, sources, x, check: bool = True):
    """t(x) for the torsion pair generated by `sources`, by stabilising iterated trace."""
    t = handle.zero_sub(x)
    while True:
        q, proj = handle.quotient(x, t)
        tr = trace(handle, sources, q)
        if tr.is_zero():
            break
        t_new = handle.pull_sub(proj, tr)
        if t_new.key() == t.key():
            break
        t = t_new
    if check:
        q, _ = handle.quotient(x, t)
        if not handle.hom_is_zero(handle.sub_as_object(t), q):
            raise ContradictionError("radical postcondition Hom(t(x), x/t(x)) = 0 failed")
        if not trace(handle, sources, q).is_zero():
            raise ContradictionError("radical postcondition t(x/t(x)) = 0 failed")
    return t


def reject(handle, sources, x):
    """Intersection of kernels of all morphisms from x to the sources."""
    r = handle.full_sub(x)
    for s in sources:
        for f in handle.hom_basis(x, s):
            r = r.intersect(handle.kernel(f))
    return r


def torsionfree_coradical_cogenerated(handle, sources, x, check: bool = True):
    """(t(x), x/t(x)) for the torsion pair cogenerated by `sources`.

    The torsion radical is the stabilised iterated reject; the returned object
    is the torsion-free coradical x/t(x).
    """
    cur = handle.full_sub(x)
    while True:
        obj = handle.sub_as_object(cur)
        r = reject(handle, sources, obj)
        if r.is_full():
            break
        cur = handle.compose_sub(x, cur, r)
    if check:
        tobj = handle.sub_as_object(cur)
        for s in sources:
            if not handle.hom_is_zero(tobj, s):
                raise ContradictionError(
                    "coradical postcondition Hom(t(x), source) = 0 failed")
    coradical, _ = handle.quotient(x, cur)
    return cur, coradical


def is_essential(handle, w, x) -> bool:
    """True iff w meets every non-zero subobject of x non-trivially."""
    for u in handle.subobjects(x):
        if u.is_zero():
            continue
        if w.intersect(u).is_zero():
            return False
    return True


def injective_criterion_check(handle, x, f: Morph) -> InjectiveCriterionReport:
    """Check the no-intermediate-torsion-part statement for an endomorphism.

    Hypotheses: ker f essential in x, ker f contained in im f.  When they hold,
    every torsion part T with ker f <= T <= im f must be x itself; a violation
    raises ContradictionError.
    """
    if f.src != x or f.dst != x:
        raise InputError("the criterion needs an endomorphism of x")
    ker = handle.kernel(f)
    im = handle.image(f)
    h1 = is_essential(handle, ker, x)
    h2 = im.contains(ker)
    report = InjectiveCriterionReport(h1, h2, h1 and h2)
    if not report.hypotheses_hold:
        return report
    parts = torsion_parts(handle, x)
    for t in parts.parts:
        report.checked_parts += 1
        if t.is_full():
            continue
        if t.contains(ker) and im.contains(t):
            raise ContradictionError(
                "found a proper torsion part between ker f and im f, "
                "contradicting the injective criterion")
    return report


def unique_simple_factor(handle, x):
    """(verdict, tag): whether all composition factors of x agree, and which."""
    if handle.is_zero_object(x):
        raise InputError("the zero object has no composition factors")
    tags = handle.composition_tags(x)
    if len(tags) == 1:
        return True, next(iter(tags))
    return False, None


def type_of(handle, x) -> tuple:
    """Canonical type tag of a torsion-simple object (prime or vertex)."""
    report = is_torsion_simple(handle, x)
    if not report.verdict:
        raise InputError(
            f"object is not torsion-simple; witness part {report.witness!r}")
    if isinstance(handle, AbelianHandle):
        ass = handle.associated_primes(x)
        return ("prime", 0 if ass.includes_zero else ass.primes[0])
    return ("vertex", x.support()[0])


def verify_torsion_pair_axioms(handle, sources, sample) -> list[AxiomCheckResult]:
    """For each sample object: orthogonality, largest-subobject maximality, idempotence."""
    results = []
    for x in sample:
        t = torsion_radical_generated(handle, sources, x, check=False)
        q, _ = handle.quotient(x, t)
        orthogonal = handle.hom_is_zero(handle.sub_as_object(t), q)
        idempotent = trace(handle, sources, q).is_zero()
        maximal = True
        for w in handle.subobjects(x):
            wobj = handle.sub_as_object(w)
            tw = torsion_radical_generated(handle, sources, wobj, check=False)
            if tw.is_full() and not t.contains(w):
                maximal = False
                break
        results.append(AxiomCheckResult(handle.describe(x), orthogonal, maximal, idempotent))
    return results
