"""Named verification suites reproducing the classification and pipeline
statements at desk scale.  Every suite is exact: a single failing instance
fails the suite, and failures carry a printable description of the instance.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product as iproduct

from . import abelian as ab
from . import engine as eng
from . import mccoy as mc
from . import quiver as qv
from .errors import InputError
from .primes import prime_divisors
from .rings import Ideal, Ring


@dataclass
class SuiteResult:
    name: str
    statement: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, description: str) -> None:
        self.instances += 1
        if not ok:
            self.failures.append(description)

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "statement": self.statement,
            "instances": self.instances,
            "failures": self.failures,
            "passed": self.passed,
        }


def _pmap(fn, items, threads: int):
    if threads <= 1:
        return [fn(item) for item in items]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _all_a2_reps(max_dim: int, p: int = 2):
    quiver = qv.a_n_quiver(2)
    reps = []
    for d1 in range(max_dim + 1):
        for d2 in range(max_dim + 1):
            flats = iproduct(range(p), repeat=d1 * d2)
            for flat in flats:
                mat = [[flat[i * d1 + j] for j in range(d1)] for i in range(d2)]
                reps.append(qv.QuiverRep(quiver, p, (d1, d2), [mat]))
    return quiver, reps


def finite_length_suite(options) -> SuiteResult:
    """Torsion-simple iff concentrated in a single vertex, brute force vs criterion."""
    res = SuiteResult(
        "finite-length",
        "a finite-length representation is torsion-simple iff it has a unique "
        "simple factor (single-vertex support)")
    max_dim = options.get("max_dim", 3)
    quiver, reps = _all_a2_reps(max_dim)
    handle = eng.QuiverHandle(quiver, 2)

    def check_one(rep):
        if rep.is_zero():
            return None
        brute = eng.is_torsion_simple(handle, rep, method="brute-force",
                                      prune=False).verdict
        predicate = qv.single_vertex_support(rep)
        return (brute == predicate,
                f"dims={rep.dims} maps={rep.maps}: brute={brute} predicate={predicate}")

    for result in _pmap(check_one, reps, options.get("threads", 1)):
        if result is not None:
            res.check(*result)
    return res


def ass_singleton_suite(options) -> SuiteResult:
    """|torsion parts| = 2 iff the associated primes are a singleton iff p-group."""
    res = SuiteResult(
        "ass-singleton",
        "a finite module is torsion-simple iff its associated primes are a "
        "singleton iff it is a p-group")
    max_order = options.get("max_order", 200)
    ring = Ring.integers()
    handle = eng.AbelianHandle(ring)

    def check_order(n):
        out = []
        for m in ab.finite_abelian_modules(n, ring):
            parts = eng.torsion_parts(handle, m)
            simple = len(parts) == 2
            ass = ab.associated_primes(m)
            singleton = len(ass) == 1
            p_group = n > 1 and len(prime_divisors(n)) == 1
            out.append((simple == singleton == p_group,
                        f"{m.describe()}: parts={len(parts)} ass={ass.as_list()}"))
        return out

    for chunk in _pmap(check_order, range(1, max_order + 1), options.get("threads", 1)):
        for item in chunk:
            res.check(*item)
    return res


def gabriel_split_suite(options) -> SuiteResult:
    """Iterated-trace radical of {Z/p : p in V} = direct sum of p-primary parts."""
    res = SuiteResult(
        "gabriel-split",
        "the radical of the torsion pair generated by {Z/p : p in V} is the "
        "sum of the p-primary components, and the torsion-pair axioms hold")
    max_order = min(options.get("max_order", 200), 100)
    ring = Ring.integers()
    handle = eng.AbelianHandle(ring)
    subsets = [v for r in range(4) for v in combinations((2, 3, 5), r)]

    def check_order(n):
        out = []
        for m in ab.finite_abelian_modules(n, ring):
            for v in subsets:
                sources = [ab.cyclic_module(ring, p) for p in v]
                rad = eng.torsion_radical_generated(handle, sources, m)
                expected = ab.Subobject.zero(m)
                for p in v:
                    expected = expected.sum(ab.primary_component(m, p))
                ok = rad.key() == expected.key()
                desc = f"{m.describe()} V={list(v)}"
                out.append((ok, f"{desc}: radical != primary sum"))
                axioms = eng.verify_torsion_pair_axioms(handle, sources, [m])
                out.append((all(a.passed for a in axioms), f"{desc}: axioms failed"))
        return out

    for chunk in _pmap(check_order, range(1, max_order + 1), options.get("threads", 1)):
        for item in chunk:
            res.check(*item)
    return res


def mccoy_suite(options) -> SuiteResult:
    """Theorem-mode vs exhaustive nullvector verdicts on seeded random matrices."""
    res = SuiteResult(
        "mccoy",
        "a matrix over Z/n has a non-zero nullvector iff its McCoy rank is "
        "below the column count")
    rng = random.Random(options.get("seed", 0))
    count = options.get("mccoy_instances", 500)
    for n in (4, 6, 8, 9, 12):
        ring = Ring.integers_mod(n)
        for _ in range(count):
            rows = rng.randint(1, 3)
            cols = rng.randint(1, 3)
            mat = mc.RingMatrix.from_rows(
                ring, [[ring.from_int(rng.randrange(n)) for _ in range(cols)]
                       for _ in range(rows)])
            theorem = mc.has_nullvector_theorem(mat)
            exhaustive = mc.nullvector_exhaustive(mat) is not None
            res.check(theorem == exhaustive,
                      f"Z/{n} matrix {mat.describe_rows()}: theorem={theorem} "
                      f"exhaustive={exhaustive}")
    return res


def morphisms_suite(options) -> SuiteResult:
    """Hom_S(I, S/I) != 0 for proper non-zero ideals of the supported domains."""
    res = SuiteResult(
        "morphisms",
        "Hom_S(I, S/I) is non-zero for every proper non-zero ideal of a "
        "noetherian domain")
    z = Ring.integers()
    for m in range(2, 51):
        rep = mc.hom_I_to_quotient(z, Ideal(z, [z.from_int(m)]))
        res.check(rep.hom_nonzero, f"Z, I=({m})")
    f2x = Ring.poly_ring(2)
    for deg in range(1, 5):
        for tail in iproduct(range(2), repeat=deg):
            coeffs = list(tail) + [1]
            rep = mc.hom_I_to_quotient(f2x, Ideal(f2x, [f2x.poly(coeffs)]))
            res.check(rep.hom_nonzero, f"F2[x], I=({coeffs})")
    f2xy = Ring.bivariate_quotient(2, [])
    rep = mc.hom_I_to_quotient(f2xy, Ideal(f2xy, [f2xy.gen_x, f2xy.gen_y]))
    res.check(rep.hom_nonzero and rep.kernel.free_rank == 2,
              "F2[x,y], I=(x,y): expected hom of dimension 2")
    return res


def injective_criterion_suite(options) -> SuiteResult:
    """Multiplication by p on Z/p^k satisfies the no-intermediate-part statement."""
    res = SuiteResult(
        "injective-criterion",
        "multiplication by p on Z/p^k has essential kernel inside its image and "
        "admits no intermediate proper torsion part")
    ring = Ring.integers()
    handle = eng.AbelianHandle(ring)
    for p in (2, 3):
        for k in range(2, 6):
            m = ab.cyclic_module(ring, p ** k)
            f = handle.multiplication_morph(m, p)
            report = eng.injective_criterion_check(handle, m, f)
            res.check(report.hypotheses_hold, f"Z/{p}^{k}: hypotheses failed")
            parts = eng.torsion_parts(handle, m)
            res.check(len(parts) == 2, f"Z/{p}^{k}: expected trivial torsion parts")
    return res


def pruning_suite(options) -> SuiteResult:
    """Endomorphism-stability pruning never drops a torsion part."""
    res = SuiteResult(
        "pruning",
        "torsion parts computed with endomorphism-stability pruning equal the "
        "unpruned computation")
    max_order = min(options.get("max_order", 200), 128)
    ring = Ring.integers()
    handle = eng.AbelianHandle(ring)

    def check_order(n):
        out = []
        for m in ab.finite_abelian_modules(n, ring):
            pruned = eng.torsion_parts(handle, m, prune=True).keys()
            unpruned = eng.torsion_parts(handle, m, prune=False).keys()
            out.append((pruned == unpruned, f"{m.describe()}: pruning changed the parts"))
        return out

    for chunk in _pmap(check_order, range(1, max_order + 1), options.get("threads", 1)):
        for item in chunk:
            res.check(*item)
    quiver, reps = _all_a2_reps(2)
    qhandle = eng.QuiverHandle(quiver, 2)
    for rep in reps:
        pruned = eng.torsion_parts(qhandle, rep, prune=True).keys()
        unpruned = eng.torsion_parts(qhandle, rep, prune=False).keys()
        res.check(pruned == unpruned, f"rep dims={rep.dims} maps={rep.maps}")
    return res


def type_closure_suite(options) -> SuiteResult:
    """Images and in-universe extensions of same-type torsion-simple objects."""
    res = SuiteResult(
        "type-closure",
        "images of morphisms between same-type torsion-simple objects are zero "
        "or torsion-simple of that type; extensions stay torsion-simple of that type")
    ring = Ring.integers()
    handle = eng.AbelianHandle(ring)
    for p in (2, 3):
        universe = []
        power = p
        while power <= 16:
            universe.extend(ab.finite_abelian_modules(power, ring))
            power *= p
        for x in universe:
            for y in universe:
                for f in handle.hom_basis(x, y):
                    img = handle.image(f)
                    if img.is_zero():
                        res.check(True, "")
                        continue
                    rep = eng.is_torsion_simple(handle, img.as_module())
                    tag = eng.type_of(handle, img.as_module()) if rep.verdict else None
                    res.check(rep.verdict and tag == ("prime", p),
                              f"image of {x.describe()} -> {y.describe()} not "
                              f"torsion-simple of type {p}")
        for x in universe:
            for y in universe:
                total = x.order() * y.order()
                if total > 16:
                    continue
                for z in ab.finite_abelian_modules(total, ring):
                    is_ext = any(
                        w.as_module() == x and ab.quotient(z, w) == y
                        for w in handle.subobjects(z))
                    if not is_ext:
                        continue
                    repz = eng.is_torsion_simple(handle, z)
                    tag = eng.type_of(handle, z) if repz.verdict else None
                    res.check(repz.verdict and tag == ("prime", p),
                              f"extension {z.describe()} of {y.describe()} by "
                              f"{x.describe()} not torsion-simple of type {p}")
    quiver, reps = _all_a2_reps(2)
    qhandle = eng.QuiverHandle(quiver, 2)
    for v in (0, 1):
        universe = [r for r in reps if not r.is_zero() and r.support() == [v]]
        for x in universe:
            for y in universe:
                for f in qhandle.hom_basis(x, y):
                    img = qhandle.image(f)
                    if img.is_zero():
                        res.check(True, "")
                        continue
                    rep = eng.is_torsion_simple(qhandle, img.as_rep())
                    tag = eng.type_of(qhandle, img.as_rep()) if rep.verdict else None
                    res.check(rep.verdict and tag == ("vertex", v),
                              f"image between vertex-{v} reps not simple of that type")
        for x in universe:
            for y in universe:
                dims = tuple(a + b for a, b in zip(x.dims, y.dims))
                if max(dims) > 2:
                    continue
                for z in reps:
                    if z.dims != dims:
                        continue
                    found = any(
                        qv.is_isomorphic(w.as_rep(), x)
                        and qv.is_isomorphic(qv.quotient_rep(z, w)[0], y)
                        for w in qhandle.subobjects(z))
                    if not found:
                        continue
                    repz = eng.is_torsion_simple(qhandle, z)
                    tag = eng.type_of(qhandle, z) if repz.verdict else None
                    res.check(repz.verdict and tag == ("vertex", v),
                              f"extension dims={z.dims} not simple of vertex type {v}")
    return res


def _zmod_module_orders(n: int, max_order: int) -> list[tuple[int, ...]]:
    divisors = [d for d in range(2, n + 1) if n % d == 0]
    out: set[tuple[int, ...]] = {()}
    frontier = [((), 1)]
    while frontier:
        new_frontier = []
        for orders, size in frontier:
            last = orders[-1] if orders else 2
            for d in divisors:
                if d < last:
                    continue
                if size * d > max_order:
                    continue
                item = orders + (d,)
                if item not in out:
                    out.add(item)
                    new_frontier.append((item, size * d))
        frontier = new_frontier
    return sorted(out)


def localisation_invariance_suite(options) -> SuiteResult:
    """Torsion-part sets agree when a Z/n-module is viewed over Z and over Z/n."""
    res = SuiteResult(
        "localisation-invariance",
        "for a module annihilated by n, the subobject list and torsion parts "
        "computed over Z and over Z/n coincide")
    max_order = min(options.get("max_order", 200), 64)
    z_handle = eng.AbelianHandle(Ring.integers())

    def check_pair(task):
        n, orders = task
        ring_n = Ring.integers_mod(n)
        m_z = ab.direct_sum_module(Ring.integers(), list(orders))
        m_n = ab.direct_sum_module(ring_n, list(orders))
        n_handle = eng.AbelianHandle(ring_n)
        subs_z = [s.key() for s in z_handle.subobjects(m_z)]
        subs_n = [s.key() for s in n_handle.subobjects(m_n)]
        if subs_z != subs_n:
            return (False, f"Z/{n} module {orders}: subobject lists differ")
        parts_z = eng.torsion_parts(z_handle, m_z).keys()
        parts_n = eng.torsion_parts(n_handle, m_n).keys()
        return (parts_z == parts_n, f"Z/{n} module {orders}: torsion parts differ")

    tasks = []
    for n in (4, 6, 8, 9, 12):
        for orders in _zmod_module_orders(n, max_order):
            tasks.append((n, orders))
    for item in _pmap(check_pair, tasks, options.get("threads", 1)):
        res.check(*item)
    return res


SUITES = {
    "finite-length": finite_length_suite,
    "ass-singleton": ass_singleton_suite,
    "gabriel-split": gabriel_split_suite,
    "mccoy": mccoy_suite,
    "morphisms": morphisms_suite,
    "injective-criterion": injective_criterion_suite,
    "pruning": pruning_suite,
    "type-closure": type_closure_suite,
    "localisation-invariance": localisation_invariance_suite,
}


def run_suite(name: str, options) -> SuiteResult:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; available: {sorted(SUITES)}")
    return SUITES[name](options)
