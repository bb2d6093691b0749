"""Torsion parts, simplicity verdicts, radicals, coradicals, criterion checks."""
import pytest

from torsion_lab.abelian import (PresentedModule, Subobject, cyclic_module,
                                 direct_sum_module, finite_abelian_modules,
                                 hom_is_zero, primary_component, quotient)
from torsion_lab.engine import (AbelianHandle, QuiverHandle,
                                injective_criterion_check, is_essential,
                                is_torsion_simple, torsion_parts,
                                torsion_radical_generated,
                                torsionfree_coradical_cogenerated, trace,
                                type_of, unique_simple_factor,
                                verify_torsion_pair_axioms)
from torsion_lab.errors import InputError
from torsion_lab.quiver import QuiverRep, a_n_quiver, simple_rep
from torsion_lab.rings import Ring

Z = Ring.integers()
H = AbelianHandle(Z)
A2 = a_n_quiver(2)
QH = QuiverHandle(A2, 2)
P1 = QuiverRep(A2, 2, [1, 1], [[[1]]])


def test_torsion_parts_z6():
    parts = torsion_parts(H, cyclic_module(Z, 6))
    assert len(parts) == 4
    assert sorted(w.order() for w in parts.parts) == [1, 2, 3, 6]


def test_torsion_parts_z4():
    parts = torsion_parts(H, cyclic_module(Z, 4))
    assert len(parts) == 2
    assert parts.parts[0].is_zero() and parts.parts[1].is_full()


def test_torsion_parts_p1():
    parts = torsion_parts(QH, P1)
    assert [w.dims() for w in parts.parts] == [(0, 0), (0, 1), (1, 1)]


def test_trivial_parts_always_present():
    for mod in [cyclic_module(Z, 4), direct_sum_module(Z, [2, 2]),
                direct_sum_module(Z, [2, 3])]:
        keys = torsion_parts(H, mod).keys()
        assert Subobject.zero(mod).key() in keys
        assert Subobject.full(mod).key() in keys


def test_every_part_is_hom_orthogonal_and_stable():
    for orders in ([6], [2, 2], [12], [4, 2]):
        mod = direct_sum_module(Z, orders)
        parts = torsion_parts(H, mod)
        endos = H.endo_basis(mod)
        for w in parts.parts:
            assert hom_is_zero(w.as_module(), quotient(mod, w))
            assert H.sub_stable(mod, w, endos)


def test_is_torsion_simple_examples():
    assert is_torsion_simple(H, cyclic_module(Z, 8)).verdict
    rep = is_torsion_simple(QH, P1)
    assert not rep.verdict
    assert rep.witness.dims() == (0, 1)
    mixed = PresentedModule(Z, 2, [[0], [2]])   # Z + Z/2
    rep2 = is_torsion_simple(H, mixed)
    assert not rep2.verdict and rep2.method == "ass-criterion"
    assert rep2.witness.as_module().canonical_decomposition() == (0, [2])
    # witness is independently re-checkable
    assert hom_is_zero(rep2.witness.as_module(), quotient(mixed, rep2.witness))


def test_is_torsion_simple_zero_object_rejected():
    with pytest.raises(InputError):
        is_torsion_simple(H, PresentedModule(Z, 0, []))


def test_free_module_is_torsion_simple():
    assert is_torsion_simple(H, PresentedModule(Z, 1, [[]])).verdict
    assert is_torsion_simple(H, PresentedModule(Z, 2, [[], []])).verdict


def test_trace_examples():
    z2 = cyclic_module(Z, 2)
    z4 = cyclic_module(Z, 4)
    assert trace(H, [z2], z4).order() == 2
    assert trace(H, [z4], z4).is_full()
    assert trace(H, [z2], cyclic_module(Z, 3)).is_zero()


def test_radical_examples():
    z2 = cyclic_module(Z, 2)
    assert torsion_radical_generated(H, [z2], cyclic_module(Z, 4)).is_full()
    assert torsion_radical_generated(H, [z2], cyclic_module(Z, 3)).is_zero()


def test_radical_matches_primary_components():
    for n in (12, 30, 60, 72, 90, 100):
        for mod in finite_abelian_modules(n):
            for v in ((2,), (3,), (5,), (2, 3), (2, 5), (3, 5), (2, 3, 5)):
                sources = [cyclic_module(Z, p) for p in v]
                rad = torsion_radical_generated(H, sources, mod)
                expected = Subobject.zero(mod)
                for p in v:
                    expected = expected.sum(primary_component(mod, p))
                assert rad.key() == expected.key(), (n, v)


def test_coradical_examples():
    z2 = cyclic_module(Z, 2)
    z4 = cyclic_module(Z, 4)
    t, cor = torsionfree_coradical_cogenerated(H, [z2], z4)
    assert t.is_zero() and cor.canonical_decomposition() == (0, [4])
    t, cor = torsionfree_coradical_cogenerated(H, [z4], z4)
    assert t.is_zero()
    t, cor = torsionfree_coradical_cogenerated(H, [cyclic_module(Z, 3)], z4)
    assert t.is_full() and cor.is_zero()


def test_coradical_of_mixed_module():
    # S = {Z/2}: t = 2-divisible-free? iterated reject of Z/12 against Z/2
    z12 = cyclic_module(Z, 12)
    t, cor = torsionfree_coradical_cogenerated(H, [cyclic_module(Z, 2)], z12)
    # morphisms Z/12 -> Z/2 kill 2Z/12; reject stabilises at 4Z/12 = Z/3
    assert t.as_module().canonical_decomposition() == (0, [3])
    assert cor.canonical_decomposition() == (0, [4])


def test_essential_examples():
    z4 = cyclic_module(Z, 4)
    mid = [s for s in H.subobjects(z4) if s.order() == 2][0]
    assert is_essential(H, mid, z4)
    k4 = direct_sum_module(Z, [2, 2])
    line = [s for s in H.subobjects(k4) if s.order() == 2][0]
    assert not is_essential(H, line, k4)
    assert is_essential(H, Subobject.full(z4), z4)


def test_injective_criterion_examples():
    z8 = cyclic_module(Z, 8)
    rep = injective_criterion_check(H, z8, H.multiplication_morph(z8, 2))
    assert rep.hypotheses_hold and rep.checked_parts == 2
    rep_id = injective_criterion_check(H, z8, H.identity_morph(z8))
    assert not rep_id.kernel_essential
    z6 = cyclic_module(Z, 6)
    rep6 = injective_criterion_check(H, z6, H.multiplication_morph(z6, 2))
    assert not rep6.kernel_essential


def test_unique_simple_factor():
    ok, tag = unique_simple_factor(H, cyclic_module(Z, 8))
    assert ok and tag == ("prime", 2)
    ok, _ = unique_simple_factor(QH, P1)
    assert not ok
    ok, tag = unique_simple_factor(QH, QuiverRep(A2, 2, [2, 0], [[], []][:1]))
    assert ok and tag == ("vertex", 0)
    with pytest.raises(InputError):
        unique_simple_factor(H, PresentedModule(Z, 0, []))


def test_type_examples():
    assert type_of(H, cyclic_module(Z, 9)) == ("prime", 3)
    assert type_of(H, PresentedModule(Z, 1, [[]])) == ("prime", 0)
    assert type_of(QH, simple_rep(A2, 2, 1)) == ("vertex", 1)
    with pytest.raises(InputError):
        type_of(H, cyclic_module(Z, 6))


def test_axioms_small_sample():
    z2 = cyclic_module(Z, 2)
    sample = []
    for n in range(1, 17):
        sample.extend(finite_abelian_modules(n))
    results = verify_torsion_pair_axioms(H, [z2], sample)
    assert all(r.passed for r in results)


def test_axioms_empty_sources():
    sample = [cyclic_module(Z, 6), direct_sum_module(Z, [2, 2])]
    for x in sample:
        t = torsion_radical_generated(H, [], x)
        assert t.is_zero()
    results = verify_torsion_pair_axioms(H, [], sample)
    assert all(r.passed for r in results)


def test_axioms_quiver_sample():
    s2 = simple_rep(A2, 2, 1)
    sample = [P1, simple_rep(A2, 2, 0), s2,
              QuiverRep(A2, 2, [2, 2], [[[1, 0], [0, 1]]]),
              QuiverRep(A2, 2, [2, 2], [[[0, 0], [0, 0]]]),
              QuiverRep(A2, 2, [1, 2], [[[1], [0]]])]
    results = verify_torsion_pair_axioms(QH, [s2], sample)
    assert all(r.passed for r in results)


def test_pruning_agrees_small():
    for n in range(1, 33):
        for mod in finite_abelian_modules(n):
            assert (torsion_parts(H, mod, prune=True).keys()
                    == torsion_parts(H, mod, prune=False).keys())


def test_pruning_agrees_on_a2_and_a3_reps():
    import itertools
    for quiver in (A2, a_n_quiver(3)):
        handle = QuiverHandle(quiver, 2)
        arrow_shapes = [(s, t) for s, t in quiver.arrows]
        for dims in itertools.product(range(3), repeat=quiver.vertex_count):
            sizes = [dims[t] * dims[s] for s, t in arrow_shapes]
            for flat in itertools.product(range(2), repeat=sum(sizes)):
                mats = []
                pos = 0
                for (s, t), size in zip(arrow_shapes, sizes):
                    chunk = flat[pos:pos + size]
                    pos += size
                    mats.append([[chunk[i * dims[s] + j] for j in range(dims[s])]
                                 for i in range(dims[t])])
                rep = QuiverRep(quiver, 2, dims, mats)
                assert (torsion_parts(handle, rep, prune=True).keys()
                        == torsion_parts(handle, rep, prune=False).keys()), dims


def test_simplicity_matches_unique_factor_over_z():
    from torsion_lab.engine import unique_simple_factor as usf
    for n in range(2, 61):
        for mod in finite_abelian_modules(n):
            simple = is_torsion_simple(H, mod).verdict
            unique, _ = usf(H, mod)
            assert simple == unique, (n, mod.describe())


def test_sp_closed_subsets_drive_the_radical():
    # the radical for the subset V is the whole module exactly when the
    # associated primes of the module lie inside V
    from torsion_lab.abelian import SpClosedSubset, associated_primes
    for n in (4, 6, 12, 30, 36):
        for mod in finite_abelian_modules(n):
            for v in ((2,), (3,), (2, 3), (2, 3, 5), ()):
                subset = SpClosedSubset.from_primes(v)
                sources = [cyclic_module(Z, p) for p in v]
                rad = torsion_radical_generated(H, sources, mod)
                assert rad.is_full() == subset.contains_ass(associated_primes(mod))
    whole = SpClosedSubset.from_primes([], include_zero=True)
    assert whole.whole_spectrum and whole.contains_prime(0)
    assert whole.contains_ass(associated_primes(PresentedModule(Z, 1, [[]])))
    finite_only = SpClosedSubset.from_primes([2, 3])
    assert not finite_only.contains_ass(associated_primes(PresentedModule(Z, 1, [[]])))


def test_simplicity_methods_agree_on_quiver():
    import itertools
    for d1, d2 in itertools.product(range(3), repeat=2):
        for flat in itertools.product(range(2), repeat=d1 * d2):
            mat = [[flat[i * d1 + j] for j in range(d1)] for i in range(d2)]
            rep = QuiverRep(A2, 2, (d1, d2), [mat])
            if rep.is_zero():
                continue
            brute = is_torsion_simple(QH, rep, method="brute-force").verdict
            crit = is_torsion_simple(QH, rep, method="single-vertex-criterion").verdict
            assert brute == crit
