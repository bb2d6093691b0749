"""Quiver representations: hom spaces, subrepresentation lattices, quotients."""
import itertools

import pytest

from torsion_lab.errors import InputError
from torsion_lab.quiver import (Quiver, QuiverRep, SubRep, a_n_quiver,
                                composition_factors, direct_sum,
                                enumerate_subreps, hom_dim, hom_space,
                                is_isomorphic, quotient_rep, rep_length,
                                simple_rep, single_vertex_support, zero_rep)

A2 = a_n_quiver(2)
S1 = simple_rep(A2, 2, 0)
S2 = simple_rep(A2, 2, 1)
P1 = QuiverRep(A2, 2, [1, 1], [[[1]]])


def test_acyclicity_enforced():
    with pytest.raises(InputError):
        Quiver(2, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Quiver(1, [(0, 0)])


def test_hom_examples():
    assert hom_dim(S1, P1) == 0
    assert hom_dim(P1, S1) == 1
    assert hom_dim(P1, P1) >= 1
    assert hom_dim(S2, P1) == 1


def _all_a2_reps(max_d1, max_d2, p=2):
    for d1 in range(max_d1 + 1):
        for d2 in range(max_d2 + 1):
            for flat in itertools.product(range(p), repeat=d1 * d2):
                mat = [[flat[i * d1 + j] for j in range(d1)] for i in range(d2)]
                yield QuiverRep(A2, p, (d1, d2), [mat])


def _brute_hom_count(x, y):
    """Exhaustive enumeration of commuting matrix tuples over F_2."""
    p = 2
    count = 0
    for aflat in itertools.product(range(p), repeat=x.dims[0] * y.dims[0]):
        f1 = [[aflat[i * x.dims[0] + j] for j in range(x.dims[0])]
              for i in range(y.dims[0])]
        for bflat in itertools.product(range(p), repeat=x.dims[1] * y.dims[1]):
            f2 = [[bflat[i * x.dims[1] + j] for j in range(x.dims[1])]
                  for i in range(y.dims[1])]
            xa, ya = x.maps[0], y.maps[0]
            ok = True
            for i in range(y.dims[1]):
                for j in range(x.dims[0]):
                    lhs = sum(f2[i][m] * xa[m][j] for m in range(x.dims[1])) % p
                    rhs = sum(ya[i][m] * f1[m][j] for m in range(y.dims[0])) % p
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
    return count


def test_hom_dimension_matches_brute_force():
    # exhaustive over all commuting matrix tuples, for every pair of reps of
    # total dimension <= 4 over F_2
    reps = [r for r in _all_a2_reps(4, 4) if r.total_dim() <= 4]
    assert len(reps) == 51
    for x in reps:
        for y in reps:
            assert 2 ** hom_dim(x, y) == _brute_hom_count(x, y), (x.dims, y.dims)


def test_subrep_counts():
    assert len(enumerate_subreps(P1)) == 3
    assert len(enumerate_subreps(S1)) == 2
    zero_arrow = QuiverRep(A2, 2, [1, 1], [[[0]]])
    assert len(enumerate_subreps(zero_arrow)) == 4
    assert len(enumerate_subreps(zero_rep(A2, 2))) == 1


def test_p1_subreps_are_the_expected_three():
    subs = enumerate_subreps(P1)
    assert [s.dims() for s in subs] == [(0, 0), (0, 1), (1, 1)]


def test_subrep_lattice_closure_and_stability():
    for x in [P1, QuiverRep(A2, 2, [2, 2], [[[1, 0], [0, 1]]]),
              QuiverRep(A2, 3, [1, 2], [[[1], [2]]])]:
        subs = enumerate_subreps(x)
        keys = {s.key() for s in subs}
        for s in subs:
            assert s.is_stable()
            for t in subs:
                assert s.sum(t).key() in keys
                assert s.intersect(t).key() in keys


def test_length_additivity():
    for x in [P1, QuiverRep(A2, 2, [2, 1], [[[1, 0]]]),
              QuiverRep(A2, 2, [2, 2], [[[1, 1], [0, 1]]])]:
        for s in enumerate_subreps(x):
            q, _ = quotient_rep(x, s)
            assert rep_length(x) == s.total_dim() + rep_length(q)


def test_enumeration_preconditions():
    with pytest.raises(InputError):
        enumerate_subreps(QuiverRep(A2, 7, [1, 0], [[]]))
    big = QuiverRep(A2, 2, [5, 0], [[]])
    with pytest.raises(InputError) as err:
        enumerate_subreps(big)
    assert "4" in str(err.value)   # the bound appears in the message


def test_quotient_examples():
    line = [s for s in enumerate_subreps(P1) if s.dims() == (0, 1)][0]
    q, _ = quotient_rep(P1, line)
    assert q.dims == (1, 0)
    zero = SubRep.zero(P1)
    q0, _ = quotient_rep(P1, zero)
    assert q0.dims == P1.dims and q0.maps == P1.maps
    qfull, _ = quotient_rep(P1, SubRep.full(P1))
    assert qfull.is_zero()


def test_unstable_subspaces_rejected():
    with pytest.raises(InputError):
        SubRep(P1, [[[1]], []])   # vertex-1 line is not arrow-stable in P1
    with pytest.raises(InputError):
        quotient_rep(P1, SubRep(P1, [[[1]], []], check=False))


def test_composition_factors():
    assert composition_factors(P1) == {0: 1, 1: 1}
    assert composition_factors(direct_sum(S1, S1)) == {0: 2}
    assert composition_factors(zero_rep(A2, 2)) == {}
    assert single_vertex_support(S1)
    assert not single_vertex_support(P1)
    assert not single_vertex_support(zero_rep(A2, 2))


def test_single_vertex_support_iff_unique_factor():
    for rep in _all_a2_reps(2, 2):
        if rep.is_zero():
            continue
        factors = composition_factors(rep)
        assert single_vertex_support(rep) == (len(factors) == 1)


def test_isomorphism_search():
    assert is_isomorphic(P1, QuiverRep(A2, 2, [1, 1], [[[1]]]))
    assert not is_isomorphic(P1, QuiverRep(A2, 2, [1, 1], [[[0]]]))
    assert is_isomorphic(direct_sum(S1, S2), QuiverRep(A2, 2, [1, 1], [[[0]]]))
    a = QuiverRep(A2, 3, [2, 2], [[[1, 0], [0, 1]]])
    b = QuiverRep(A2, 3, [2, 2], [[[0, 1], [1, 0]]])
    assert is_isomorphic(a, b)


def test_a3_quiver_subreps():
    a3 = a_n_quiver(3)
    # the projective at vertex 0: k -> k -> k with identity maps
    p = QuiverRep(a3, 2, [1, 1, 1], [[[1]], [[1]]])
    subs = enumerate_subreps(p)
    assert [s.dims() for s in subs] == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]
