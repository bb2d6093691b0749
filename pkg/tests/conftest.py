"""Shared independent oracles for the test suite.

Everything in here deliberately avoids the library's production code paths:
brute-force closures, exhaustive map enumeration, and test-local polynomial
arithmetic, so the cross-checks mean something.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


def brute_subgroups(deltas: list[int]) -> set[frozenset]:
    """All subgroups of Z/d_1 + ... + Z/d_k as frozensets of element tuples.

    BFS over one-generator extensions; extending a subgroup H by g only needs
    the union of the cosets H + j*g, which keeps the closure linear in the
    result size.
    """
    all_elems = list(itertools.product(*[range(d) for d in deltas]))
    zero = tuple(0 for _ in deltas)

    def add(a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, deltas))

    def extend(h: frozenset, g) -> frozenset:
        out = set(h)
        shift = g
        while shift not in out:
            out.update(add(x, shift) for x in h)
            shift = add(shift, g)
        return frozenset(out)

    trivial = frozenset([zero])
    subs = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for h in frontier:
            for g in all_elems:
                if g in h:
                    continue
                key = extend(h, g)
                if key not in subs:
                    subs.add(key)
                    new.append(key)
        frontier = new
    return subs


def brute_additive_maps(a: int, b: int) -> int:
    """Number of additive maps Z/a -> Z/b by checking full value tables."""
    tables = set()
    for c in range(b):
        table = tuple((k * c) % b for k in range(a))
        if all(table[(i + j) % a] == (table[i] + table[j]) % b
               for i in range(a) for j in range(a)):
            tables.add(table)
    return len(tables)


def brute_set_maps_additive(a: int, b: int) -> int:
    """Exhaustive search over all set maps Z/a -> Z/b (tiny cases only)."""
    count = 0
    for values in itertools.product(range(b), repeat=a):
        if values[0] != 0:
            continue
        if all(values[(i + j) % a] == (values[i] + values[j]) % b
               for i in range(a) for j in range(a)):
            count += 1
    return count


def rational_rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction Gaussian elimination (oracle for integer matrices)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, m):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(m):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


# -- tiny standalone polynomial arithmetic over F_p (oracle for F_p[x] ranks) --


def poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_add(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_matrix_rank(rows: list[list[list[int]]], p: int) -> int:
    """Rank of a matrix of F_p[x] polynomials over the fraction field,
    via the largest order with a non-vanishing minor (Laplace, test-local)."""
    m = len(rows)
    n = len(rows[0]) if m else 0

    def det(rs, cs):
        if len(rs) == 1:
            return rows[rs[0]][cs[0]]
        acc: list[int] = []
        sign = 1
        for pos, c in enumerate(cs):
            term = poly_mul(rows[rs[0]][c], det(rs[1:], cs[:pos] + cs[pos + 1:]), p)
            if sign < 0:
                term = [(-x) % p for x in term]
            acc = poly_add(acc, term, p)
            sign = -sign
        return acc

    best = 0
    for order in range(1, min(m, n) + 1):
        found = False
        for rs in itertools.combinations(range(m), order):
            for cs in itertools.combinations(range(n), order):
                if det(rs, cs):
                    found = True
                    break
            if found:
                break
        if found:
            best = order
    return best
