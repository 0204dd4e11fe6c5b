"""Group enumeration, scalar center, and coset structure."""

from collections import Counter

import pytest

import symmpow as sp
from symmpow.linalg import identity, mat_mul


def naive_closure(gen_mats):
    """Reference closure: repeated multiplication over raw entry tuples."""
    def key(m):
        return tuple(tuple(r) for r in m.rows)

    seen = {key(g): g for g in gen_mats}
    frontier = list(gen_mats)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gen_mats:
                prod = mat_mul(a, g)
                k = key(prod)
                if k not in seen:
                    seen[k] = prod
                    nxt.append(prod)
        frontier = nxt
    return set(seen)


def test_s3_closure_matches_naive(s3):
    group, _, _ = s3
    gens = list(group.generators)
    expected = naive_closure(gens + [identity(group.field, group.dim)])
    got = {tuple(tuple(r) for r in m.rows) for m in group.elements}
    assert got == expected
    assert group.order == 6
    assert group.elements[0] == identity(group.field, 2)
    orders = Counter(group.element_order(i) for i in range(group.order))
    assert orders == {1: 1, 2: 3, 3: 2}


def test_q8_closure_and_center(q8):
    group, _, _ = q8
    gens = list(group.generators)
    expected = naive_closure(gens + [identity(group.field, group.dim)])
    assert len(expected) == 8
    assert group.order == 8
    assert group.center_order == 2
    assert group.coset_count == 4
    # the only nontrivial scalar is -1, encoded 4 in GF(5)
    assert group.lam == 4
    z_mats = [group.elements[i] for i in group.z_indices]
    assert {m.rows[0][0] for m in z_mats} == {1, 4}
    for m in z_mats:
        assert m.rows[0][1] == m.rows[1][0] == 0
        assert m.rows[0][0] == m.rows[1][1]


def test_fully_scalar_group(c6):
    group, _, _ = c6
    assert group.order == 6
    assert group.center_order == 6
    assert group.coset_count == 1
    assert group.lam == 3  # generator itself has maximal order
    assert group.element_order(group.z_generator_index) == 6


def test_trivial_scalar_center(c3_gf2):
    group, _ = c3_gf2
    assert group.order == 3
    assert group.center_order == 1
    assert group.coset_count == 3


def test_product_and_inverse_tables(sl23):
    group, _, _ = sl23
    assert group.order == 24 and group.center_order == 2
    assert group.coset_count == 12
    n = group.order
    for a in range(n):
        assert group.prod(a, group.inverse[a]) == 0
        assert group.prod(group.inverse[a], a) == 0
        for b in range(0, n, 5):
            lhs = mat_mul(group.elements[a], group.elements[b])
            assert group.elements[group.prod(a, b)] == lhs


def test_words_replay_to_elements(s3):
    group, _, _ = s3
    for i, word in enumerate(group.words):
        m = identity(group.field, group.dim)
        for k in word:
            m = mat_mul(m, group.generators[k])
        assert m == group.elements[i]
    assert group.words[0] == ()


def test_transversal_decomposition(q8):
    group, _, _ = q8
    assert group.transversal[0] == 0
    assert len(group.transversal) == group.coset_count
    z_set = set(group.z_indices)
    for g in range(group.order):
        c = group.coset_of[g]
        t = group.transversal[c]
        z = group.prod(group.inverse[t], g)
        assert z in z_set


def test_enumeration_cap():
    F = sp.make_field(7)
    gens = [sp.Mat(F, [[0, 1], [1, 0]]), sp.Mat(F, [[0, 6], [1, 6]])]
    with pytest.raises(sp.CapExceeded):
        sp.enumerate_group(gens, cap=3)


def test_non_invertible_generator_rejected():
    F = sp.make_field(7)
    with pytest.raises(ValueError):
        sp.build_group([sp.Mat(F, [[1, 1], [1, 1]])])
