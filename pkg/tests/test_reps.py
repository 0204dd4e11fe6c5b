"""Representation building blocks: monomial bases, symmetric powers,
polynomial action, duals, scalar extension, central characters."""

from math import comb

import pytest

import symmpow as sp
from symmpow.linalg import identity, mat_mul, mat_vec, scalar_mat
from symmpow.reps import hom_defect_count


def test_monomial_basis_order():
    b = sp.monomial_basis(2, 2)
    assert b.exponents == ((2, 0), (1, 1), (0, 2))
    b32 = sp.monomial_basis(3, 2)
    assert b32.exponents == ((2, 0, 0), (1, 1, 0), (1, 0, 1),
                             (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert len(b32.exponents) == comb(3 + 2 - 1, 2)
    for i, e in enumerate(b32.exponents):
        assert b32.index[e] == i
    assert sp.monomial_basis(3, 0).exponents == ((0, 0, 0),)
    # decreasing lexicographic throughout
    for n, m in ((2, 5), (3, 3), (4, 2)):
        exps = sp.monomial_basis(n, m).exponents
        assert list(exps) == sorted(exps, reverse=True)
        assert len(set(exps)) == len(exps)


def test_sym_power_small_cases(s3):
    group, v, _ = s3
    assert sp.sym_power(v, 1).images == v.images
    s0 = sp.sym_power(v, 0)
    assert s0.dim == 1
    assert all(im.rows == [[1]] for im in s0.images)
    s2 = sp.sym_power(v, 2)
    assert s2.dim == 3
    assert hom_defect_count(s2) == 0
    # swap generator: x -> y, y -> x sends x^2 -> y^2, xy -> xy
    swap = s2.images[group.index[group.generators[0].key()]]
    assert swap.rows == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_sym_square_golden_sl2_3(sl23):
    group, v, mods = sl23
    s2 = sp.sym_power(v, 2)
    a = s2.images[group.generator_indices[0]]
    b = s2.images[group.generator_indices[1]]
    assert a.rows == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]
    assert b.rows == [[1, 0, 0], [2, 1, 0], [1, 1, 1]]
    # and the module listed in the suite is exactly this symmetric square
    assert mods["sym2"].images == s2.images


def test_sym_power_is_homomorphism_spot(q8):
    group, v, _ = q8
    s3_ = sp.sym_power(v, 3)
    for a in range(group.order):
        for b in (0, 3, 5):
            ab = group.prod(a, b)
            assert mat_mul(s3_.images[a], s3_.images[b]) == s3_.images[ab]


def test_apply_to_poly_moves_linear_forms(s3):
    group, v, _ = s3
    F = group.field
    for g in range(group.order):
        for w in ([1, 0], [0, 1], [2, 5], [3, 3]):
            lin = sp.poly_from_vector(F, w)
            moved = sp.apply_to_poly(g, lin, v)
            gw = mat_vec(v.images[g], w)
            assert moved == sp.poly_from_vector(F, gw)


def test_apply_to_poly_matches_sym_power_matrices(s3):
    group, v, _ = s3
    F = group.field
    lin = sp.poly_from_vector(F, [1, 2])
    cube = sp.poly_pow(lin, 3)
    s3m = sp.sym_power(v, 3)
    for g in range(group.order):
        via_poly = sp.apply_to_poly(g, cube, v)
        via_matrix = mat_vec(s3m.images[g], cube.coeffs)
        assert list(via_poly.coeffs) == list(via_matrix)


def test_poly_arithmetic_by_hand():
    F = sp.make_field(7)
    x = sp.poly_from_vector(F, [1, 0])
    y = sp.poly_from_vector(F, [0, 1])
    xy = sp.poly_mul(x, y)
    # basis at degree 2 is x^2, xy, y^2
    assert list(xy.coeffs) == [0, 1, 0]
    sq = sp.poly_mul(sp.poly_from_vector(F, [1, 1]), sp.poly_from_vector(F, [1, 6]))
    # (x + y)(x - y) = x^2 - y^2
    assert list(sq.coeffs) == [1, 0, 6]
    one = sp.poly_one(F, 2)
    assert sp.poly_mul(one, xy) == xy
    assert sp.poly_pow(x, 4).coeffs[0] == 1
    assert sum(sp.poly_pow(x, 4).coeffs) == 1


def test_dual_rep(q8):
    group, v, _ = q8
    d = sp.dual_rep(v)
    assert hom_defect_count(d) == 0
    for g in range(group.order):
        prod = mat_mul(sp.linalg.transpose(d.images[g]), v.images[g])
        assert prod == identity(group.field, 2)
    dd = sp.dual_rep(d)
    assert dd.images == v.images


def test_extend_scalars(s3):
    group, v, _ = s3
    ext = sp.extend_scalars(v, 2)
    assert ext.field.q == 49
    assert ext.dim == 2
    assert hom_defect_count(ext) == 0
    # base entries embed; the embedding fixes 0 and 1
    assert ext.embed[0] == 0 and ext.embed[1] == 1
    for a in range(7):
        for b in range(7):
            assert ext.embed[group.field.mul(a, b)] == \
                ext.field.mul(ext.embed[a], ext.embed[b])
    assert sp.extend_scalars(v, 1) is v


def test_restrict_scalar_character(q8):
    group, _, mods = q8
    flag, t = sp.restrict_scalar_character(mods["chi_i"])
    assert flag and t == 0  # -1 squares away in a linear character
    flag, t = sp.restrict_scalar_character(mods["defining"])
    assert flag and t == 1  # -1 acts as the scalar itself
    flag, t = sp.restrict_scalar_character(mods["trivial"])
    assert flag and t == 0


def test_restrict_scalar_character_central(c6):
    group, v, mods = c6
    for t in range(6):
        flag, got = sp.restrict_scalar_character(mods[f"chi{t}"])
        assert flag
        # lam = 3 and chi_t sends the generator 3 to 3^t
        assert pow(3, got, 7) == pow(3, t, 7)


def test_induced_from_center(q8):
    group, _, _ = q8
    ind = sp.induced_from_center(group, 1)
    assert ind.dim == group.coset_count == 4
    assert hom_defect_count(ind) == 0
    # the center acts by its character on the induced module
    z = group.z_generator_index
    assert ind.images[z] == scalar_mat(group.field, 4, group.lam)
    # monomial shape: one nonzero entry per column
    for im in ind.images:
        for j in range(4):
            col = [im.rows[i][j] for i in range(4)]
            assert sum(1 for c in col if c) == 1


def test_paired_rep_rejects_non_homomorphism(s3):
    group, _, _ = s3
    F = group.field
    with pytest.raises(sp.NotARepresentation):
        sp.paired_rep(group, [sp.Mat(F, [[2]]), sp.Mat(F, [[3]])])
    with pytest.raises(ValueError):
        sp.paired_rep(group, [sp.Mat(F, [[1]])])  # wrong count
