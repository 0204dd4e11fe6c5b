"""Randomized irreducibility testing and module splitting."""

import pytest

import symmpow as sp
from symmpow.linalg import Mat, mat_mul, mat_vec, rank, stack_rows


def in_span(basis_cols, vec, field):
    rows = [list(r) for r in basis_cols] + [list(vec)]
    return rank(Mat(field, rows)) == len(basis_cols)


def test_one_dimensional_fast_path(s3):
    _, _, mods = s3
    res = sp.is_irreducible(mods["sign"])
    assert res.irreducible and res.verdict == "irreducible"
    assert res.draws == 0


def test_standard_module_is_irreducible(s3):
    _, _, mods = s3
    res = sp.is_irreducible(mods["standard"], seed=0)
    assert res.irreducible
    assert res.draws == 1
    assert res.sub_rep is None and res.quot_rep is None
    # replayable evidence: the element drawn, how many kernel lines were
    # spun, and the dual vector that completed the argument
    assert set(res.certificate) >= {"theta", "kernel_dim", "lines_checked",
                                    "dual_vector"}


def test_permutation_module_splits(s3_perm):
    group, perm = s3_perm
    res = sp.is_irreducible(perm, seed=0)
    assert not res.irreducible and res.verdict == "split"
    sub_dim = res.sub_rep.dim
    assert sub_dim + res.quot_rep.dim == 3
    assert res.sub_rep.dim == 2  # seed 0 finds the sum-zero plane first
    # basis columns really span a stable subspace
    cols = [[res.basis.rows[i][j] for i in range(3)]
            for j in range(res.basis.ncols)]
    assert len(cols) == sub_dim
    for g in range(group.order):
        for c in cols:
            assert in_span(cols, mat_vec(perm.images[g], c), group.field)
    # the carved pieces are genuine representations
    from symmpow.reps import hom_defect_count
    assert hom_defect_count(res.sub_rep) == 0
    assert hom_defect_count(res.quot_rep) == 0


def test_indecomposable_but_reducible_splits():
    # order-2 group in characteristic 2: unique stable line, no complement
    F = sp.make_field(2)
    group = sp.build_group([sp.Mat(F, [[1, 1], [0, 1]])])
    rep = sp.defining_rep(group)
    res = sp.is_irreducible(rep, seed=0)
    assert res.verdict == "split"
    assert res.sub_rep.dim == 1 and res.quot_rep.dim == 1
    col = [res.basis.rows[0][0], res.basis.rows[1][0]]
    assert col == [1, 0]


def test_budget_exhaustion_raises():
    F = sp.make_field(7)
    group = sp.build_group([sp.Mat(F, [[0, 1], [1, 0]]),
                            sp.Mat(F, [[0, 6], [1, 6]])])
    rep = sp.defining_rep(group)
    with pytest.raises(sp.MeataxeInconclusive):
        sp.is_irreducible(rep, seed=0, budget=0)


def test_seed_changes_nothing_about_verdicts(s3, s3_perm, q8):
    _, _, mods = s3
    _, perm = s3_perm
    _, _, qmods = q8
    for seed in range(5):
        assert sp.is_irreducible(mods["standard"], seed=seed).irreducible
        assert not sp.is_irreducible(perm, seed=seed).irreducible
        assert sp.is_irreducible(qmods["defining"], seed=seed).irreducible


def test_deterministic_for_fixed_seed(s3_perm):
    _, perm = s3_perm
    a = sp.is_irreducible(perm, seed=3)
    b = sp.is_irreducible(perm, seed=3)
    assert a.verdict == b.verdict and a.draws == b.draws
    assert a.basis == b.basis


def test_simple_submodule_and_quotient(s3_perm):
    group, perm = s3_perm
    sub = sp.simple_submodule(perm, seed=0)
    assert sp.is_irreducible(sub, seed=0).irreducible
    found, _ = sp.occurs_as_submodule(sub, perm)
    assert found
    quot = sp.simple_quotient(perm, seed=0)
    assert sp.is_irreducible(quot, seed=0).irreducible
    found, _ = sp.occurs_as_quotient(quot, perm)
    assert found


def test_splitting_extension_absolute_case(s3, sl23):
    _, _, mods = s3
    e, piece = sp.splitting_extension(mods["standard"])
    assert e == 1
    assert piece.dim == 2 and piece.field.q == 7
    _, _, smods = sl23
    e, piece = sp.splitting_extension(smods["defining"])
    assert e == 1 and piece.field.q == 3


def test_splitting_extension_quadratic_case(c3_gf2):
    _, w = c3_gf2
    e, piece = sp.splitting_extension(w)
    assert e == 2
    assert piece.dim == 1
    assert piece.field.q == 4
    assert sp.hom_space(piece, piece).dim == 1


def test_spin_up_whole_space(q8):
    group, v, _ = q8
    basis = sp.spin_up([1, 0], v)
    assert basis.ncols == 2  # the defining module is irreducible
    with pytest.raises(ValueError):
        sp.spin_up([0, 0], v)
