"""Intertwiner spaces and occurrence witnesses."""

import pytest

import symmpow as sp
from symmpow.linalg import mat_mul


def check_intertwines(x, u, v):
    """x columnspace-level check: v(g) @ x == x @ u(g) on generators."""
    for k in u.group.generator_indices:
        assert mat_mul(v.images[k], x) == mat_mul(x, u.images[k])


def test_endomorphisms_of_absolutely_irreducible(s3):
    _, _, mods = s3
    std = mods["standard"]
    h = sp.hom_space(std, std)
    assert h.dim == 1
    assert h.source_dim == h.target_dim == 2
    check_intertwines(h.basis[0], std, std)


def test_distinct_characters_have_no_homs(s3, c6):
    _, _, mods = s3
    assert sp.hom_space(mods["trivial"], mods["sign"]).dim == 0
    assert sp.hom_space(mods["sign"], mods["standard"]).dim == 0
    _, _, chars = c6
    for a in range(6):
        for b in range(6):
            expected = 1 if a == b else 0
            assert sp.hom_space(chars[f"chi{a}"], chars[f"chi{b}"]).dim \
                == expected


def test_permutation_module_contains_trivial(s3_perm, s3):
    group, perm = s3_perm
    triv = sp.paired_rep(group, [sp.Mat(group.field, [[1]])] * 2)
    found, witness = sp.occurs_as_submodule(triv, perm)
    assert found
    # the invariant line is spanned by the all-ones vector
    col = [witness.rows[i][0] for i in range(3)]
    ratios = {group.field.mul(c, group.field.inv(col[0])) for c in col}
    assert ratios == {1}
    check_intertwines(witness, triv, perm)
    found_q, qwit = sp.occurs_as_quotient(triv, perm)
    assert found_q
    check_intertwines(qwit, perm, triv)


def test_absent_module_yields_no_witness(s3):
    _, _, mods = s3
    found, witness = sp.occurs_as_submodule(mods["trivial"], mods["standard"])
    assert not found and witness is None
    found, witness = sp.occurs_as_quotient(mods["sign"], mods["standard"])
    assert not found and witness is None


def test_reducible_source_is_rejected(s3_perm):
    group, perm = s3_perm
    triv = sp.paired_rep(group, [sp.Mat(group.field, [[1]])] * 2)
    # hom space is nonzero but no injective map can exist
    with pytest.raises(ValueError):
        sp.occurs_as_submodule(perm, triv)


def test_extension_invariance_small(s3, q8):
    _, _, mods = s3
    d0, d1, same = sp.verify_extension_invariance(mods["standard"],
                                                  mods["standard"], 2)
    assert (d0, d1, same) == (1, 1, True)
    d0, d1, same = sp.verify_extension_invariance(mods["trivial"],
                                                  mods["sign"], 3)
    assert (d0, d1, same) == (0, 0, True)
    _, _, qmods = q8
    d0, d1, same = sp.verify_extension_invariance(qmods["defining"],
                                                  qmods["defining"], 2)
    assert (d0, d1, same) == (1, 1, True)


def test_extension_can_split_endomorphisms(c3_gf2):
    # not absolutely irreducible: the endomorphism algebra is a quadratic
    # field, so its dimension is 2 and stays 2 after any extension
    _, w = c3_gf2
    h = sp.hom_space(w, w)
    assert h.dim == 2
    d0, d1, same = sp.verify_extension_invariance(w, w, 2)
    assert (d0, d1, same) == (2, 2, True)


def test_mismatched_inputs_rejected(s3, q8):
    _, _, mods = s3
    _, _, qmods = q8
    with pytest.raises(ValueError):
        sp.hom_space(mods["trivial"], qmods["trivial"])
