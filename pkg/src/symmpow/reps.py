"""Representations and the polynomial machinery for their symmetric powers.

Conventions that every downstream module relies on:

* A ``Rep`` stores one image matrix per group element, indexed by the
  group's element indices.  Images act on coordinate column vectors from
  the left.
* Degree-m monomials in n variables are ordered by decreasing
  lexicographic order on exponent vectors (for n = 2, m = 2 that is
  x1^2, x1 x2, x2^2).  A degree-m polynomial is the coefficient vector
  over that basis.
* A group element g acts on polynomials by substituting column i of its
  matrix for the variable x_i and re-expanding.  With this convention the
  degree-1 action reproduces the action on V itself.
* Symmetric powers are spaces of polynomials; divided powers are not used,
  so in characteristic p the action can be non-semisimple.  That is
  intentional.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import NotARepresentation
from .fields import FieldSpec, discrete_log, extend_field
from .groups import GroupData
from .linalg import Mat, identity, mat_vec, transpose


class MonomialBasis:
    """Exponent vectors of total degree m in n variables, decreasing lex."""

    __slots__ = ("n", "m", "exponents", "index")

    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        # instances are cached and shared, so the exponent list is frozen
        self.exponents = tuple(_exponent_vectors(n, m))
        self.index = {e: i for i, e in enumerate(self.exponents)}

    def __len__(self):
        return len(self.exponents)

    def __repr__(self):
        return f"MonomialBasis(n={self.n}, m={self.m})"


def _exponent_vectors(n: int, m: int):
    if n == 1:
        return [(m,)]
    out = []
    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for c in range(remaining, -1, -1):
            rec(prefix + (c,), remaining - c, slots - 1)
    rec((), m, n)
    # the recursion already emits decreasing lex order; verify the count
    assert len(out) == comb(n + m - 1, m)
    return out


@lru_cache(maxsize=None)
def monomial_basis(n: int, m: int) -> MonomialBasis:
    return MonomialBasis(n, m)


class PolyVec:
    """Homogeneous polynomial as coefficients over a MonomialBasis."""

    __slots__ = ("field", "basis", "coeffs")

    def __init__(self, field: FieldSpec, basis: MonomialBasis, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != len(basis):
            raise ValueError("coefficient count does not match basis size")
        self.field = field
        self.basis = basis
        self.coeffs = coeffs

    def __eq__(self, other):
        return (isinstance(other, PolyVec) and self.field == other.field
                and self.basis.n == other.basis.n
                and self.basis.m == other.basis.m
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"PolyVec(n={self.basis.n}, m={self.basis.m}, {self.coeffs})"

    def is_zero(self):
        return not any(self.coeffs)


def poly_one(field: FieldSpec, n: int) -> PolyVec:
    return PolyVec(field, monomial_basis(n, 0), [1])


def poly_from_vector(field: FieldSpec, v) -> PolyVec:
    """The linear form with coefficient v[i] on x_{i+1}."""
    n = len(v)
    return PolyVec(field, monomial_basis(n, 1), list(v))


def poly_mul(a: PolyVec, b: PolyVec) -> PolyVec:
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.basis.n != b.basis.n:
        raise ValueError("variable count mismatch")
    n = a.basis.n
    out_basis = monomial_basis(n, a.basis.m + b.basis.m)
    add, mul = a.field.add, a.field.mul
    index = out_basis.index
    coeffs = [0] * len(out_basis)
    a_exps = a.basis.exponents
    b_exps = b.basis.exponents
    for ia, ca in enumerate(a.coeffs):
        if not ca:
            continue
        ea = a_exps[ia]
        for ib, cb in enumerate(b.coeffs):
            if not cb:
                continue
            eb = b_exps[ib]
            k = index[tuple(x + y for x, y in zip(ea, eb))]
            coeffs[k] = add(coeffs[k], mul(ca, cb))
    return PolyVec(a.field, out_basis, coeffs)


def poly_pow(a: PolyVec, k: int) -> PolyVec:
    if k < 0:
        raise ValueError("negative power")
    result = poly_one(a.field, a.basis.n)
    for _ in range(k):
        result = poly_mul(result, a)
    return result


def poly_scale(c: int, a: PolyVec) -> PolyVec:
    mul = a.field.mul
    return PolyVec(a.field, a.basis, [mul(c, x) for x in a.coeffs])


class Rep:
    """Matrix representation of an enumerated group.

    ``field`` may be an extension of the group's field; ``embed`` is the
    lookup table carrying group-field element codes into ``field`` (the
    identity table when they coincide), so scalar data attached to the
    group stays usable after extension of scalars.
    """

    __slots__ = ("group", "field", "dim", "images", "embed")

    def __init__(self, group: GroupData, field: FieldSpec, dim: int,
                 images, embed=None):
        if len(images) != len(group.elements):
            raise ValueError("need one image per group element")
        self.group = group
        self.field = field
        self.dim = dim
        self.images = list(images)
        self.embed = tuple(embed) if embed is not None else tuple(range(group.field.q))

    def __repr__(self):
        return (f"Rep(dim={self.dim}, field={self.field!r}, "
                f"group_order={len(self.group.elements)})")


def defining_rep(group: GroupData) -> Rep:
    """The representation whose images are the group elements themselves."""
    return Rep(group, group.field, group.dim, list(group.elements))


def paired_rep(group: GroupData, gen_images) -> Rep:
    """Extend images of the generators to the whole group.

    The breadth-first closure is replayed through the group's edge table;
    every edge is checked, so two words reaching the same group element
    must produce equal images.  Any mismatch raises NotARepresentation,
    which certifies the homomorphism property on success.
    """
    gen_images = list(gen_images)
    if len(gen_images) != len(group.generators):
        raise ValueError("need exactly one image per generator")
    field = group.field
    dim = gen_images[0].nrows
    for m in gen_images:
        if not isinstance(m, Mat) or m.nrows != m.ncols or m.nrows != dim:
            raise ValueError("generator images must be square of equal size")
        if m.field != field:
            raise ValueError("generator images must live over the group field")

    from .linalg import mat_mul  # local import keeps module edges acyclic

    images = [None] * len(group.elements)
    images[0] = identity(field, dim)
    for i, row in enumerate(group.edges):
        src = images[i]
        for k, j in enumerate(row):
            prod = mat_mul(src, gen_images[k])
            if images[j] is None:
                images[j] = prod
            elif images[j] != prod:
                raise NotARepresentation(
                    "generator images are inconsistent: two words for group "
                    f"element {j} yield different matrices")
    return Rep(group, field, dim, images)


def _linear_forms(m: Mat):
    """Columns of m as linear forms (g . x_i is column i)."""
    n = m.nrows
    basis1 = monomial_basis(n, 1)
    return [PolyVec(m.field, basis1, [m.rows[r][i] for r in range(n)])
            for i in range(n)]


def _sym_image(m: Mat, basis: MonomialBasis) -> Mat:
    field = m.field
    n = basis.n
    forms = _linear_forms(m)
    # powers of each transformed variable, grown on demand
    pows = [[poly_one(field, n), forms[i]] for i in range(n)]

    def power(i, k):
        lst = pows[i]
        while len(lst) <= k:
            lst.append(poly_mul(lst[-1], forms[i]))
        return lst[k]

    dim = len(basis)
    cols = []
    for alpha in basis.exponents:
        poly = None
        for i, a in enumerate(alpha):
            if a:
                pw = power(i, a)
                poly = pw if poly is None else poly_mul(poly, pw)
        if poly is None:
            poly = poly_one(field, n)
        cols.append(poly.coeffs)
    rows = [[cols[j][i] for j in range(dim)] for i in range(dim)]
    return Mat._new(field, rows)


def sym_power(v: Rep, m: int) -> Rep:
    """Action on degree-m polynomials in dim(V) variables.

    Each image column is the expanded product of transformed variables for
    the corresponding basis monomial, computed per group element.
    """
    if m < 0:
        raise ValueError("negative symmetric power")
    basis = monomial_basis(v.dim, m)
    images = [_sym_image(g, basis) for g in v.images]
    return Rep(v.group, v.field, len(basis), images, embed=v.embed)


def apply_to_poly(g_index: int, p: PolyVec, v: Rep) -> PolyVec:
    """Substitute g's linear forms into p and re-expand.

    Agrees with applying the sym_power image matrix of g to p's coefficient
    vector; both routes are kept because the agreement is a useful
    cross-check.
    """
    if p.basis.n != v.dim:
        raise ValueError("variable count does not match the representation")
    if p.field != v.field:
        raise ValueError("field mismatch")
    field = v.field
    n = v.dim
    forms = _linear_forms(v.images[g_index])
    pows = [[poly_one(field, n), forms[i]] for i in range(n)]

    def power(i, k):
        lst = pows[i]
        while len(lst) <= k:
            lst.append(poly_mul(lst[-1], forms[i]))
        return lst[k]

    add, mul = field.add, field.mul
    out = [0] * len(p.basis)
    for idx, c in enumerate(p.coeffs):
        if not c:
            continue
        alpha = p.basis.exponents[idx]
        poly = None
        for i, a in enumerate(alpha):
            if a:
                pw = power(i, a)
                poly = pw if poly is None else poly_mul(poly, pw)
        if poly is None:
            out[0] = add(out[0], c)
            continue
        for k, x in enumerate(poly.coeffs):
            if x:
                out[k] = add(out[k], mul(c, x))
    return PolyVec(field, p.basis, out)


def dual_rep(r: Rep) -> Rep:
    """Contragredient action: g maps to the transpose of the image of its
    inverse."""
    inverse = r.group.inverse
    images = [transpose(r.images[inverse[g]]) for g in range(len(r.images))]
    return Rep(r.group, r.field, r.dim, images, embed=r.embed)


def extend_scalars(r: Rep, e: int) -> Rep:
    """Same group, entries pushed through the degree-e field extension."""
    if e == 1:
        return r
    ext, table = extend_field(r.field, e)
    images = [Mat._new(ext, [[table[x] for x in row] for row in m.rows])
              for m in r.images]
    embed = tuple(table[x] for x in r.embed)
    return Rep(r.group, ext, r.dim, images, embed=embed)


def restrict_scalar_character(w: Rep):
    """How the scalar subgroup acts on w.

    Returns (True, t) when the distinguished scalar generator acts on w as
    the scalar lam^t (t taken in [0, center order)), and (False, None)
    when its image is not scalar.
    """
    group = w.group
    if group.z_indices is None:
        raise ValueError("center data missing; call center_scalars first")
    m = w.images[group.z_generator_index]
    c = m.rows[0][0]
    for i, row in enumerate(m.rows):
        for j, x in enumerate(row):
            if i == j:
                if x != c:
                    return False, None
            elif x:
                return False, None
    lam_here = w.embed[group.lam]
    t = discrete_log(w.field, lam_here, c, len(group.z_indices))
    return True, t


def induced_from_center(group: GroupData, t: int, field: FieldSpec = None,
                        embed=None) -> Rep:
    """Induction of the scalar character lam^t up to the whole group.

    The basis is indexed by the coset transversal; each image is a monomial
    matrix recording how left multiplication permutes cosets and which
    scalar falls out of the coset representative correction.
    """
    if group.transversal is None:
        raise ValueError("transversal missing; call coset_transversal first")
    if field is None:
        field = group.field
        embed = tuple(range(group.field.q))
    embed = tuple(embed)
    n = len(group.transversal)
    images = []
    for g in range(len(group.elements)):
        rows = [[0] * n for _ in range(n)]
        for c, h in enumerate(group.transversal):
            gh = group.prod(g, h)
            c2 = group.coset_of[gh]
            z = group.prod(group.inverse[group.transversal[c2]], gh)
            scalar = group.elements[z].rows[0][0]
            rows[c2][c] = field.pow(embed[scalar], t)
        images.append(Mat._new(field, rows))
    return Rep(group, field, n, images, embed=embed)


def hom_defect_count(r: Rep) -> int:
    """Number of pairs (a, b) where images[a] @ images[b] != images[ab].

    Exhaustive; intended for tests at desk scale.
    """
    from .linalg import mat_mul
    group = r.group
    bad = 0
    for a in range(len(group.elements)):
        for b in range(len(group.elements)):
            if mat_mul(r.images[a], r.images[b]) != r.images[group.prod(a, b)]:
                bad += 1
    return bad
