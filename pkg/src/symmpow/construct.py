"""Constructive occurrence of an irreducible module in a symmetric power.

Pipeline, for a group G acting on V with scalar subgroup Z of order z,
coset count N = |G/Z|, and an irreducible W on which Z acts through the
t-th power of the distinguished scalar character:

* pick a generic vector v: one whose line no non-central element fixes
  (sweeping extensions of the base field until one exists);
* per coset c, form the product F_c of the linear forms of h(v) over the
  transversal representatives h of all OTHER cosets (degree N - 1);
* the span of the N polynomials F_c^j * B^t * C^k, with B the product of
  all transversal lines (degree N), C the product of the lines of the full
  orbit (degree |G|), and j = z - t, lives in degree m + k|G| where
  m = Nz - j; it is N-dimensional, permuted by G coset-compatibly, carries
  the central character matching W, and is isomorphic to the module
  induced from that character;
* hence W maps nontrivially both into and out of the span, and composing
  with the inclusion of the span into the full symmetric power yields
  explicit embedding and quotient witnesses.

Every one of those assertions is verified exactly; any failure raises
TheoremViolation, since each is a proved identity and a failure can only
mean an implementation bug or a violated precondition.

Central groups (G = Z) take a degenerate branch: any nonzero v works, the
span is the single polynomial built from the line of v and the orbit
product, and the degree rule is m = t for t >= 1 and m = z for t = 0 (the
smallest positive degree with the right central character).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iter_product
from math import lcm

from .errors import TheoremViolation
from .fields import FieldSpec, extend_field
from .groups import GroupData, center_scalars, coset_transversal
from .homs import hom_space
from .linalg import Mat, mat_mul, mat_vec, rank, transpose
from .reps import (Rep, defining_rep, extend_scalars, induced_from_center,
                   monomial_basis, poly_from_vector, poly_mul, poly_one,
                   poly_pow, restrict_scalar_character, sym_power, PolyVec)

_MAX_EXTENSION_SWEEP = 64

_generic_cache: dict = {}
_sym_cache: dict = {}


def _field_key(field: FieldSpec):
    return (field.p, field.f, field.modulus)


def _cached_sym_images(group: GroupData, rep: Rep, degree: int):
    key = (group, _field_key(rep.field), degree)
    images = _sym_cache.get(key)
    if images is None:
        images = sym_power(rep, degree).images
        _sym_cache[key] = images
    return images


def clear_caches():
    _generic_cache.clear()
    _sym_cache.clear()


def _embedded_images(group: GroupData, ext: FieldSpec, table, indices):
    if ext is group.field:
        return [group.elements[i] for i in indices]
    return [Mat._new(ext, [[table[x] for x in row] for row in group.elements[i].rows])
            for i in indices]


def is_generic_vector(group: GroupData, images, v) -> bool:
    """True when no matrix in images maps v to a scalar multiple of v."""
    field = images[0].field if images else None
    for m in images:
        u = mat_vec(m, v)
        i0 = next(i for i, c in enumerate(v) if c)
        lam = field.mul(u[i0], field.inv(v[i0]))
        if all(ui == field.mul(lam, vi) for ui, vi in zip(u, v)):
            return False
    return True


def find_generic_vector(group: GroupData, v_rep: Rep):
    """First vector (coordinate-lex sweep) whose line no non-central
    element fixes, extending scalars until one exists.

    Returns (v, field).  Termination: once q^e exceeds |G| the union of
    the eigenspaces cannot cover the whole space.
    """
    if group.z_indices is None:
        center_scalars(group)
    if group.center_order == group.order:
        raise ValueError("group acts by scalars; every vector is fixed")
    cached = _generic_cache.get(group)
    if cached is not None:
        return cached
    base = group.field
    n = group.dim
    z_set = set(group.z_indices)
    noncentral = [i for i in range(group.order) if i not in z_set]
    for e in range(1, _MAX_EXTENSION_SWEEP + 1):
        if e == 1:
            ext, table = base, None
        else:
            ext, table = extend_field(base, e)
        images = _embedded_images(group, ext, table, noncentral)
        for v in iter_product(range(ext.q), repeat=n):
            if not any(v):
                continue
            if is_generic_vector(group, images, list(v)):
                result = (tuple(v), ext)
                _generic_cache[group] = result
                return result
    raise AssertionError("no generic vector within the extension sweep")


def build_coset_products(v, group: GroupData, v_rep: Rep):
    """Per coset c: the product over all other cosets c' of the linear
    form of (transversal representative of c') applied to v."""
    if group.transversal is None:
        coset_transversal(group)
    field = v_rep.field
    lines = [poly_from_vector(field, mat_vec(v_rep.images[h], list(v)))
             for h in group.transversal]
    out = []
    for c in range(len(lines)):
        prod = None
        for c2, form in enumerate(lines):
            if c2 == c:
                continue
            prod = form if prod is None else poly_mul(prod, form)
        out.append(prod if prod is not None else poly_one(field, v_rep.dim))
    return out


def check_independence(coset_products, j: int) -> bool:
    """Rank of the stacked coefficient vectors of the j-th powers."""
    if j < 1:
        raise ValueError("power must be at least 1")
    field = coset_products[0].field
    rows = [poly_pow(f, j).coeffs for f in coset_products]
    return rank(Mat._new(field, rows)) == len(coset_products)


@dataclass
class Certificate:
    """Full record of one verified occurrence in a symmetric power.

    All polynomial and witness data is kept so an external tool can replay
    every check.  degree is m; total_degree is m + shift * group_order.
    """

    field: FieldSpec
    extension_degree: int
    generic_vector: tuple
    char_exponent: int            # power of the scalar character on W
    complement_exponent: int      # center_order - char_exponent
    coset_count: int
    center_order: int
    group_order: int
    degree: int
    shift: int
    total_degree: int
    coset_products: list
    transversal_product: PolyVec
    orbit_product: PolyVec
    span_polys: list
    embedding_witness: Mat
    quotient_witness: Mat
    central: bool
    flags: dict = dc_field(default_factory=dict)


def _require(flags: dict, name: str, ok: bool):
    flags[name] = bool(ok)
    if not ok:
        raise TheoremViolation(f"verified identity failed: {name}")


def _align_to_common_field(group: GroupData, w: Rep, v, v_field: FieldSpec):
    """Push w, the defining action, and v into one common extension."""
    f0 = group.field.f
    target = lcm(w.field.f, v_field.f)
    w_ext = extend_scalars(w, target // w.field.f)
    v_rep = extend_scalars(defining_rep(group), target // f0)
    if v_field.f == target:
        v_t = tuple(v)
    else:
        _, table = extend_field(v_field, target // v_field.f)
        v_t = tuple(table[x] for x in v)
    if w_ext.field != v_rep.field:
        raise ValueError("module field is not a standard extension tower; "
                         "extend via extend_scalars from the group field")
    return w_ext, v_rep, v_t


def assemble(w: Rep, k: int = 0) -> Certificate:
    """Build and verify the span certifying that w occurs in the
    symmetric power of degree m + k|G|."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    group = w.group
    if group.z_indices is None:
        center_scalars(group)
    if group.transversal is None:
        coset_transversal(group)

    scalar_flag, t = restrict_scalar_character(w)
    if not scalar_flag:
        raise ValueError("center does not act by scalars on this module "
                         "over its field; extend scalars first")

    zn = group.center_order
    order = group.order
    central = zn == order

    if central:
        j = zn - t
        m = t if t >= 1 else zn
        v = tuple(0 for _ in range(group.dim - 1)) + (1,)
        w_ext = w
        v_rep = extend_scalars(defining_rep(group), w.field.f // group.field.f)
        if w_ext.field != v_rep.field:
            raise ValueError("module field is not a standard extension tower")
        v_t = v
    else:
        N = group.coset_count
        j = zn - t
        m = N * zn - j
        if not (1 <= j <= zn and 1 <= m < order):
            raise TheoremViolation(f"degree bookkeeping out of range: "
                                   f"t={t} j={j} m={m} order={order}")
        v, v_field = find_generic_vector(group, defining_rep(group))
        w_ext, v_rep, v_t = _align_to_common_field(group, w, v, v_field)

    field = v_rep.field
    flags: dict = {}

    coset_products = build_coset_products(v_t, group, v_rep)
    if not central:
        _require(flags, "coset_powers_independent",
                 check_independence(coset_products, j))
    else:
        flags["coset_powers_independent"] = True

    transversal_lines = [poly_from_vector(field, mat_vec(v_rep.images[h], list(v_t)))
                         for h in group.transversal]
    transversal_product = transversal_lines[0]
    for form in transversal_lines[1:]:
        transversal_product = poly_mul(transversal_product, form)

    orbit_product = None
    for g in range(order):
        form = poly_from_vector(field, mat_vec(v_rep.images[g], list(v_t)))
        orbit_product = form if orbit_product is None else poly_mul(orbit_product, form)

    total_degree = m + k * order
    span_polys = []
    for f_c in coset_products:
        p = poly_pow(f_c, j) if not central else poly_one(field, group.dim)
        if central:
            if t >= 1:
                p = poly_mul(p, poly_pow(transversal_product, t))
            else:
                p = poly_mul(p, orbit_product)
        elif t >= 1:
            p = poly_mul(p, poly_pow(transversal_product, t))
        if k >= 1:
            p = poly_mul(p, poly_pow(orbit_product, k))
        span_polys.append(p)
    _require(flags, "span_degree",
             all(p.basis.m == total_degree for p in span_polys))

    n_span = len(span_polys)
    span_matrix = Mat._new(field, [p.coeffs for p in span_polys])
    _require(flags, "span_dimension", rank(span_matrix) == n_span)

    sym_images = _cached_sym_images(group, v_rep, total_degree)
    dim_sym = len(monomial_basis(group.dim, total_degree))

    lead = [next(i for i, c in enumerate(p.coeffs) if c) for p in span_polys]
    span_images = []
    perm_ok = True
    for g in range(order):
        img_rows = [[0] * n_span for _ in range(n_span)]
        for c in range(n_span):
            y = mat_vec(sym_images[g], span_polys[c].coeffs)
            c2 = group.coset_of[group.prod(g, group.transversal[c])]
            pc2 = span_polys[c2].coeffs
            ratio = field.mul(y[lead[c2]], field.inv(pc2[lead[c2]]))
            if any(yi != field.mul(ratio, pi) for yi, pi in zip(y, pc2)) or not ratio:
                perm_ok = False
                break
            img_rows[c2][c] = ratio
        if not perm_ok:
            break
        span_images.append(Mat._new(field, img_rows))
    _require(flags, "coset_permutation", perm_ok)
    span_rep = Rep(group, field, n_span, span_images, embed=v_rep.embed)

    lam_ext = v_rep.embed[group.lam]
    z_img = span_images[group.z_generator_index]
    want = field.pow(lam_ext, t)
    _require(flags, "center_character",
             all(z_img.rows[a][b] == (want if a == b else 0)
                 for a in range(n_span) for b in range(n_span)))

    induced = induced_from_center(group, t, field, v_rep.embed)
    phi = Mat._new(field, [[span_images[group.transversal[c]].rows[u][0]
                            for c in range(n_span)] for u in range(n_span)])
    iso_ok = rank(phi) == n_span and all(
        mat_mul(span_images[g], phi) == mat_mul(phi, induced.images[g])
        for g in range(order))
    _require(flags, "induced_isomorphism", iso_ok)

    hs_in = hom_space(w_ext, span_rep)
    hs_out = hom_space(span_rep, w_ext)
    _require(flags, "module_occurs_in_span", hs_in.dim > 0 and hs_out.dim > 0)

    sym_rep = Rep(group, field, dim_sym, sym_images, embed=v_rep.embed)
    span_cols = transpose(span_matrix)
    embedding = mat_mul(span_cols, hs_in.basis[0])
    emb_ok = rank(embedding) == w_ext.dim and all(
        mat_mul(sym_images[s], embedding) == mat_mul(embedding, w_ext.images[s])
        for s in group.generator_indices)
    _require(flags, "embedding_witness", emb_ok)

    hs_quot = hom_space(sym_rep, w_ext)
    _require(flags, "quotient_exists", hs_quot.dim > 0)
    quotient = hs_quot.basis[0]
    quot_ok = rank(quotient) == w_ext.dim and all(
        mat_mul(w_ext.images[s], quotient) == mat_mul(quotient, sym_images[s])
        for s in group.generator_indices)
    _require(flags, "quotient_witness", quot_ok)

    return Certificate(
        field=field,
        extension_degree=field.f // group.field.f,
        generic_vector=tuple(v_t),
        char_exponent=t,
        complement_exponent=j,
        coset_count=n_span,
        center_order=zn,
        group_order=order,
        degree=m,
        shift=k,
        total_degree=total_degree,
        coset_products=coset_products,
        transversal_product=transversal_product,
        orbit_product=orbit_product,
        span_polys=span_polys,
        embedding_witness=embedding,
        quotient_witness=quotient,
        central=central,
        flags=flags,
    )


def verify_periodicity(w: Rep, cert: Certificate, k_max: int):
    """Rerun the assembly at shifts 1..k_max; every run must verify."""
    out = []
    for k in range(1, k_max + 1):
        shifted = assemble(w, k)
        if shifted.degree != cert.degree or shifted.char_exponent != cert.char_exponent:
            raise TheoremViolation("shifted certificate disagrees on degree data")
        out.append(all(shifted.flags.values()))
    return out
