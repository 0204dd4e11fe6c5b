"""Irreducibility certification and splitting (Norton/Parker style).

Random group-algebra elements theta are drawn from a tiny linear
congruential generator so verdicts replay exactly: state' = (A*state + C)
mod 2^64 with A = 6364136223846793005 and C = 1442695040888963407, output
= upper 31 bits of the new state.  Reproducibility across runs and
languages matters here; statistical quality does not.

For a singular theta the kernel is enumerated line by line (spinning a
vector and any scalar multiple agree, so one representative per line
suffices).  Every kernel line must spin to the full space, and one kernel
vector of the transposed theta must spin to the full dual space under the
contragredient action; together these certify irreducibility.  A proper
spin on either side hands back an explicit stable subspace: directly in
the primal case, as the annihilator of the dual spin otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import MeataxeInconclusive
from .homs import hom_space
from .linalg import Mat, mat_add, mat_mul, mat_vec, null_space, rref, scalar_mul, transpose
from .reps import Rep, dual_rep, extend_scalars

_LCG_A = 6364136223846793005
_LCG_C = 1442695040888963407
_LCG_MASK = (1 << 64) - 1

_LINE_LIMIT = 4096
_DEFAULT_BUDGET = 64


class Lcg:
    """Deterministic 64-bit linear congruential generator (see module doc)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _LCG_MASK

    def next_raw(self) -> int:
        self.state = (_LCG_A * self.state + _LCG_C) & _LCG_MASK
        return self.state >> 33

    def randrange(self, n: int) -> int:
        return self.next_raw() % n


@dataclass
class SplitResult:
    """Outcome of an irreducibility test.

    verdict is "irreducible" or "split".  On a split, basis holds a
    dim x k matrix whose columns span a proper stable subspace, and
    sub_rep / quot_rep carry the two induced actions.  The certificate
    is enough to replay the verdict: the theta recipe and the vectors
    whose spins decided it.
    """

    verdict: str
    basis: Mat | None = None
    sub_rep: Rep | None = None
    quot_rep: Rep | None = None
    draws: int = 0
    certificate: dict = dc_field(default_factory=dict)

    @property
    def irreducible(self) -> bool:
        return self.verdict == "irreducible"


def _gen_images(r: Rep):
    return [r.images[s] for s in r.group.generator_indices]


def _spin(vec, gens, field, dim):
    """Breadth-first closure of a vector under the given matrices.

    Returns the subspace in reduced row echelon form (rows are a canonical
    basis).  Stops early once the whole space is reached.
    """
    rows = []          # echelon rows, pivot-normalized, kept pivot-sorted
    pivots = []
    queue = []

    def insert(y):
        y = list(y)
        for p, row in zip(pivots, rows):
            c = y[p]
            if c:
                sub, mul = field.sub, field.mul
                y = [sub(a, mul(c, b)) for a, b in zip(y, row)]
        piv = next((i for i, c in enumerate(y) if c), None)
        if piv is None:
            return False
        inv_c = field.inv(y[piv])
        y = [field.mul(inv_c, c) for c in y]
        at = next((t for t, p in enumerate(pivots) if p > piv), len(pivots))
        pivots.insert(at, piv)
        rows.insert(at, y)
        queue.append(y)
        return True

    insert(vec)
    qi = 0
    while qi < len(queue) and len(rows) < dim:
        v = queue[qi]
        qi += 1
        for g in gens:
            if insert(mat_vec(g, v)) and len(rows) == dim:
                break
    reduced, _, _ = rref(Mat._new(field, rows))
    return reduced


def spin_up(v0, r: Rep) -> Mat:
    """Smallest stable subspace containing v0, as echelon basis rows."""
    if not any(v0):
        raise ValueError("cannot spin the zero vector")
    return _spin(v0, _gen_images(r), r.field, r.dim)


def _random_theta(rng: Lcg, r: Rep, gens):
    """A short random element of the acting algebra, with its recipe."""
    field = r.field
    nterms = 2 + rng.randrange(3)
    theta = None
    recipe = []
    for _ in range(nterms):
        coeff = 1 + rng.randrange(field.q - 1)
        length = 1 + rng.randrange(6)
        word = [rng.randrange(len(gens)) for _ in range(length)]
        m = gens[word[0]]
        for k in word[1:]:
            m = mat_mul(m, gens[k])
        term = scalar_mul(coeff, m)
        theta = term if theta is None else mat_add(theta, term)
        recipe.append({"coeff": coeff, "word": word})
    return theta, recipe


def _kernel_lines(field, kernel_vectors):
    """One representative per line of the span, first nonzero coord = 1.

    Returns None when the line count exceeds the enumeration limit.
    """
    k = len(kernel_vectors)
    q = field.q
    count = (q ** k - 1) // (q - 1)
    if count > _LINE_LIMIT:
        return None
    n = len(kernel_vectors[0])
    add, mul = field.add, field.mul
    lines = []
    # leading-coefficient-1 combinations: first nonzero coefficient is 1
    for lead in range(k):
        tail = k - lead - 1
        for code in range(q ** tail):
            coeffs = [0] * lead + [1]
            c = code
            for _ in range(tail):
                coeffs.append(c % q)
                c //= q
            vec = [0] * n
            for co, kv in zip(coeffs, kernel_vectors):
                if co:
                    for i, x in enumerate(kv):
                        if x:
                            vec[i] = add(vec[i], mul(co, x))
            lines.append(vec)
    assert len(lines) == count
    return lines


def _split_from_rows(r: Rep, rows_mat: Mat, draws: int, certificate: dict) -> SplitResult:
    basis_cols = transpose(rows_mat)
    sub = _restrict(r, rows_mat)
    quot = _quotient(r, rows_mat)
    return SplitResult("split", basis=basis_cols, sub_rep=sub, quot_rep=quot,
                       draws=draws, certificate=certificate)


def is_irreducible(r: Rep, seed: int = 0, budget: int = _DEFAULT_BUDGET) -> SplitResult:
    """Norton/Parker test; raises MeataxeInconclusive after the draw budget."""
    if r.dim < 1:
        raise ValueError("empty module")
    if r.dim == 1:
        return SplitResult("irreducible", draws=0,
                           certificate={"reason": "dimension 1"})
    rng = Lcg(seed)
    gens = _gen_images(r)
    field = r.field
    dual_gens = None
    for draw in range(1, budget + 1):
        theta, recipe = _random_theta(rng, r, gens)
        kernel = null_space(theta)
        if not kernel:
            continue
        lines = _kernel_lines(field, kernel)
        if lines is None:
            continue
        cert = {"theta": recipe, "kernel_dim": len(kernel),
                "lines_checked": len(lines)}
        proper = None
        for vec in lines:
            spun = _spin(vec, gens, field, r.dim)
            if spun.nrows < r.dim:
                cert["primal_vector"] = vec
                proper = spun
                break
        if proper is not None:
            return _split_from_rows(r, proper, draw, cert)
        if dual_gens is None:
            dual_gens = _gen_images(dual_rep(r))
        dual_kernel = null_space(transpose(theta))
        w0 = dual_kernel[0]
        cert["dual_vector"] = w0
        dual_spun = _spin(w0, dual_gens, field, r.dim)
        if dual_spun.nrows == r.dim:
            return SplitResult("irreducible", draws=draw, certificate=cert)
        # annihilator of a stable dual subspace is a stable subspace
        ann = null_space(dual_spun)
        ann_rows, _, _ = rref(Mat._new(field, [list(v) for v in ann]))
        return _split_from_rows(r, ann_rows, draw, cert)
    raise MeataxeInconclusive(
        f"no verdict after {budget} draws (seed {seed}); raise the budget "
        "or vary the seed")


def _restrict(r: Rep, rows_mat: Mat) -> Rep:
    """Action on the row space of rows_mat (rows must be in rref)."""
    field = r.field
    rows = rows_mat.rows
    s = rows_mat.nrows
    _, _, pivots = rref(rows_mat)
    sub, mul = field.sub, field.mul
    images = []
    for m in r.images:
        cols = []
        for b in rows:
            y = mat_vec(m, b)
            coords = [y[p] for p in pivots]
            # residual must vanish: stability of the subspace is asserted,
            # not assumed
            for t, c in enumerate(coords):
                if c:
                    row = rows[t]
                    y = [sub(a, mul(c, x)) for a, x in zip(y, row)]
            if any(y):
                raise ValueError("subspace is not stable under the action")
            cols.append(coords)
        images.append(Mat._new(field, [[cols[t][u] for t in range(s)]
                                       for u in range(s)]))
    return Rep(r.group, field, s, images, embed=r.embed)


def _quotient(r: Rep, rows_mat: Mat) -> Rep:
    """Action on the quotient by the row space (basis: non-pivot columns)."""
    field = r.field
    _, _, pivots = rref(rows_mat)
    pivot_set = set(pivots)
    free = [j for j in range(r.dim) if j not in pivot_set]
    rows = rows_mat.rows
    sub, mul = field.sub, field.mul
    images = []
    for m in r.images:
        cols = []
        for j in free:
            y = [m.rows[i][j] for i in range(r.dim)]
            for t, p in enumerate(pivots):
                c = y[p]
                if c:
                    row = rows[t]
                    y = [sub(a, mul(c, x)) for a, x in zip(y, row)]
            cols.append([y[qc] for qc in free])
        k = len(free)
        images.append(Mat._new(field, [[cols[t][u] for t in range(k)]
                                       for u in range(k)]))
    return Rep(r.group, field, len(free), images, embed=r.embed)


def simple_submodule(r: Rep, seed: int = 0) -> Rep:
    """Descend through splits until an irreducible submodule remains."""
    res = is_irreducible(r, seed)
    if res.irreducible:
        return r
    return simple_submodule(res.sub_rep, seed)


def simple_quotient(r: Rep, seed: int = 0) -> Rep:
    """A simple quotient: dualize, take a simple submodule, dualize back."""
    s = simple_submodule(dual_rep(r), seed)
    return dual_rep(s)


def splitting_extension(r: Rep, seed: int = 0):
    """Smallest e with an absolutely irreducible piece over GF(q^e).

    Returns (e, piece).  For irreducible r the endomorphism algebra is the
    field GF(q^e), so e divides dim(r) and the loop terminates.
    """
    for e in range(1, r.dim + 1):
        big = extend_scalars(r, e)
        s = simple_submodule(big, seed)
        if hom_space(s, s).dim == 1:
            return e, s
    raise AssertionError("no splitting degree up to dim; input not irreducible?")
