"""Dense exact linear algebra over a FieldSpec.

Matrices are row-major lists of lists of element codes.  Pivoting is
first-nonzero, free columns are processed in ascending order, so reduced
forms and null-space bases are deterministic and reproducible byte for
byte.
"""

from __future__ import annotations

from .fields import FieldSpec


class Mat:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldSpec, rows):
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("matrix needs at least one row")
        ncols = len(rows[0])
        q = field.q
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for x in r:
                if not isinstance(x, int) or not 0 <= x < q:
                    raise ValueError(f"entry {x!r} is not a GF({q}) code")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def _new(cls, field, rows):
        # trusted fast path: takes ownership of rows, skips validation
        m = object.__new__(cls)
        m.field = field
        m.nrows = len(rows)
        m.ncols = len(rows[0])
        m.rows = rows
        return m

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return f"Mat({self.field!r}, {self.rows})"

    def copy(self):
        return Mat._new(self.field, [list(r) for r in self.rows])

    def key(self):
        """Hashable content key, used for group element lookup."""
        return tuple(x for row in self.rows for x in row)


def identity(field: FieldSpec, n: int) -> Mat:
    return Mat._new(field, [[1 if i == j else 0 for j in range(n)]
                            for i in range(n)])


def zeros(field: FieldSpec, nrows: int, ncols: int) -> Mat:
    return Mat._new(field, [[0] * ncols for _ in range(nrows)])


def scalar_mat(field: FieldSpec, n: int, c: int) -> Mat:
    return Mat._new(field, [[c if i == j else 0 for j in range(n)]
                            for i in range(n)])


def transpose(a: Mat) -> Mat:
    return Mat._new(a.field, [list(col) for col in zip(*a.rows)])


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch {a.nrows}x{a.ncols} @ {b.nrows}x{b.ncols}")
    add, mul = a.field.add, a.field.mul
    b_rows = b.rows
    out = []
    for arow in a.rows:
        row = [0] * b.ncols
        for k, av in enumerate(arow):
            if av:
                brow = b_rows[k]
                for j, bv in enumerate(brow):
                    if bv:
                        row[j] = add(row[j], mul(av, bv))
        out.append(row)
    return Mat._new(a.field, out)


def mat_add(a: Mat, b: Mat) -> Mat:
    if a.field != b.field or a.nrows != b.nrows or a.ncols != b.ncols:
        raise ValueError("shape or field mismatch")
    add = a.field.add
    return Mat._new(a.field, [[add(x, y) for x, y in zip(ra, rb)]
                              for ra, rb in zip(a.rows, b.rows)])


def scalar_mul(c: int, a: Mat) -> Mat:
    mul = a.field.mul
    return Mat._new(a.field, [[mul(c, x) for x in r] for r in a.rows])


def mat_vec(a: Mat, v) -> list:
    if len(v) != a.ncols:
        raise ValueError("vector length mismatch")
    add, mul = a.field.add, a.field.mul
    out = []
    for row in a.rows:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = add(acc, mul(x, y))
        out.append(acc)
    return out


def stack_rows(mats) -> Mat:
    mats = list(mats)
    field = mats[0].field
    ncols = mats[0].ncols
    rows = []
    for m in mats:
        if m.field != field or m.ncols != ncols:
            raise ValueError("stack mismatch")
        rows.extend(list(r) for r in m.rows)
    return Mat._new(field, rows)


def rref(a: Mat):
    """Reduced row echelon form.

    Returns (R, rank, pivot_columns).  The pivot in each column is the first
    nonzero entry scanning rows top down, which fixes the output uniquely.
    """
    field = a.field
    sub, mul, inv = field.sub, field.mul, field.inv
    rows = [list(r) for r in a.rows]
    nrows, ncols = a.nrows, a.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pr = rows[r]
        piv_inv = inv(pr[c])
        if piv_inv != 1:
            rows[r] = pr = [mul(piv_inv, x) for x in pr]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Mat._new(field, rows), r, tuple(pivots)


def rank(a: Mat) -> int:
    return rref(a)[1]


def null_space(a: Mat):
    """Basis of the right kernel, as a list of column vectors.

    One basis vector per free column, in ascending free-column order, with
    the free coordinate set to 1.  a v = 0 holds exactly for each.
    """
    R, _, pivots = rref(a)
    neg = a.field.neg
    pivot_set = set(pivots)
    basis = []
    for j in range(a.ncols):
        if j in pivot_set:
            continue
        vec = [0] * a.ncols
        vec[j] = 1
        for k, pc in enumerate(pivots):
            vec[pc] = neg(R.rows[k][j])
        basis.append(vec)
    return basis


def mat_inv(a: Mat) -> Mat:
    if a.nrows != a.ncols:
        raise ValueError("inverse of non-square matrix")
    n = a.nrows
    aug = Mat._new(a.field, [list(r) + [1 if i == j else 0 for j in range(n)]
                             for i, r in enumerate(a.rows)])
    R, rk, _ = rref(aug)
    if rk < n or any(R.rows[i][i] != 1 for i in range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Mat._new(a.field, [row[n:] for row in R.rows])


def solve(a: Mat, b: Mat):
    """A particular X with a @ X = b, or None if the system is inconsistent.

    Free variables are set to zero; when a has full column rank the solution
    is unique.
    """
    if a.field != b.field or a.nrows != b.nrows:
        raise ValueError("shape or field mismatch")
    n = a.ncols
    aug = Mat._new(a.field, [list(ra) + list(rb)
                             for ra, rb in zip(a.rows, b.rows)])
    R, _, pivots = rref(aug)
    for i, row in enumerate(R.rows):
        if any(row[:n]) or not any(row[n:]):
            continue
        return None  # zero row in the coefficient block with nonzero rhs
    out = [[0] * b.ncols for _ in range(n)]
    for k, pc in enumerate(pivots):
        if pc >= n:
            return None
        out[pc] = list(R.rows[k][n:])
    return Mat._new(a.field, out)


def is_zero(a: Mat) -> bool:
    return all(not x for row in a.rows for x in row)
