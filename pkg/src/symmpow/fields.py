"""Exact arithmetic in GF(p) and GF(p^f).

Elements of GF(p^f) are plain Python ints in ``range(p**f)``: the int
``sum(c[k] * p**k)`` encodes the coefficient vector ``(c[0], ..., c[f-1])``
of the representative polynomial modulo the field's irreducible modulus,
lowest degree first.  For f = 1 an element is simply its residue mod p.
The encoding makes equality, hashing and serialization trivial and lets the
hot paths (Gaussian elimination, polynomial expansion) run on machine ints.

The modulus is always the lexicographically smallest monic irreducible
polynomial of degree f over Z_p, coefficients compared lowest degree first,
unless the caller supplies one explicitly.  For f = 1 the modulus is the
polynomial t.  Everything here is deterministic; FieldSpec instances are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import itertools

# Sizes below which lookup tables are precomputed.  Exp/log tables cost O(q)
# ints, the addition table O(q^2); beyond the limits a slower decode-based
# path keeps the contract correct for any q <= 2**31.
_EXP_LOG_LIMIT = 1 << 16
_ADD_TABLE_LIMIT = 1 << 10

_ORDER_LIMIT = 1 << 31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a, b, p):
    """Remainder of a by b over Z_p; coefficient lists, lowest degree first."""
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while True:
        _poly_trim(a)
        if len(a) < len(b):
            return a
        c = a[-1] * inv_lead % p
        off = len(a) - len(b)
        for i, bc in enumerate(b):
            a[off + i] = (a[off + i] - c * bc) % p


def _poly_is_irreducible(mod, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(mod)/2."""
    f = len(mod) - 1
    if f < 1:
        return False
    for d in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_rem(mod, divisor, p):
                return False
    return True


def _lex_min_irreducible(p: int, f: int):
    for tail in itertools.product(range(p), repeat=f):
        cand = list(tail) + [1]
        if _poly_is_irreducible(cand, p):
            return tuple(cand)
    raise ArithmeticError("no irreducible polynomial found")  # unreachable


class FieldSpec:
    """Arithmetic context for GF(p^f); elements are ints in range(q).

    Use :func:`make_field` to construct.  The bound callables ``add``,
    ``sub``, ``neg``, ``mul``, ``inv`` and ``pow`` are the element
    operations; ``coeffs``/``element`` convert between int codes and
    coefficient vectors.
    """

    __slots__ = (
        "p", "f", "q", "modulus",
        "add", "sub", "neg", "mul", "inv", "pow",
        "_coeff_table", "_exp", "_log",
    )

    def __init__(self, p: int, f: int, modulus):
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = tuple(modulus)
        if f == 1:
            self._setup_prime()
        else:
            self._setup_extension()

    # construction helpers -------------------------------------------------

    def _setup_prime(self):
        p = self.p

        def add(a, b):
            return (a + b) % p

        def sub(a, b):
            return (a - b) % p

        def neg(a):
            return (-a) % p

        def mul(a, b):
            return (a * b) % p

        def inv(a):
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, p - 2, p)

        def pw(a, e):
            if e < 0:
                return pow(inv(a), -e, p)
            return pow(a, e, p)

        self.add, self.sub, self.neg, self.mul, self.inv, self.pow = (
            add, sub, neg, mul, inv, pw)
        self._coeff_table = None
        self._exp = None
        self._log = None

    def _raw_coeffs(self, a):
        p, f = self.p, self.f
        out = []
        for _ in range(f):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _raw_encode(self, coeffs):
        p = self.p
        v = 0
        for c in reversed(coeffs):
            v = v * p + c
        return v

    def _raw_mul(self, a, b):
        p, f, mod = self.p, self.f, self.modulus
        ca = self._raw_coeffs(a)
        cb = self._raw_coeffs(b)
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce t^d for d >= f using t^f = -mod[:f]
        for d in range(2 * f - 2, f - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(f):
                    prod[d - f + i] = (prod[d - f + i] - c * mod[i]) % p
        return self._raw_encode(prod[:f])

    def _raw_inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.p
        # extended Euclid on coefficient polynomials
        r0, r1 = list(self.modulus), _poly_trim(self._raw_coeffs(a))
        s0, s1 = [], [1]
        while r1:
            # divide r0 by r1
            q_poly = [0] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
            r = list(r0)
            inv_lead = pow(r1[-1], p - 2, p)
            while len(_poly_trim(r)) >= len(r1) and r:
                c = r[-1] * inv_lead % p
                off = len(r) - len(r1)
                q_poly[off] = c
                for i, bc in enumerate(r1):
                    r[off + i] = (r[off + i] - c * bc) % p
                _poly_trim(r)
            # s_next = s0 - q*s1
            s_next = list(s0) + [0] * max(0, len(q_poly) + len(s1) - 1 - len(s0))
            for i, qc in enumerate(q_poly):
                if qc:
                    for j, sc in enumerate(s1):
                        s_next[i + j] = (s_next[i + j] - qc * sc) % p
            r0, r1 = r1, r
            s0, s1 = s1, _poly_trim(s_next)
        # r0 is the gcd, a nonzero constant
        c_inv = pow(r0[0], p - 2, p)
        coeffs = [(x * c_inv) % p for x in s0]
        coeffs += [0] * (self.f - len(coeffs))
        return self._raw_encode(coeffs[: self.f])

    def _setup_extension(self):
        p, f, q = self.p, self.f, self.q
        small = q <= _EXP_LOG_LIMIT
        self._coeff_table = (
            [tuple(self._raw_coeffs(a)) for a in range(q)] if small else None)

        if small:
            exp, log = self._build_exp_log()
        else:
            exp = log = None
        self._exp, self._log = exp, log

        if exp is not None:
            qm1 = q - 1

            def mul(a, b):
                if a == 0 or b == 0:
                    return 0
                return exp[(log[a] + log[b]) % qm1]

            def inv(a):
                if a == 0:
                    raise ZeroDivisionError("inverse of zero")
                return exp[(qm1 - log[a]) % qm1]

            def pw(a, e):
                if a == 0:
                    if e == 0:
                        return 1
                    if e < 0:
                        raise ZeroDivisionError("inverse of zero")
                    return 0
                return exp[(log[a] * e) % qm1]
        else:
            mul = self._raw_mul
            inv = self._raw_inv

            def pw(a, e):
                if e < 0:
                    a, e = inv(a), -e
                result = 1
                base = a
                while e:
                    if e & 1:
                        result = mul(result, base)
                    base = mul(base, base)
                    e >>= 1
                return result

        if p == 2:
            def add(a, b):
                return a ^ b

            def neg(a):
                return a

            def sub(a, b):
                return a ^ b
        else:
            coeff = self._coeff_table
            if coeff is not None and q <= _ADD_TABLE_LIMIT:
                table = [0] * (q * q)
                for a in range(q):
                    ca = coeff[a]
                    row = a * q
                    for b in range(q):
                        cb = coeff[b]
                        table[row + b] = self._raw_encode(
                            [(x + y) % p for x, y in zip(ca, cb)])

                def add(a, b):
                    return table[a * q + b]
            elif coeff is not None:
                def add(a, b):
                    return self._raw_encode(
                        [(x + y) % p for x, y in zip(coeff[a], coeff[b])])
            else:
                def add(a, b):
                    return self._raw_encode(
                        [(x + y) % p
                         for x, y in zip(self._raw_coeffs(a), self._raw_coeffs(b))])

            neg_table = [
                self._raw_encode([(-c) % p for c in self._raw_coeffs(a)])
                for a in range(q)] if small else None
            if neg_table is not None:
                def neg(a):
                    return neg_table[a]
            else:
                def neg(a):
                    return self._raw_encode(
                        [(-c) % p for c in self._raw_coeffs(a)])

            def sub(a, b):
                return add(a, neg(b))

        self.add, self.sub, self.neg, self.mul, self.inv, self.pow = (
            add, sub, neg, mul, inv, pw)

    def _build_exp_log(self):
        """Exp/log tables for a multiplicative generator, found by scanning
        codes upward and keeping the first element whose powers cycle through
        the whole multiplicative group."""
        q = self.q
        qm1 = q - 1
        for cand in range(2, q):
            exp = [1]
            x = cand
            while x != 1 and len(exp) <= qm1:
                exp.append(x)
                x = self._raw_mul(x, cand)
            if len(exp) == qm1:
                log = [0] * q
                for k, v in enumerate(exp):
                    log[v] = k
                return exp, log
        raise ArithmeticError("no multiplicative generator found")  # unreachable

    # element codecs -------------------------------------------------------

    def coeffs(self, a: int):
        """Coefficient vector (length f, lowest degree first) of element a."""
        if not 0 <= a < self.q:
            raise ValueError(f"element code {a} out of range for {self!r}")
        if self._coeff_table is not None:
            return list(self._coeff_table[a])
        return self._raw_coeffs(a)

    def element(self, coeffs) -> int:
        """Int code of the element with the given coefficient vector."""
        coeffs = list(coeffs)
        if len(coeffs) != self.f:
            raise ValueError(
                f"expected {self.f} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if not isinstance(c, int) or not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} not a residue mod {self.p}")
        return self._raw_encode(coeffs)

    def elements(self):
        return range(self.q)

    # dunder ---------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and self.p == other.p and self.f == other.f
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def __repr__(self):
        if self.f == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.f})"


def make_field(p: int, f: int = 1, modulus=None) -> FieldSpec:
    """Construct GF(p^f).

    The modulus may be supplied as a coefficient list (length f + 1, lowest
    degree first, monic); it is verified irreducible by exhaustive trial
    division.  Without one, the lexicographically smallest monic irreducible
    polynomial is selected, so the same (p, f) always yields the same field.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not isinstance(f, int) or f < 1:
        raise ValueError(f"f must be a positive integer, got {f}")
    if p ** f > _ORDER_LIMIT:
        raise ValueError(f"field order {p}^{f} exceeds the 2^31 guard")
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError("modulus coefficients must be residues mod p")
        if f == 1:
            if modulus != (0, 1):
                raise ValueError("prime-field modulus must be the polynomial t")
        elif not _poly_is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible")
    else:
        modulus = (0, 1) if f == 1 else _lex_min_irreducible(p, f)
    return FieldSpec(p, f, modulus)


def mult_order(field: FieldSpec, a: int) -> int:
    """Order of a in the multiplicative group; a must be nonzero."""
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    mul = field.mul
    x = a
    d = 1
    while x != 1:
        x = mul(x, a)
        d += 1
        if d > field.q:
            raise ArithmeticError("order search did not terminate")
    return d


def discrete_log(field: FieldSpec, base: int, target: int, order: int) -> int:
    """Least t >= 0 with base^t == target, scanning t < order."""
    x = 1
    for t in range(order):
        if x == target:
            return t
        x = field.mul(x, base)
    raise ValueError("target is not a power of the base")


def extend_field(field: FieldSpec, e: int):
    """Build GF(q^e) over GF(q) with an explicit embedding.

    Returns (ext, table) where table[a] is the image in ext of the base
    element coded a.  The embedding sends the base field's generator t to
    the first root (in code order) of the base modulus inside ext, which
    forces a ring homomorphism fixing the prime field.  e = 1 returns the
    field itself with the identity table.
    """
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"extension degree must be a positive integer, got {e}")
    if e == 1:
        return field, tuple(range(field.q))
    ext = make_field(field.p, field.f * e)
    if field.f == 1:
        # constants keep their codes in the base-p encoding
        return ext, tuple(range(field.p))
    root = None
    for alpha in range(ext.q):
        acc = 0
        for c in reversed(field.modulus):  # Horner; prime-field constants embed as themselves
            acc = ext.add(ext.mul(acc, alpha), c)
        if acc == 0:
            root = alpha
            break
    if root is None:
        raise ArithmeticError("base modulus has no root in the extension")
    table = []
    for a in range(field.q):
        acc = 0
        for c in reversed(field.coeffs(a)):
            acc = ext.add(ext.mul(acc, root), c)
        table.append(acc)
    return ext, tuple(table)
