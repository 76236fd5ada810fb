"""The twisted group algebra F_q^gamma C_n for the wrap cocycle gamma_lam.

The algebra has basis gbar^0, ..., gbar^(n-1) with gbar^i * gbar^j equal
to gbar^(i+j) when i+j < n and lam * gbar^(i+j-n) otherwise, so that
gbar^n = lam * 1.  Elements are dense length-n coefficient tuples.  The
module also provides the classical involution, the coefficientwise
Frobenius twist, the k-Galois form, equivalence witnesses between two
wrap cocycles, and the induced weight-preserving isometry, plus a
validator for arbitrary cocycle tables on C_n.

Contexts and elements are immutable; everything here is pure.
"""

from __future__ import annotations

from typing import Optional, Sequence, Union

from .errors import (
    CtxMismatch,
    ExponentOutOfRange,
    InvalidWitness,
    InvolutionUndefined,
    LengthMismatch,
    ZeroLambda,
)
from .gf import FieldElem, FieldSpec, nth_power_witness

MAX_N = 255


class AlgebraCtx:
    """F_q^{gamma_lam} C_n: the field, the group order, and the wrap unit."""

    def __init__(self, field: FieldSpec, n: int, lam: Union[FieldElem, int, Sequence[int]]):
        lam = field.element(lam)
        if lam.is_zero():
            raise ZeroLambda("the wrap constant must be a unit")
        if not 1 <= n <= MAX_N:
            raise ValueError(f"group order n = {n} outside supported range 1..{MAX_N}")
        self.field = field
        self.n = n
        self.lam = lam
        if n > 1:
            # sanity: gbar^n = lam * 1, walked one basis multiplication at a time
            coef, exp = field.one, 0
            for _ in range(n):
                coef = coef * self.gamma(exp, 1)
                exp = (exp + 1) % n
            assert exp == 0 and coef == lam, "wrap cocycle failed gbar^n = lam"

    def gamma(self, i: int, j: int) -> FieldElem:
        """The wrap cocycle: lam when i+j >= n, else 1."""
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ExponentOutOfRange(f"exponents ({i},{j}) outside 0..{self.n - 1}")
        return self.lam if i + j >= self.n else self.field.one

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraCtx)
            and self.field == other.field
            and self.n == other.n
            and self.lam == other.lam
        )

    def __hash__(self):
        return hash((self.field, self.n, self.lam))

    def __repr__(self):
        return f"AlgebraCtx(GF({self.field.q}), n={self.n}, lam={self.lam})"

    # -- element constructors -------------------------------------------------

    def elem(self, coeffs) -> "AlgElem":
        """Element from a coefficient sequence (index i = gbar^i), padded
        with zeros up to length n.  Entries may be FieldElem, prime-subfield
        ints, or coordinate lists."""
        cs = [self.field.element(c) for c in coeffs]
        if len(cs) > self.n:
            raise LengthMismatch(f"{len(cs)} coefficients for n = {self.n}")
        cs += [self.field.zero] * (self.n - len(cs))
        return AlgElem(self, tuple(cs))

    def elem_from_dict(self, terms: dict[int, int]) -> "AlgElem":
        cs = [self.field.zero] * self.n
        for i, c in terms.items():
            cs[i] = self.field.element(c)
        return AlgElem(self, tuple(cs))

    @property
    def zero(self) -> "AlgElem":
        return self.elem([])

    @property
    def one(self) -> "AlgElem":
        return self.elem([1])

    def basis(self, i: int) -> "AlgElem":
        """gbar^i."""
        if not 0 <= i < self.n:
            raise ExponentOutOfRange(f"basis exponent {i} outside 0..{self.n - 1}")
        cs = [self.field.zero] * self.n
        cs[i] = self.field.one
        return AlgElem(self, tuple(cs))

    @property
    def gbar(self) -> "AlgElem":
        """The image of the group generator: gbar^1 for n > 1; for n = 1
        the quotient relation gbar = lam * 1 takes over.  Multiplication by
        this element is exactly the lam-twisted cyclic shift."""
        if self.n == 1:
            return self.elem([self.lam])
        return self.basis(1)


class AlgElem:
    """An element sum_i c_i gbar^i of a twisted group algebra."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AlgebraCtx, coeffs: tuple[FieldElem, ...]):
        assert len(coeffs) == ctx.n
        self.ctx = ctx
        self.coeffs = coeffs

    def _check(self, other: "AlgElem"):
        if not isinstance(other, AlgElem) or other.ctx != self.ctx:
            raise CtxMismatch("elements of different twisted group algebras")

    def __add__(self, other):
        self._check(other)
        return AlgElem(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return AlgElem(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgElem(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            return AlgElem(self.ctx, tuple(c * other for c in self.coeffs))
        self._check(other)
        return elem_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, FieldElem):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, AlgElem)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_idempotent(self) -> bool:
        return elem_mul(self, self) == self

    def weight(self) -> int:
        """Hamming weight of the coefficient sequence."""
        return sum(1 for c in self.coeffs if not c.is_zero())

    def star(self) -> "AlgElem":
        return involution_star(self)

    def ser(self) -> list:
        return [c.ser() for c in self.coeffs]

    def __str__(self):
        terms = []
        for i in range(self.ctx.n - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs)
            else:
                g = "ḡ" if i == 1 else f"ḡ^{i}"
                terms.append(g if cs == "1" else f"{cs}{g}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"<{self} in {self.ctx!r}>"


def elem_mul(a: AlgElem, b: AlgElem) -> AlgElem:
    """Twisted cyclic convolution: products past gbar^(n-1) wrap with a
    factor of lam."""
    if a.ctx != b.ctx:
        raise CtxMismatch("elements of different twisted group algebras")
    ctx = a.ctx
    F = ctx.field
    n = ctx.n
    lam_idx = ctx.lam.index
    out = [0] * n
    ac = [c.index for c in a.coeffs]
    bc = [c.index for c in b.coeffs]
    for i, ai in enumerate(ac):
        if ai == 0:
            continue
        for j, bj in enumerate(bc):
            if bj == 0:
                continue
            t = F.mul_index(ai, bj)
            k = i + j
            if k >= n:
                k -= n
                t = F.mul_index(t, lam_idx)
            out[k] = F.add_index(out[k], t)
    return AlgElem(ctx, tuple(F.from_index(i) for i in out))


def involution_star(a: AlgElem) -> AlgElem:
    """The classical involution sum c_i gbar^i -> sum c_i (gbar^i)^(-1).

    Since (gbar^i)^(-1) = lam^(-1) gbar^(n-i) for i >= 1, the coefficient
    at n-i becomes lam^(-1) c_i.  Only defined when lam^2 = 1; otherwise
    the map would fail to be an involution.
    """
    ctx = a.ctx
    lam = ctx.lam
    if lam * lam != ctx.field.one:
        raise InvolutionUndefined(
            f"classical involution needs lam^2 = 1; lam = {lam} over GF({ctx.field.q})"
        )
    lam_inv = lam.inverse()
    n = ctx.n
    out = [ctx.field.zero] * n
    out[0] = a.coeffs[0]
    for i in range(1, n):
        out[n - i] = lam_inv * a.coeffs[i]
    return AlgElem(ctx, tuple(out))


def frobenius_twist(a: AlgElem, k: int) -> AlgElem:
    """Apply x -> x^(p^k) to every coefficient."""
    if not 0 <= k < a.ctx.field.m:
        raise ExponentOutOfRange(f"Galois parameter k = {k} outside 0..{a.ctx.field.m - 1}")
    if k == 0:
        return a
    return AlgElem(a.ctx, tuple(c.frobenius(k) for c in a.coeffs))


def k_galois_form(a: AlgElem, b: AlgElem, k: int) -> FieldElem:
    """[a, b]_k = sum_i a_i * b_i^(p^k); k = 0 is the Euclidean inner
    product."""
    if a.ctx != b.ctx:
        raise CtxMismatch("elements of different twisted group algebras")
    if not 0 <= k < a.ctx.field.m:
        raise ExponentOutOfRange(f"Galois parameter k = {k} outside 0..{a.ctx.field.m - 1}")
    acc = a.ctx.field.zero
    for x, y in zip(a.coeffs, b.coeffs):
        acc = acc + x * y.frobenius(k)
    return acc


def coeff_identity(a: AlgElem) -> FieldElem:
    """The coefficient of gbar^0; for lam^2 = 1 it satisfies
    coeff_identity(a * star(frobenius_twist(b, k))) = [a, b]_k."""
    return a.coeffs[0]


class CocycleTable:
    """An explicit n x n table of cocycle values gamma(g^i, g^j).

    Entries must be nonzero and the table normalized (row 0 and column 0
    all ones).  Used only for validating the 2-cocycle identity; algebra
    construction is restricted to the wrap cocycles.
    """

    def __init__(self, field: FieldSpec, values: Sequence[Sequence[FieldElem]]):
        n = len(values)
        vals = tuple(tuple(field.element(v) for v in row) for row in values)
        if any(len(row) != n for row in vals):
            raise LengthMismatch("cocycle table must be square")
        for row in vals:
            for v in row:
                if v.is_zero():
                    raise ZeroLambda("cocycle values must be units")
        one = field.one
        if any(vals[0][j] != one for j in range(n)) or any(
            vals[i][0] != one for i in range(n)
        ):
            raise ValueError("cocycle table must be normalized (row/column 0 all ones)")
        self.field = field
        self.n = n
        self.values = vals

    @classmethod
    def from_ctx(cls, ctx: AlgebraCtx) -> "CocycleTable":
        return cls(
            ctx.field,
            [[ctx.gamma(i, j) for j in range(ctx.n)] for i in range(ctx.n)],
        )

    def with_entry(self, i: int, j: int, value: FieldElem) -> "CocycleTable":
        """Copy of the table with one entry replaced (for perturbation tests)."""
        rows = [list(row) for row in self.values]
        rows[i][j] = value
        return CocycleTable(self.field, rows)


def validate_cocycle(table: CocycleTable) -> bool:
    """Check gamma(x,y) gamma(xy,z) = gamma(y,z) gamma(x,yz) over all n^3
    triples of C_n, indices reduced mod n."""
    n = table.n
    v = table.values
    for i in range(n):
        for j in range(n):
            ij = (i + j) % n
            vij = v[i][j]
            row_j = v[j]
            row_ij = v[ij]
            for k in range(n):
                if vij * row_ij[k] != row_j[k] * v[i][(j + k) % n]:
                    return False
    return True


def equivalence_witness(
    field: FieldSpec, n: int, lam: FieldElem, beta: FieldElem
) -> Optional[FieldElem]:
    """A unit a with lam = a^n * beta, or None.

    None means the wrap-cocycle algebras for lam and beta are inequivalent
    and hence not isometric.
    """
    if lam.is_zero() or beta.is_zero():
        raise ZeroLambda("wrap constants must be units")
    return nth_power_witness(field, lam * beta.inverse(), n)


def apply_isometry(a: AlgElem, witness: FieldElem, target: AlgebraCtx) -> AlgElem:
    """Map the lam-algebra to the beta-algebra along a witness of
    lam = witness^n * beta: coefficient c_i goes to c_i * witness^i.

    The map is a ring isomorphism and preserves Hamming weight.
    """
    ctx = a.ctx
    if target.field != ctx.field or target.n != ctx.n:
        raise CtxMismatch("isometry target must share the field and group order")
    if witness**ctx.n * target.lam != ctx.lam:
        raise InvalidWitness(
            f"witness {witness} does not satisfy lam = a^{ctx.n} * beta"
        )
    out = []
    scale = ctx.field.one
    for c in a.coeffs:
        out.append(c * scale)
        scale = scale * witness
    return AlgElem(target, tuple(out))
