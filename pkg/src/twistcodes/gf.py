"""Exact arithmetic in small finite fields GF(p^m).

Elements are stored in the polynomial basis relative to a fixed monic
irreducible modulus of degree m over GF(p).  Every element also has an
integer index in [0, q): the little-endian base-p encoding of its
coordinate tuple.  For q <= 256 the field precomputes full operation
tables (python lists for scalar work, numpy arrays for the matrix and
distance kernels in :mod:`twistcodes.codes`).

Fields are immutable after construction and safe to share; all element
operations are pure.
"""

from __future__ import annotations

import random
from math import gcd
from typing import Optional, Sequence, Union

import numpy as np

from .errors import (
    DegreeMismatch,
    FieldMismatch,
    NonPrime,
    ReducibleModulus,
    ZeroTarget,
)

MAX_PRIME = 1 << 16
TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for p <= 2^16."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over GF(p) as plain int lists (little-endian, trimmed)
# Only used for modulus handling and element arithmetic; general GF(q)[x]
# work lives in twistcodes.poly.


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _rem_mod_p(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    # mod is monic
    r = list(a)
    dm = len(mod) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        shift = len(r) - 1 - dm
        if lead:
            for i in range(dm + 1):
                r[shift + i] = (r[shift + i] - lead * mod[i]) % p
        r.pop()
        _trim(r)
    return r


def _pow_mod_p(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    b = _rem_mod_p(base, mod, p)
    while e:
        if e & 1:
            result = _rem_mod_p(_mul_mod_p(result, b, p), mod, p)
        b = _rem_mod_p(_mul_mod_p(b, b, p), mod, p)
        e >>= 1
    return result


def _gcd_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # _rem_mod_p needs a monic divisor; scaling b only changes units
        a, b = b, _rem_mod_p(a, _make_monic(b, p), p)
    return _make_monic(a, p)


def _make_monic(c: Sequence[int], p: int) -> list[int]:
    c = _trim(list(c))
    if not c:
        return c
    lead = c[-1]
    if lead == 1:
        return c
    inv = pow(lead, p - 2, p)
    return [(x * inv) % p for x in c]


def _inv_mod_modulus(c: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Inverse of c modulo the monic polynomial mod, over GF(p)."""
    # extended Euclid on (c, mod)
    r0, r1 = list(mod), _trim(list(c))
    s0, s1 = [], [1]
    while r1:
        # divide r0 by r1
        q, r = _divmod_mod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub_mod_p(s0, _mul_mod_p(q, s1, p), p)
    # r0 = gcd, must be a nonzero constant for invertible c
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    scale = pow(r0[0], p - 2, p)
    return _trim([(x * scale) % p for x in s0])


def _sub_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _trim(out)


def _divmod_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    r = list(a)
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        coef = (r[-1] * inv_lead) % p
        shift = len(r) - 1 - db
        q[shift] = coef
        if coef:
            for i in range(db + 1):
                r[shift + i] = (r[shift + i] - coef * b[i]) % p
        _trim(r)
        if not r:
            break
        while len(r) - 1 >= db and r[-1] == 0:
            r.pop()
    return _trim(q), _trim(r)


def _is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Irreducibility of monic f over GF(p) via the Frobenius power test."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # x^(p^n) == x mod f
    h = list(x)
    powers = {}
    for i in range(1, n + 1):
        h = _pow_mod_p(h, p, f, p)
        powers[i] = list(h)
    if _trim(_sub_mod_p(powers[n], x, p)):
        return False
    for t in prime_factors(n):
        g = _gcd_mod_p(_sub_mod_p(powers[n // t], x, p), f, p)
        if len(g) != 1:
            return False
    return True


def _find_irreducible(p: int, m: int, seed: int) -> tuple[int, ...]:
    """Seeded random search for a monic irreducible of degree m over GF(p)."""
    rng = random.Random(seed * 0x9E3779B1 + p * 1315423911 + m)
    while True:
        coeffs = [rng.randrange(p) for _ in range(m)] + [1]
        if coeffs[0] == 0:
            continue  # x | f, never irreducible for m > 1
        if _is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)


# ---------------------------------------------------------------------------


class FieldElem:
    """An element of a FieldSpec, identified by its index in [0, q)."""

    __slots__ = ("field", "index")

    def __init__(self, field: "FieldSpec", index: int):
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Polynomial-basis coordinates, little-endian, length m."""
        p, m = self.field.p, self.field.m
        i = self.index
        out = []
        for _ in range(m):
            out.append(i % p)
            i //= p
        return tuple(out)

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem) or self.field != other.field:
            raise FieldMismatch("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return self.field.from_index(self.field.add_index(self.index, other.index))

    def __sub__(self, other):
        self._check(other)
        return self.field.from_index(
            self.field.add_index(self.index, self.field.neg_index(other.index))
        )

    def __neg__(self):
        return self.field.from_index(self.field.neg_index(self.index))

    def __mul__(self, other):
        self._check(other)
        return self.field.from_index(self.field.mul_index(self.index, other.index))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def inverse(self) -> "FieldElem":
        if self.index == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.field.from_index(self.field.inv_index(self.index))

    def __pow__(self, e: int) -> "FieldElem":
        F = self.field
        if e < 0:
            return self.inverse() ** (-e)
        result = F.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, k: int = 1) -> "FieldElem":
        """x -> x^(p^k); k is reduced mod m."""
        k %= self.field.m
        idx = self.index
        for _ in range(k):
            idx = self.field.frob_index(idx)
        return self.field.from_index(idx)

    def is_zero(self) -> bool:
        return self.index == 0

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElem)
            and self.field == other.field
            and self.index == other.index
        )

    def __hash__(self):
        return hash((self.field, self.index))

    def ser(self) -> Union[int, list[int]]:
        """Serialized form: single residue for prime fields, else coordinates."""
        if self.field.m == 1:
            return self.index
        return list(self.coeffs)

    def __str__(self):
        if self.field.m == 1:
            return str(self.index)
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"

    def __repr__(self):
        return f"GF({self.field.q}):{self}"


class FieldSpec:
    """GF(p^m) with a fixed monic irreducible modulus of degree m.

    When no modulus is supplied and m > 1, one is found by a seeded random
    search; the chosen modulus is stored on the field (and serialized)
    so runs are reproducible.
    """

    def __init__(
        self,
        p: int,
        m: int = 1,
        modulus: Optional[Sequence[int]] = None,
        seed: int = 0,
    ):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrime(f"p = {p} is not prime")
        if p > MAX_PRIME:
            raise NonPrime(f"p = {p} exceeds the supported bound 2^16")
        if m < 1:
            raise DegreeMismatch("extension degree m must be >= 1")
        self.p = p
        self.m = m
        self.q = p**m
        self.seed = seed
        if modulus is None:
            if m == 1:
                self.modulus = (0, 1)  # implicit: elements are residues mod p
            else:
                self.modulus = _find_irreducible(p, m, seed)
        else:
            mod = [c % p for c in modulus]
            if len(mod) != m + 1 or mod[-1] != 1:
                raise DegreeMismatch(
                    f"modulus must be monic of degree {m}, got {list(modulus)}"
                )
            if m > 1 and not _is_irreducible_mod_p(mod, p):
                raise ReducibleModulus(f"modulus {mod} is reducible over GF({p})")
            self.modulus = tuple(mod)

        self._elems: Optional[list[FieldElem]] = None
        self._add = self._mul = self._neg = self._inv = self._frob = None
        self.np_add = self.np_mul = self.np_neg = self.np_inv = self.np_frob = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}; mod={list(self.modulus)})"

    # -- index-level arithmetic --------------------------------------------

    def _coeffs_of(self, index: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(index % p)
            index //= p
        return out

    def _index_of(self, coeffs: Sequence[int]) -> int:
        idx = 0
        for c in reversed(list(coeffs)[: self.m]):
            idx = idx * self.p + (c % self.p)
        return idx

    def add_index(self, i: int, j: int) -> int:
        if self._add is not None:
            return self._add[i][j]
        if self.m == 1:
            return (i + j) % self.p
        a, b = self._coeffs_of(i), self._coeffs_of(j)
        return self._index_of([(x + y) % self.p for x, y in zip(a, b)])

    def neg_index(self, i: int) -> int:
        if self._neg is not None:
            return self._neg[i]
        if self.m == 1:
            return (-i) % self.p
        return self._index_of([(-c) % self.p for c in self._coeffs_of(i)])

    def mul_index(self, i: int, j: int) -> int:
        if self._mul is not None:
            return self._mul[i][j]
        return self._mul_index_slow(i, j)

    def _mul_index_slow(self, i: int, j: int) -> int:
        if self.m == 1:
            return (i * j) % self.p
        prod = _mul_mod_p(_trim(self._coeffs_of(i)), _trim(self._coeffs_of(j)), self.p)
        red = _rem_mod_p(prod, self.modulus, self.p)
        return self._index_of(red + [0] * (self.m - len(red)))

    def inv_index(self, i: int) -> int:
        if i == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._inv is not None:
            return self._inv[i]
        if self.m == 1:
            return pow(i, self.p - 2, self.p)
        inv = _inv_mod_modulus(_trim(self._coeffs_of(i)), list(self.modulus), self.p)
        return self._index_of(inv + [0] * (self.m - len(inv)))

    def frob_index(self, i: int) -> int:
        """Index of x^p for the element of index i."""
        if self._frob is not None:
            return self._frob[i]
        acc_base, acc = i, 1
        e = self.p
        while e:
            if e & 1:
                acc = self._mul_index_slow(acc, acc_base)
            acc_base = self._mul_index_slow(acc_base, acc_base)
            e >>= 1
        return acc

    def _build_tables(self):
        q, p = self.q, self.p
        mul = [[0] * q for _ in range(q)]
        add = [[0] * q for _ in range(q)]
        if self.m == 1:
            for i in range(q):
                row_a, row_m = add[i], mul[i]
                for j in range(q):
                    row_a[j] = (i + j) % p
                    row_m[j] = (i * j) % p
        else:
            coeff = [self._coeffs_of(i) for i in range(q)]
            for i in range(q):
                ci = coeff[i]
                row_a, row_m = add[i], mul[i]
                for j in range(i, q):
                    s = self._index_of([(x + y) % p for x, y in zip(ci, coeff[j])])
                    row_a[j] = s
                    add[j][i] = s
                    t = self._mul_index_slow(i, j)
                    row_m[j] = t
                    mul[j][i] = t
        neg = [0] * q
        inv = [0] * q
        frob = [0] * q
        for i in range(q):
            neg[i] = (
                (-i) % p
                if self.m == 1
                else self._index_of([(-c) % p for c in self._coeffs_of(i)])
            )
            frob[i] = self._pow_index_tbl(mul, i, p)
            if i:
                inv[i] = self._pow_index_tbl(mul, i, q - 2)
        self._add, self._mul, self._neg, self._inv, self._frob = add, mul, neg, inv, frob
        self.np_add = np.array(add, dtype=np.uint8)
        self.np_mul = np.array(mul, dtype=np.uint8)
        self.np_neg = np.array(neg, dtype=np.uint8)
        self.np_inv = np.array(inv, dtype=np.uint8)
        self.np_frob = np.array(frob, dtype=np.uint8)
        self._elems = [FieldElem(self, i) for i in range(q)]

    @staticmethod
    def _pow_index_tbl(mul: list[list[int]], i: int, e: int) -> int:
        acc, base = 1, i
        while e:
            if e & 1:
                acc = mul[acc][base]
            base = mul[base][base]
            e >>= 1
        return acc

    # -- element constructors ------------------------------------------------

    def from_index(self, i: int) -> FieldElem:
        if not 0 <= i < self.q:
            raise ValueError(f"element index {i} out of range for GF({self.q})")
        if self._elems is not None:
            return self._elems[i]
        return FieldElem(self, i)

    def element(self, x: Union[int, Sequence[int], FieldElem]) -> FieldElem:
        """Coerce x: an int means a prime-subfield value, a sequence means
        polynomial-basis coordinates."""
        if isinstance(x, FieldElem):
            if x.field != self:
                raise FieldMismatch("element belongs to a different field")
            return x
        if isinstance(x, int):
            return self.from_index(x % self.p)
        coeffs = list(x)
        if len(coeffs) > self.m:
            raise DegreeMismatch(
                f"coordinate list of length {len(coeffs)} for extension degree {self.m}"
            )
        coeffs += [0] * (self.m - len(coeffs))
        return self.from_index(self._index_of(coeffs))

    @property
    def zero(self) -> FieldElem:
        return self.from_index(0)

    @property
    def one(self) -> FieldElem:
        return self.from_index(1)

    def elements(self):
        """All q elements in index order."""
        return [self.from_index(i) for i in range(self.q)]

    def units(self):
        """All nonzero elements in index order."""
        return [self.from_index(i) for i in range(1, self.q)]

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "FieldSpec":
        return cls(d["p"], d["m"], d["modulus"])


def field_new(p: int, m: int = 1, modulus=None, seed: int = 0) -> FieldSpec:
    """Construct and validate GF(p^m); see FieldSpec."""
    return FieldSpec(p, m, modulus=modulus, seed=seed)


def GF(q: int, modulus=None, seed: int = 0) -> FieldSpec:
    """GF(q) for a prime power q, factoring q into p^m."""
    for p in prime_factors(q):
        m = 0
        t = q
        while t % p == 0:
            t //= p
            m += 1
        if t != 1:
            raise NonPrime(f"q = {q} is not a prime power")
        return FieldSpec(p, m, modulus=modulus, seed=seed)
    raise NonPrime(f"q = {q} is not a prime power")


def frobenius(x: FieldElem, k: int) -> FieldElem:
    """x^(p^k); module-level alias for FieldElem.frobenius."""
    return x.frobenius(k)


def nth_power_witness(
    field: FieldSpec, target: FieldElem, n: int
) -> Optional[FieldElem]:
    """Some unit a with a^n = target, by exhaustive scan, or None."""
    if target.is_zero():
        raise ZeroTarget("target must be a nonzero field element")
    if n < 1:
        raise ValueError("n must be >= 1")
    for i in range(1, field.q):
        a = field.from_index(i)
        if a**n == target:
            return a
    return None


def norm_image_classes(field: FieldSpec, n: int) -> tuple[int, list[FieldElem]]:
    """Cosets of the n-th powers inside the unit group.

    Returns (count, representatives): count = |F_q^* / (F_q^*)^n|, which
    equals gcd(n, q-1), with one representative per coset in ascending
    element-index order.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    image = {(field.from_index(i) ** n).index for i in range(1, field.q)}
    seen: set[int] = set()
    reps: list[FieldElem] = []
    for i in range(1, field.q):
        if i in seen:
            continue
        reps.append(field.from_index(i))
        seen.update(field.mul_index(i, im) for im in image)
    assert len(reps) == gcd(n, field.q - 1)
    return len(reps), reps
