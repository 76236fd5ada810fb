import random

import pytest

from twistcodes.errors import ConstantPolynomial, NotSquarefree, ZeroLambda
from twistcodes.gf import GF, FieldSpec
from twistcodes.poly import (
    Poly,
    factor_xn_minus_lambda,
    is_irreducible,
    primitive_idempotents,
)

F2 = GF(2)
F3 = GF(3)
F4 = GF(4)
F5 = GF(5)
F7 = GF(7)
F9 = FieldSpec(3, 2, modulus=[1, 0, 1])


def rand_poly(F, deg, rng):
    return Poly(F, [F.from_index(rng.randrange(F.q)) for _ in range(deg + 1)])


def test_normalization():
    assert Poly.from_ints(F3, [0, 0, 0]).is_zero()
    assert Poly.from_ints(F3, [1, 2, 0]).degree == 1
    assert Poly.zero(F3).degree == -1


def test_gcd_frozen():
    # x^2 - 1 and x - 1 share the root 1; monic gcd is x + 2 over GF(3)
    g = Poly.from_ints(F3, [2, 0, 1]).gcd(Poly.from_ints(F3, [2, 1]))
    assert g == Poly.from_ints(F3, [2, 1])


def test_divmod_frozen():
    # remainder of x^9 - 4 at x = 1 is 1 - 4 = -3 = 2 mod 5
    f = Poly.xn_minus(F5, 9, F5.element(4))
    q, r = divmod(f, Poly.from_ints(F5, [4, 1]))
    assert q.degree == 8
    assert r == Poly.from_ints(F5, [2])
    assert f.eval(F5.one) == F5.element(2)
    assert q * Poly.from_ints(F5, [4, 1]) + r == f


def test_divmod_random_roundtrip():
    rng = random.Random(3)
    for F in (F3, F5, F9, F4):
        for _ in range(50):
            a = rand_poly(F, rng.randrange(0, 9), rng)
            b = rand_poly(F, rng.randrange(0, 5), rng)
            if b.is_zero():
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.degree < b.degree


def test_xgcd_bezout():
    rng = random.Random(4)
    for F in (F3, F5, F9):
        for _ in range(40):
            a = rand_poly(F, rng.randrange(0, 7), rng)
            b = rand_poly(F, rng.randrange(0, 7), rng)
            if a.is_zero() and b.is_zero():
                continue
            d, u, v = a.xgcd(b)
            assert u * a + v * b == d
            assert d.is_monic
    # coprime pair: Bezout identity gives 1
    d, u, v = Poly.from_ints(F3, [1, 0, 1]).xgcd(Poly.from_ints(F3, [1, 1]))
    assert d.is_one()
    assert u * Poly.from_ints(F3, [1, 0, 1]) + v * Poly.from_ints(F3, [1, 1]) == d


def test_is_irreducible_frozen():
    assert is_irreducible(Poly.from_ints(F3, [1, 0, 1]))  # x^2+1, no root mod 3
    assert not is_irreducible(Poly.from_ints(F3, [2, 0, 1]))  # (x-1)(x+1)
    assert is_irreducible(Poly.from_ints(F7, [4, 1]))  # linear
    with pytest.raises(ConstantPolynomial):
        is_irreducible(Poly.from_ints(F3, [2]))


def test_is_irreducible_rejects_repeated_factors():
    assert not is_irreducible(Poly.from_ints(F3, [1, 2, 1]))  # (x+1)^2
    assert not is_irreducible(Poly.from_ints(F3, [0, 0, 1, 1]))  # x^2 (x+1)
    assert is_irreducible(Poly.from_ints(F3, [2, 2, 0, 1]))  # x^3 - x - 1, no root


def test_is_irreducible_against_root_scan():
    # degree 2: irreducible over GF(q) iff no root in GF(q)
    rng = random.Random(5)
    for F in (F3, F5, F7, F9):
        for _ in range(40):
            f = rand_poly(F, 2, rng)
            if f.degree != 2:
                continue
            has_root = any(f.eval(F.from_index(i)).is_zero() for i in range(F.q))
            assert is_irreducible(f) == (not has_root)


def test_factor_preconditions():
    with pytest.raises(NotSquarefree):
        factor_xn_minus_lambda(F3, 9, F3.one)
    with pytest.raises(ZeroLambda):
        factor_xn_minus_lambda(F3, 10, F3.zero)


@pytest.mark.parametrize(
    "F,n,lam,degrees",
    [
        (F3, 10, 2, [2, 4, 4]),
        (F5, 1, 4, [1]),
        (F5, 9, 4, [1, 2, 6]),
        (F5, 21, 4, [1, 2, 6, 6, 6]),
        (F7, 19, 6, [1, 3, 3, 3, 3, 3, 3]),
        (F2, 15, 1, [1, 2, 4, 4, 4]),
        (F9, 8, 2, [2, 2, 2, 2]),
        (F4, 5, 1, [1, 2, 2]),
    ],
)
def test_factor_xn_minus_lambda(F, n, lam, degrees):
    lam = F.element(lam)
    factors = factor_xn_minus_lambda(F, n, lam)
    assert sorted(f.degree for f in factors) == degrees
    prod = Poly.one(F)
    for f in factors:
        assert f.is_monic
        assert is_irreducible(f)
        prod = prod * f
    assert prod == Poly.xn_minus(F, n, lam)
    # canonical order and determinism
    assert factors == sorted(factors, key=Poly.key)
    assert factors == factor_xn_minus_lambda(F, n, lam)


def test_n_one_factor():
    assert factor_xn_minus_lambda(F5, 1, F5.element(4)) == [Poly.from_ints(F5, [1, 1])]


def test_primitive_idempotents_irreducible_case():
    # x^2 - 2 = x^2 + 1 is irreducible over GF(3): single idempotent 1
    assert primitive_idempotents(F3, 2, F3.element(2)) == [Poly.one(F3)]


@pytest.mark.parametrize(
    "F,n,lam",
    [(F3, 10, 2), (F5, 9, 4), (F7, 19, 6), (F9, 8, 2), (F4, 15, 1), (F2, 15, 1)],
)
def test_primitive_idempotents_crt_identities(F, n, lam):
    lam = F.element(lam)
    M = Poly.xn_minus(F, n, lam)
    es = primitive_idempotents(F, n, lam)
    total = Poly.zero(F)
    for i, e in enumerate(es):
        assert e.degree < n
        assert ((e * e - e) % M).is_zero()
        for j, e2 in enumerate(es):
            if i != j:
                assert ((e * e2) % M).is_zero()
        total = total + e
    assert (total % M).is_one()


def test_idempotent_subset_matches_reference_element():
    # one subset of the primitive idempotents of F_5[x]/(x^9 - 4) sums to
    # the bundled [9,2,6] generator
    target = Poly.from_ints(F5, [3, 4, 1, 2, 1, 4, 3, 4, 1])
    es = primitive_idempotents(F5, 9, F5.element(4))
    sums = []
    for mask in range(1 << len(es)):
        s = Poly.zero(F5)
        for i, e in enumerate(es):
            if mask >> i & 1:
                s = s + e
        sums.append(s)
    assert target in sums


def test_idempotent_subset_sums_are_idempotent():
    F, n, lam = F5, 21, F5.element(4)
    M = Poly.xn_minus(F, n, lam)
    es = primitive_idempotents(F, n, lam)
    rng = random.Random(6)
    for _ in range(12):
        mask = rng.randrange(1 << len(es))
        s = Poly.zero(F)
        for i, e in enumerate(es):
            if mask >> i & 1:
                s = s + e
        assert ((s * s - s) % M).is_zero()


def test_pow_mod():
    f = Poly.from_ints(F5, [1, 0, 1])
    x = Poly.x(F5)
    big = x.pow_mod(5**6, f)
    # match naive repeated squaring through the generic operator path
    ref = Poly.one(F5)
    b = x % f
    e = 5**6
    while e:
        if e & 1:
            ref = (ref * b) % f
        b = (b * b) % f
        e >>= 1
    assert big == ref
