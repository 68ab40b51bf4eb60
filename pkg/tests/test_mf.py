"""Koszul rows, tensor products, and the explicit 2-periodic form."""

import random
from fractions import Fraction

import pytest

from moycalc.poly import Poly
from moycalc.quotient import QuotientRing
from moycalc.mf import (ExplicitMF, KoszulMF, KoszulRow, NotAFactorization,
                        OddShift, SparseMat, koszul_new, verify_factorization)

X1, X2, X3 = ("x", 1), ("x", 2), ("x", 3)
Y1 = ("y", 1)


def v(var, e=1):
    return Poly.var(var, e)


def test_row_shift_and_flip():
    row = KoszulRow(v(X1, 3), v(X1), deg_a=6, deg_b=2)
    assert row.internal_shift == -2
    flipped = row.flipped()
    assert flipped.a == -v(X1)
    assert flipped.b == -v(X1, 3)
    assert flipped.deg_a == 2 and flipped.deg_b == 6
    assert flipped.internal_shift == 2

    with pytest.raises(OddShift):
        KoszulRow(Poly(), Poly(), deg_a=1, deg_b=2)


def test_two_row_tensor_block_matrices():
    a1, b1 = v(X1, 2), v(X1) * 2
    a2, b2 = v(X2, 2), v(X2)
    m = (koszul_new(a1, b1, deg_a=4, deg_b=2)
         @ koszul_new(a2, b2, deg_a=4, deg_b=2))
    e = m.to_explicit()
    assert e.gens0 == (0, -2)
    assert e.gens1 == (-1, -1)
    assert e.d0.to_lists() == [[a1, -b2], [a2, b1]]
    assert e.d1.to_lists() == [[b1, b2], [-a2, a1]]
    assert verify_factorization(e) == a1 * b1 + a2 * b2


def test_potential_is_additive_under_tensor():
    m = koszul_new(v(X1, 3), v(X1))
    n = koszul_new(v(X2, 2), v(X2, 2))
    assert (m @ n).potential() == m.potential() + n.potential()


def test_koszul_new_normal_forms_entries():
    base = QuotientRing().with_rule(X1, 2, Poly())
    m = koszul_new(v(X1, 3), v(X1), base=base, deg_a=6, deg_b=2)
    assert m.rows[0].a.is_zero()
    assert m.rows[0].deg_a == 6


def test_translate_is_an_involution():
    m = koszul_new(v(X1, 2), v(X1)) @ koszul_new(v(X2, 4), v(X2))
    e = m.to_explicit()
    t = e.translate()
    assert t.gens0 == e.gens1 and t.d0 == -e.d1
    assert t.translate() == e


def test_row_translation_identity():
    # K(a; b)<1> equals K(-b; -a){(deg b - deg a)/2} slot for slot
    a, b = v(X1, 3), v(X1) * 2
    lhs = koszul_new(a, b, deg_a=6, deg_b=2).to_explicit().translate()
    rhs = koszul_new(-b, -a, deg_a=2, deg_b=6).shifted(-2).to_explicit()
    assert lhs == rhs


def _random_row(rng):
    var = random.Random(rng.random()).choice((X1, X2, X3, Y1))
    e = rng.randint(1, 3)
    c = Fraction(rng.choice((1, 2, -1, 3)))
    a = v(var, e) * c
    b = v(var, rng.randint(1, 2))
    return koszul_new(a, b)


def _identity(n, sign=1):
    one = Poly.const(sign)
    return SparseMat(n, n, {(i, i): one for i in range(n)})


def test_commutativity_holds_up_to_conjugation():
    rng = random.Random(11)
    for _ in range(10):
        m, n = _random_row(rng), _random_row(rng)
        mn = (m @ n).to_explicit()
        nm = (n @ m).to_explicit()
        assert sorted(mn.gens0) == sorted(nm.gens0)
        # conjugating isomorphism: diag(1, -1) on slot 0, swap on slot 1
        f0 = SparseMat(2, 2, {(0, 0): Poly.const(1),
                              (1, 1): Poly.const(-1)})
        f1 = SparseMat(2, 2, {(0, 1): Poly.const(1),
                              (1, 0): Poly.const(1)})
        assert (f1 @ mn.d0).entries == (nm.d0 @ f0).entries
        assert (f0 @ mn.d1).entries == (nm.d1 @ f1).entries


def test_tensor_is_strictly_associative_in_explicit_form():
    rng = random.Random(23)
    for _ in range(6):
        l, m, n = _random_row(rng), _random_row(rng), _random_row(rng)
        assert ((l @ m) @ n).to_explicit() == (l @ (m @ n)).to_explicit()


def test_verify_rejects_offdiagonal_square():
    d0 = SparseMat(1, 1, {(0, 0): v(X1)})
    d1 = SparseMat(1, 1, {(0, 0): v(X2)})
    e = ExplicitMF([0], [0], d0, d1)
    with pytest.raises(NotAFactorization):
        # x1*x2 is fine as a scalar, but the degree check needs gens
        broken = ExplicitMF([0, 0], [0, 0],
                            SparseMat(2, 2, {(0, 0): v(X1), (1, 0): v(X2)}),
                            SparseMat(2, 2, {(0, 0): v(X1), (1, 1): v(X1)}))
        verify_factorization(broken)
    assert verify_factorization(e) == v(X1) * v(X2)


def test_verify_rejects_inhomogeneous_entries():
    d0 = SparseMat(1, 1, {(0, 0): v(X1) + v(X1, 2)})
    d1 = SparseMat(1, 1, {(0, 0): Poly()})
    with pytest.raises(NotAFactorization):
        verify_factorization(ExplicitMF([0], [0], d0, d1))


def test_flip_row_preserves_explicit_class():
    m = koszul_new(v(X1, 3), v(X1) * 2, deg_a=6, deg_b=2)
    f = m.flip_row(0)
    assert f.shift == -2 and f.parity == 1
    assert f.to_explicit() == m.to_explicit()
