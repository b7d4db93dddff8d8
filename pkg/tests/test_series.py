import random
from fractions import Fraction

import pytest

from qzeta.errors import BadConstantTerm, ZeroConstantTerm
from qzeta.series import QSeries


def rand_series(rng, trunc, rational=False, unit=False):
    coeffs = [rng.randint(-9, 9) for _ in range(trunc + 1)]
    if rational:
        coeffs = [
            Fraction(c, rng.randint(1, 7)) if rng.random() < 0.5 else c
            for c in coeffs
        ]
    if unit:
        coeffs[0] = rng.choice([1, -1, 2, 3])
    return QSeries(coeffs, trunc)


def test_add_basic():
    a = QSeries([1, 1], 1)
    b = QSeries([0, 2], 1)
    assert (a + b) == QSeries([1, 3], 1)


def test_add_zero_identity():
    a = QSeries([3, -1, 2], 2)
    assert (a + QSeries.zero(2)) == a


def test_add_min_trunc_rule():
    a = QSeries([1, 1, 1], 2)
    b = QSeries([1], 0).pad(1)
    s = a + b
    assert s.trunc == 1 and s.coeffs == [2, 1]


def test_mul_geometric_inverse():
    a = QSeries([1, -1], 1).pad(3)
    b = QSeries([1, 1, 1, 1], 3)
    assert (a * b) == QSeries.one(3)


def test_mul_one_identity():
    a = QSeries([2, 0, -5, 7], 3)
    assert (a * QSeries.one(3)) == a


def test_mul_square():
    a = QSeries([1, 1], 1).pad(2)
    assert (a * a) == QSeries([1, 2, 1], 2)


def test_inv_geometric():
    a = QSeries([1, -1], 1).pad(3)
    assert a.inv() == QSeries([1, 1, 1, 1], 3)


def test_inv_one():
    assert QSeries.one(4).inv() == QSeries.one(4)


def test_inv_two_plus_q():
    # independent check: multiply back and compare with 1
    a = QSeries([2, 1], 1)
    inv = a.inv()
    assert (a * inv) == QSeries.one(1)
    assert inv.coeffs == [Fraction(1, 2), Fraction(-1, 4)]


def test_inv_zero_constant_raises():
    with pytest.raises(ZeroConstantTerm):
        QSeries([0, 1], 1).inv()


def test_exp_zero():
    assert QSeries.zero(5).exp() == QSeries.one(5)


def test_log_one():
    assert QSeries.one(5).log() == QSeries.zero(5)


def test_exp_q():
    e = QSeries([0, 1], 1).pad(3).exp()
    assert e.coeffs == [1, 1, Fraction(1, 2), Fraction(1, 6)]


def test_exp_log_preconditions():
    with pytest.raises(BadConstantTerm):
        QSeries.one(3).exp()
    with pytest.raises(BadConstantTerm):
        QSeries.zero(3).log()


def test_is_zero():
    assert QSeries.zero(5).is_zero()
    assert not QSeries.monomial(1, 5, 5).is_zero()
    # q^6 at truncation 5 is dropped entirely
    assert QSeries.monomial(1, 6, 5).is_zero()


def test_is_integral():
    assert QSeries([1, 2, 3], 2).is_integral()
    assert QSeries([1, Fraction(4, 2)], 1).is_integral()
    assert not QSeries([1, Fraction(1, 2)], 1).is_integral()


def test_ring_axioms_random():
    rng = random.Random(101)
    for _ in range(30):
        n = rng.randint(0, 12)
        a = rand_series(rng, n, rational=True)
        b = rand_series(rng, n, rational=True)
        c = rand_series(rng, n, rational=True)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_mul_inv_random():
    rng = random.Random(202)
    for _ in range(20):
        n = rng.randint(0, 15)
        a = rand_series(rng, n, rational=True, unit=True)
        assert a * a.inv() == QSeries.one(n)


def test_exp_log_roundtrip_random():
    rng = random.Random(303)
    for _ in range(15):
        n = rng.randint(1, 12)
        a = rand_series(rng, n, rational=True)
        a = QSeries([0] + a.coeffs[1:], n)
        assert a.exp().log() == a
        u = QSeries([1] + a.coeffs[1:], n)
        assert u.log().exp() == u


def test_pow_and_shift():
    a = QSeries([1, 1], 1).pad(4)
    assert a**0 == QSeries.one(4)
    assert a**3 == QSeries([1, 3, 3, 1, 0], 4)
    assert QSeries([1, 2], 1).shift(0).coeffs == [1, 2]
    assert QSeries([1, 2, 3], 2).shift(2).coeffs == [0, 0, 1]


def test_one_minus_q_pow_negative():
    geo2 = QSeries.one_minus_q_pow(-2, 4)
    assert geo2.coeffs == [1, 2, 3, 4, 5]
    assert (geo2 * QSeries.one_minus_q_pow(2, 4)) == QSeries.one(4)
