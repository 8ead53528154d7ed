"""Cyclotomic coefficient arithmetic."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gsvkit.cyclo import Cyclo, CyclotomicField, cyclotomic_polynomial


def frac(num, den=1):
    return Fraction(num, den)


# known cyclotomic polynomials, low degree first
KNOWN = {
    1: [-1, 1],
    2: [1, 1],
    3: [1, 1, 1],
    4: [1, 0, 1],
    5: [1, 1, 1, 1, 1],
    6: [1, -1, 1],
    10: [1, -1, 1, -1, 1],
    12: [1, 0, -1, 0, 1],
}


@pytest.mark.parametrize("k,coeffs", sorted(KNOWN.items()))
def test_cyclotomic_polynomial_table(k, coeffs):
    assert list(cyclotomic_polynomial(k)) == [Fraction(c) for c in coeffs]


def test_product_over_divisors_recovers_x_k_minus_1():
    # independent identity: prod_{d | k} Phi_d = x^k - 1
    for k in (5, 6, 12):
        prod = [Fraction(1)]
        for d in range(1, k + 1):
            if k % d:
                continue
            phi = cyclotomic_polynomial(d)
            out = [Fraction(0)] * (len(prod) + len(phi) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi):
                    out[i + j] += a * b
            prod = out
        expected = [Fraction(0)] * (k + 1)
        expected[0], expected[k] = Fraction(-1), Fraction(1)
        assert prod == expected


def test_zeta_is_a_primitive_root():
    K = CyclotomicField(5)
    z = K.zeta()
    assert (z ** 5) == K.one
    for a in range(1, 5):
        assert not (z ** a == K.one)
    assert (K.one + z + z ** 2 + z ** 3 + z ** 4).is_zero()


def test_small_orders_degenerate_to_rationals():
    assert CyclotomicField(1).zeta() == CyclotomicField(1).element(1)
    assert CyclotomicField(2).zeta() == CyclotomicField(2).element(-1)


def test_inverse_and_division():
    K = CyclotomicField(5)
    a = K.element([1, 2, 0, -3])
    assert a * a.inverse() == K.one
    assert (a / a) == K.one
    with pytest.raises(ZeroDivisionError):
        K.zero.inverse()


def test_power_negative_exponent():
    K = CyclotomicField(5)
    z = K.zeta()
    assert z ** -1 == z ** 4
    assert (K.element(2) * z) ** 5 == K.element(32)


def test_to_complex_embedding():
    K = CyclotomicField(5)
    z = K.zeta().to_complex()
    assert abs(z - complex(math.cos(2 * math.pi / 5), math.sin(2 * math.pi / 5))) < 1e-12
    a = K.element([frac(1, 2), -2, 0, frac(3, 7)])
    expected = 0.5 - 2 * z + frac(3, 7) * z ** 3
    assert abs(a.to_complex() - expected) < 1e-12


def test_equality_coerces_rationals():
    K = CyclotomicField(5)
    assert K.element(2) == 2
    assert K.element(frac(1, 2)) == frac(1, 2)
    assert not (K.zeta() == 1)
    assert (K.zeta() ** 5) == 1
    assert hash(K.element(3)) == hash(CyclotomicField(5).element(3))


def test_str_is_stable():
    K = CyclotomicField(5)
    v = K.element([frac(-1, 2), 0, frac(3, 4)])
    assert str(v) == "-1/2 + 3/4*zeta^2"
    assert str(K.zero) == "0"
    assert str(-K.zeta()) == "-zeta"


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


def elements(order=5):
    K = CyclotomicField(order)
    return st.lists(rationals, min_size=K.degree, max_size=K.degree).map(K.element)


@given(elements(), elements(), elements())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    assert a - a == a.field.zero


@given(elements())
def test_inverse_roundtrip(a):
    if not a.is_zero():
        assert a * a.inverse() == a.field.one


@given(elements(), elements())
def test_complex_embedding_is_a_homomorphism(a, b):
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9
