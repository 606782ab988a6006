#!/usr/bin/env python

# The enveloping algebra of the vector fields and its pairing with H(1).

import pytest
import sympy

from Kernel import poly_latex
from HopfH1 import HElement, PBWMonomial, delta, schwarzian, \
     coproduct, delta_monomials
from Enveloping import UElement, UMonomial, bracket_coefficient, \
     binomial_bracket_coefficient, primed_bracket_coefficient, u_bracket, \
     jacobi_defect, a1_monomials, pair, pair_delta, pair_tensor, rho_map, \
     gram_matrix, dt_map, dt_oracle, pair_delta_by_dt, \
     left_multiplier_coefficients, left_multiplier_expected, word_product, \
     u_product, l0_eval
from Utility import SupportError, OrderMismatchError

x1, x2, x3, x4 = sympy.symbols('x1:5')
z1, z2, z3, z4 = sympy.symbols('z1:5')
half = sympy.Rational(1, 2)


def test_bracket_constants():
    assert bracket_coefficient(1, 2) == 2
    assert bracket_coefficient(-1, 1) == 1
    assert bracket_coefficient(2, 1) == -2
    assert primed_bracket_coefficient(1, 2) == 1
    for k in range(1, 6):
        for l in range(1, 6):
            assert bracket_coefficient(k, l) == \
                binomial_bracket_coefficient(k, l)

def test_generator_bracket():
    z = [UElement.generator(k) for k in range(4)]
    assert u_bracket(z[1], z[2]) == z[3] * 2

def test_jacobi():
    for i, j, k in ((-1, 0, 1), (-1, 1, 2), (0, 1, 2), (1, 2, 3)):
        assert jacobi_defect(i, j, k, None) == 0

def test_truncation_levels():
    with pytest.raises(SupportError):
        UElement.generator(3, 2)
    with pytest.raises(OrderMismatchError):
        UElement.generator(1, 2) * UElement.generator(1, 3)
    a = UElement.generator(1, 2) * UElement.generator(2, 2)
    assert a == UElement.monomial({2: 1, 1: 1}, 2)


def test_pair_generators():
    for n in range(1, 5):
        zn = UElement.generator(n)
        assert pair_delta(n, zn) == 1
        assert pair(delta(n), zn) == 1
    assert pair_delta(2, UElement.generator(1)) == 0

def test_pair_is_a_hopf_pairing():
    for total in range(1, 5):
        for a in delta_monomials(total):
            h = HElement({PBWMonomial(a): 1})
            t = coproduct(h)
            for w1 in range(total + 1):
                for m1 in a1_monomials(w1):
                    for m2 in a1_monomials(total - w1):
                        u, v = UElement({m1: 1}), UElement({m2: 1})
                        assert pair_tensor(t, [u, v]) == pair(h, u * v)

def test_gram_matrices_are_nonsingular():
    for w in range(1, 6):
        assert gram_matrix(w).rank() == len(delta_monomials(w))

def test_pairing_needs_delta_polynomials():
    with pytest.raises(SupportError):
        pair(HElement({PBWMonomial(x = 1): 1}), UElement.generator(1))


def test_rho_table():
    assert rho_map(delta(1)) == x1
    assert rho_map(delta(2)) == x2 + x1 * x1 * half
    assert rho_map(delta(3)) == x3 + x2 * x1 + x1 ** 3 * half
    assert rho_map(delta(4)) == x4 + x3 * x1 + x2 * x2 * 2 + \
        x2 * x1 * x1 * 2 + x1 ** 4 * sympy.Rational(3, 4)

def test_rho_schwarzian():
    assert rho_map(schwarzian()) == x2

def test_reversed_rho():
    assert rho_map(delta(3), True) == z3 + z1 * z2 * 3 + z1 ** 3 * half
    assert rho_map(delta(4), True) == z4 + z2 * z2 * 2 + z1 * z3 * 6 + \
        z1 * z1 * z2 * 9 + z1 ** 4 * sympy.Rational(3, 4)

def test_rho_latex():
    assert poly_latex(rho_map(delta(4))) == \
        'x_{4} + x_{3}x_{1} + 2x_{2}^{2} + 2x_{2}x_{1}^{2} + \\frac{3}{4}x_{1}^{4}'


def test_dt_against_derivational_formula():
    for w in range(1, 5):
        for m in a1_monomials(w):
            assert dt_map(UElement({m: 1})) == dt_oracle(m)

def test_dt_lowers_generators():
    assert dt_map(UElement.generator(3)) == UElement.generator(2)
    assert dt_map(UElement.generator(1)) == UElement({}, None)

def test_pair_through_dt():
    for w in range(1, 5):
        for m in a1_monomials(w):
            a = UElement({m: 1})
            assert pair_delta_by_dt(w, a) == pair_delta(w, a)

def test_left_multiplier_coefficients():
    for n in (2, 3):
        for k in (1, 2):
            for m in a1_monomials(k):
                a0 = UElement({m: 1})
                assert left_multiplier_coefficients(n, a0) == \
                    left_multiplier_expected(n, a0)

def test_word_product_order():
    a = word_product((2, 1))
    b = word_product((1, 2))
    assert a - b == UElement.generator(3) * -2
    assert UMonomial.from_dict({2: 1, 1: 1}) in a.terms

def test_l0_and_products():
    a = UElement.generator(0) * 3 + UElement.generator(1)
    assert l0_eval(a) == 3
    assert l0_eval(UElement.generator(2)) == 0
    z1, z2 = UElement.generator(1), UElement.generator(2)
    assert u_product(z1, z2) == z1 * z2
    with pytest.raises(OrderMismatchError):
        u_product(UElement.generator(1, 2), UElement.generator(1))
