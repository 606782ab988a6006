#!/usr/bin/env python

# Jets, the crossed product model and the action of H(1) on it.

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
import sympy

from Kernel import TruncSeries
from HopfH1 import HElement, X, Y, delta, schwarzian, bracket, coproduct
from Diffeo import DiffeoJet, AffineElement, FiberFunction, CrossedElement, \
     jet_compose, jet_invert, delta_coords, evaluate_delta_poly, \
     evaluate_delta_tensor, schwarzian_at_zero, g1_tangent, \
     delta_coords_derivative, gamma, hopf_act, expansional_product, \
     expansional_closed_form, g1_right_action, crossed_mul, pair_crossed
from Experiment import Seed
from Utility import SupportError, OrderMismatchError, TruncationError

ORDER = 6

rationals = st.fractions(min_value = -2, max_value = 2, max_denominator = 3)

def jets(order = ORDER):
    return st.lists(rationals, min_size = order - 1, max_size = order - 1).map(
        lambda cs: DiffeoJet.from_coefficients(cs, order))

positive = st.fractions(min_value = Fraction(1, 3), max_value = 3,
                        max_denominator = 3)
affines = st.builds(AffineElement, positive, rationals)


@given(rationals)
def test_delta_coordinates_of_quadratic(c):
    p = DiffeoJet.from_coefficients([c], 4)
    assert delta_coords(p, 1) == 2 * c
    assert delta_coords(p, 2) == -4 * c * c

def test_identity_has_zero_coordinates():
    p = DiffeoJet.identity(5)
    assert [delta_coords(p, n) for n in range(1, 5)] == [0, 0, 0, 0]

@given(jets())
def test_inverse_jet(p):
    assert jet_compose(p, jet_invert(p)) == DiffeoJet.identity(ORDER)

@settings(max_examples = 30)
@given(jets(), jets())
def test_coproduct_pairs_with_composition(p, q):
    for n in range(1, 4):
        assert evaluate_delta_tensor(coproduct(delta(n)), [p, q]) == \
            delta_coords(jet_compose(q, p), n)

@given(jets())
def test_schwarzian_on_jets(p):
    assert evaluate_delta_poly(schwarzian(), p) == schwarzian_at_zero(p)

@given(jets())
def test_tangent_raises_index(p):
    for n in range(1, ORDER - 2):
        assert delta_coords_derivative(p, g1_tangent(p), n) == \
            delta_coords(p, n + 1)

@settings(max_examples = 30)
@given(jets(), jets())
def test_gamma_cocycle(p, q):
    assert gamma(jet_compose(q, p), 1) == gamma(p, 1) + gamma(q, 1).lift(p)

def test_bad_jets():
    with pytest.raises(SupportError):
        DiffeoJet(TruncSeries([1, 1], 3))
    with pytest.raises(SupportError):
        DiffeoJet(TruncSeries([0, 2], 3))
    with pytest.raises(TruncationError):
        delta_coords(DiffeoJet.identity(3), 3)
    with pytest.raises(OrderMismatchError):
        jet_compose(DiffeoJet.identity(3), DiffeoJet.identity(4))
    with pytest.raises(SupportError):
        evaluate_delta_poly(X, DiffeoJet.identity(3))


@given(affines, affines, affines)
def test_affine_group(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == AffineElement.identity()
    assert (a * b)(1) == a(b(1))

def test_affine_scale_is_positive():
    with pytest.raises(SupportError):
        AffineElement(0, 1)


def test_fiber_action_of_generators():
    f = FiberFunction({(1, 2): 1}, 4)
    assert f.act_y() == f
    assert f.act_x() == FiberFunction({(2, 1): 2}, 3)

def test_action_is_a_module_action():
    seed = Seed(137)
    for _ in range(5):
        u = seed.crossed_element(ORDER, 1)
        for a, b in ((X, Y), (X, delta(1)), (Y, delta(2))):
            assert hopf_act(a * b, u) == hopf_act(a, hopf_act(b, u))

def test_bracket_acts_as_next_delta():
    seed = Seed(138)
    u = seed.crossed_element(ORDER, 2)
    assert hopf_act(bracket(X, delta(1)), u) == hopf_act(delta(2), u)

def test_y_grades_the_action():
    seed = Seed(142)
    u = seed.crossed_element(ORDER, 2)
    assert hopf_act(bracket(Y, X), u) == hopf_act(X, u)
    for n in (1, 2, 3):
        assert hopf_act(bracket(Y, delta(n)), u) == \
            hopf_act(delta(n), u).scale(n)

def test_leibniz_rule_for_delta_3():
    seed = Seed(143)
    u, v = seed.crossed_element(ORDER, 1), seed.crossed_element(ORDER, 1)
    expected = CrossedElement()
    for (a, b), c in coproduct(delta(3)).terms.items():
        expected = expected + (hopf_act(HElement({a: 1}), u) *
                               hopf_act(HElement({b: 1}), v)).scale(c)
    assert hopf_act(delta(3), u * v) == expected

def test_crossed_product_is_associative():
    seed = Seed(139)
    u, v, w = (seed.crossed_element(ORDER, 1) for _ in range(3))
    assert (u * v) * w == u * (v * w)


@settings(max_examples = 10, deadline = None)
@given(jets(5))
def test_expansional_identity(p):
    s, t = sympy.symbols('s t')
    for f in (t, s, s * t):
        assert expansional_product(p, f, 4) == expansional_closed_form(p, f, 4)

def test_expansional_needs_order():
    with pytest.raises(TruncationError):
        expansional_product(DiffeoJet.identity(3), sympy.Symbol('t'), 4)


def test_affine_group_acts_on_jets():
    p = DiffeoJet.from_coefficients([Fraction(1, 2)], 4)
    assert g1_right_action(p, AffineElement.identity()) == p
    assert g1_right_action(p, AffineElement(2, 0)) == \
        DiffeoJet.from_coefficients([1], 4)
    # (p(x + 1) - p(1)) / p'(1) for p = x + x^2
    q = DiffeoJet.from_coefficients([1], 4)
    assert g1_right_action(q, AffineElement(1, 1), polynomial = True) == \
        DiffeoJet.from_coefficients([Fraction(1, 3)], 4)
    k1, k2 = AffineElement(2, 0), AffineElement(Fraction(1, 3), 0)
    assert g1_right_action(g1_right_action(p, k1), k2) == \
        g1_right_action(p, k1 * k2)

def test_crossed_product_composes_labels():
    one = FiberFunction.constant(1, 5)
    p = DiffeoJet.from_coefficients([Fraction(1, 2)], 6)
    q = DiffeoJet.from_coefficients([0, 1], 6)
    assert crossed_mul(CrossedElement.single(one, p),
                       CrossedElement.single(one, q)) == \
        CrossedElement.single(one, jet_compose(q, p))

def test_pairing_with_the_crossed_product():
    c = Fraction(2, 3)
    u = CrossedElement.single(FiberFunction({(1, 0): 1}, 4),
                              DiffeoJet.from_coefficients([c], 4))
    # delta_1 = 2c, f(y, x) = y at y = 3
    assert pair_crossed(delta(1), AffineElement(3, 1), u) == 6 * c

def test_translation_needs_the_whole_jet():
    q = DiffeoJet.from_coefficients([1], 4)
    with pytest.raises(TruncationError):
        g1_right_action(q, AffineElement(1, 1))
    with pytest.raises(TruncationError):
        g1_right_action(q, AffineElement(2, Fraction(-1, 2)))
    assert g1_right_action(q, AffineElement(3, 0)) == \
        DiffeoJet.from_coefficients([3], 4)
