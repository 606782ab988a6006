#!/usr/bin/env python

# Products, coproducts and antipodes in H(1).

import pytest

from HopfH1 import HElement, HTensor, PBWMonomial, H1Algebra, \
     AffineEnveloping, X, Y, delta, schwarzian, bracket, ad_y_eigenvalue, \
     coproduct, counit, antipode, twisted_antipode, modular_character, \
     monomials_up_to, delta_monomials, remainder_by_delta, normal_product
from MatchedPair import hopf_axiom_failures
from Experiment import Seed, rho_via_antipode
from Utility import OrderMismatchError

ONE = HElement.unit()

def tensor(*legs):
    return HTensor.from_elements(list(legs))


def test_commutation_relations():
    assert bracket(Y, X) == X
    assert bracket(X, delta(1)) == delta(2)
    assert bracket(X, delta(3)) == delta(4)
    assert bracket(Y, delta(2)) == delta(2) * 2
    assert bracket(delta(1), delta(3)) == 0

def test_ad_y_eigenvalues():
    for m in monomials_up_to(4):
        h = HElement({m: 1})
        assert bracket(Y, h) == h * ad_y_eigenvalue(m)

def test_pbw_product_is_associative():
    keys = monomials_up_to(2)
    for a in keys:
        for b in keys:
            for c in keys:
                u, v, w = (HElement({m: 1}) for m in (a, b, c))
                assert (u * v) * w == u * (v * w)

def test_coproduct_generators():
    assert coproduct(Y) == tensor(Y, ONE) + tensor(ONE, Y)
    assert coproduct(delta(1)) == tensor(delta(1), ONE) + tensor(ONE, delta(1))
    assert coproduct(X) == tensor(X, ONE) + tensor(ONE, X) + \
        tensor(delta(1), Y)

def test_coproduct_delta2():
    d1, d2 = delta(1), delta(2)
    assert coproduct(d2) == tensor(d2, ONE) + tensor(ONE, d2) + \
        tensor(d1, d1)

def test_schwarzian_is_primitive():
    s = schwarzian()
    assert coproduct(s) == tensor(s, ONE) + tensor(ONE, s)

def test_antipode_table():
    d1, d2, d3 = delta(1), delta(2), delta(3)
    assert antipode(d1) == -d1
    assert antipode(d2) == -d2 + d1 * d1
    assert antipode(d3) == -d3 + d1 * d2 * 4 - d1 * d1 * d1 * 2
    assert antipode(X) == -X + delta(1) * Y
    assert antipode(Y) == -Y

def test_antipode_delta4_two_ways():
    lhs, rhs = rho_via_antipode(4)
    assert lhs == rhs

def test_twisted_antipode():
    assert twisted_antipode(Y) == ONE - Y
    for m in monomials_up_to(4):
        h = HElement({m: 1})
        assert twisted_antipode(twisted_antipode(h)) == h

def test_modular_character():
    assert modular_character(Y) == 1
    assert modular_character(X) == 0
    assert modular_character(delta(1)) == 0
    assert modular_character(Y * Y) == 1
    assert counit(Y) == 0 and counit(ONE) == 1

def test_hopf_axioms_low_degree():
    assert list(hopf_axiom_failures(H1Algebra(), monomials_up_to(2))) == []

def test_affine_quotient_is_hopf():
    alg = AffineEnveloping()
    assert list(hopf_axiom_failures(alg, alg.basis(3))) == []

def test_random_multiplicativity():
    seed = Seed(137)
    for _ in range(10):
        u, v = seed.h_element(3), seed.h_element(3)
        assert coproduct(u * v) == coproduct(u) * coproduct(v)
        assert antipode(u * v) == antipode(v) * antipode(u)
        assert counit(u * v) == counit(u) * counit(v)

def test_coassociativity_by_fold():
    h = delta(3) + X * delta(1) + Y * X
    assert coproduct(h, 2, 0) == coproduct(h, 2)

def test_delta_monomials_counts():
    assert [len(delta_monomials(w)) for w in range(1, 6)] == [1, 2, 3, 5, 7]

def test_remainder_splits_over_deltas():
    parts = remainder_by_delta(3)
    assert sorted(parts) == [1, 2]
    assert parts[2] == delta(1) * 3
    assert parts[1] == delta(2) + delta(1) * delta(1)

def test_mismatched_tensor_legs():
    with pytest.raises(OrderMismatchError):
        tensor(X, ONE) + tensor(X, ONE, ONE)

def test_json_and_latex():
    h = antipode(delta(2))
    assert h.to_json() == [
        {'coefficient': [-1, 1], 'monomial': {'delta2': 1}},
        {'coefficient': [1, 1], 'monomial': {'delta1': 2}}]
    assert h.to_latex() == '-\\delta_{2} + \\delta_{1}^{2}'
    assert PBWMonomial((1,), 1, 2).to_json() == {'delta1': 1, 'X': 1, 'Y': 2}

def test_normal_product_orders_pbw_monomials():
    assert normal_product(Y, X) - normal_product(X, Y) == X
    assert normal_product(ONE, delta(2)) == delta(2)
