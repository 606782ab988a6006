#!/usr/bin/env python

# The cyclic module of H(1) and of U(aff), and its (b, B) bicomplex.

import pytest

from HopfH1 import PBWMonomial, H1Algebra, AffineEnveloping
from HopfCyclic import CyclicTensor, face, degeneracy, cyclic_op, \
     cyclic_power, hochschild_b, connes_B, t_normalize, antisymmetrize, \
     lambda_relations, bicomplex_relations, check_relations, basis_tensors, \
     simplicial_op, lie_chain, ce_boundary_defects
from LieCohomology import CEComplex, affine_algebra
from Experiment import Seed
from Utility import SupportError

H1 = H1Algebra()
AFF = AffineEnveloping()
ONE = PBWMonomial()
X = PBWMonomial(x = 1)
Y = PBWMonomial(y = 1)
D1 = PBWMonomial((1,))


def test_level_zero_faces():
    t = CyclicTensor.scalar(1, H1)
    assert face(0, t) == CyclicTensor.basis_tensor([ONE], H1)
    assert face(1, t) == CyclicTensor.basis_tensor([ONE], H1)
    assert hochschild_b(t) == 0

def test_inner_face_is_coproduct():
    t = CyclicTensor.basis_tensor([X], H1)
    expected = CyclicTensor({(X, ONE): 1, (ONE, X): 1, (D1, Y): 1}, 2, H1)
    assert face(1, t) == expected

def test_degeneracy_is_counit():
    t = CyclicTensor.basis_tensor([ONE, X], H1)
    assert degeneracy(0, t) == CyclicTensor.basis_tensor([X], H1)
    assert degeneracy(1, t) == CyclicTensor.zero(1, H1)

def test_cyclic_operator_on_y():
    t = CyclicTensor.basis_tensor([Y], H1)
    # S~(Y) = 1 - Y
    assert cyclic_op(t) == CyclicTensor({(ONE,): 1, (Y,): -1}, 1, H1)

def test_connes_B_of_y():
    assert connes_B(CyclicTensor.basis_tensor([Y], H1)) == \
        CyclicTensor.scalar(1, H1)

def test_transverse_class_in_affine_quotient():
    xy = antisymmetrize([X, Y], AFF)
    assert hochschild_b(xy) == 0
    assert connes_B(xy) == 0

def test_antisymmetrize():
    t = antisymmetrize([X, Y], AFF)
    assert t == CyclicTensor({(X, Y): 1, (Y, X): -1}, 2, AFF)

@pytest.mark.parametrize('alg', [H1, AFF])
@pytest.mark.parametrize('level', [0, 1, 2, 3])
def test_cyclic_relations_on_basis(alg, level):
    assert check_relations(basis_tensors(alg, level, 3)) is None

@pytest.mark.parametrize('level', [0, 1, 2, 3, 4])
def test_bicomplex_on_basis(level):
    assert check_relations(basis_tensors(H1, level, 1),
                           bicomplex_relations) is None

@pytest.mark.parametrize('alg', [H1, AFF])
def test_relations_on_random_tensors(alg):
    seed = Seed(137)
    tensors = [seed.cyclic_tensor(alg, 1 + i % 3, 2) for i in range(100)]
    assert check_relations(tensors) is None

@pytest.mark.parametrize('level', [1, 2, 3, 4])
def test_bicomplex_on_random_tensors(level):
    seed = Seed(141 + level)
    tensors = [seed.cyclic_tensor(H1, level, 2) for _ in range(5)]
    assert check_relations(tensors, bicomplex_relations) is None

def test_lie_chains_follow_the_ce_boundary():
    gens = [X, Y]
    cx = CEComplex(affine_algebra(), 'delta')
    assert list(ce_boundary_defects(cx, AFF, gens)) == []
    assert connes_B(lie_chain([Y], AFF)) == CyclicTensor.scalar(1, AFF)
    # without the modular character B(Y) = 1 is no longer a boundary
    trivial = CEComplex(affine_algebra())
    assert list(ce_boundary_defects(trivial, AFF, gens)) == \
        [(1, 'Y', 'B alpha = alpha d'), (2, 'X^Y', 'B alpha = alpha d')]

def test_cyclic_power_is_identity():
    seed = Seed(140)
    for level in (1, 2, 3):
        t = seed.cyclic_tensor(H1, level, 2)
        assert cyclic_power(t, level + 1) == t

def test_relation_names():
    names = [item[0] for item in
             lambda_relations(CyclicTensor.basis_tensor([X, Y], H1))]
    assert 't^3 = id' in names
    assert 't d0 = d3' in names

def test_t_normalize_levels():
    t = CyclicTensor.basis_tensor([Y], H1)
    # eps(S~ Y) = eps(1 - Y) = delta(Y)
    assert t_normalize(t) == CyclicTensor.scalar(1, H1)
    t = CyclicTensor.basis_tensor([ONE, X], H1)
    assert t_normalize(t) == CyclicTensor.basis_tensor([X], H1)

def test_out_of_range():
    t = CyclicTensor.scalar(1, H1)
    with pytest.raises(SupportError):
        face(2, t)
    with pytest.raises(SupportError):
        cyclic_op(t)
    with pytest.raises(SupportError):
        connes_B(t)
    with pytest.raises(SupportError):
        t_normalize(t)
    with pytest.raises(SupportError):
        simplicial_op('cyclic', 0, t)

def test_json():
    t = CyclicTensor.basis_tensor([X, Y], H1, 2)
    assert t.to_json() == [{'coefficient': [2, 1],
                            'monomial': [{'X': 1}, {'Y': 1}]}]
