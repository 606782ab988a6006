#!/usr/bin/env python

# Formal trace cochains: integration by parts, b and B, and the fixtures.

import os
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from FormalCalculus import DerivWord, Pattern, FormalCochain, EMPTY, \
     normalize, b_cochain, B_cochain, read_fixture, verify_appendix
from Experiment import Seed
from Utility import FixtureError, SupportError

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')
PSI = os.path.join(DATA, 'appendix_psi.txt')
BPSI = os.path.join(DATA, 'appendix_bpsi.txt')

coefficients = st.fractions(min_value = -2, max_value = 2,
                            max_denominator = 3).filter(bool)

plain_words = st.builds(DerivWord, st.just(0), st.integers(0, 2),
                        st.integers(0, 2))

# at most one slot carries the u-marker
@st.composite
def patterns(draw, level):
    words = draw(st.lists(plain_words, min_size = level + 1,
                          max_size = level + 1))
    if draw(st.booleans()):
        i = draw(st.integers(0, level))
        words[i] = DerivWord(1, words[i].p, words[i].q)
    return Pattern(words)

@st.composite
def cochains(draw, level):
    terms = draw(st.dictionaries(patterns(level), coefficients, min_size = 1,
                                 max_size = 3))
    return FormalCochain(terms, level)


def test_word_parsing():
    assert DerivWord.parse('su') == DerivWord.parse('us') == DerivWord(1, 0, 1)
    assert DerivWord.parse('1') == EMPTY
    assert str(DerivWord.parse('sau')) == 'uas'
    with pytest.raises(SupportError):
        DerivWord.parse('uu')
    with pytest.raises(SupportError):
        DerivWord.parse('ax')

def test_pattern():
    with pytest.raises(SupportError):
        Pattern(['1', 'u', 'au'])
    assert str(Pattern(['1', 'a', 'us'])) == '(a, us)'
    assert str(Pattern(['a', '1', 's'])) == '[a, 1, s]'
    assert Pattern(['1', 'a', 'us']).letters() == (1, 1, 1)


def test_integration_by_parts():
    # tau(d_s(a0) a1) = -tau(a0 a1) - tau(a0 d_s(a1))
    c = normalize(FormalCochain.single(['s', '1']))
    assert c == FormalCochain({Pattern(['1', '1']): -1,
                               Pattern(['1', 's']): -1}, 1)
    c = normalize(FormalCochain.single(['a', '1']))
    assert c == FormalCochain.single(['1', 'a'], -1)
    c = normalize(FormalCochain.single(['u', '1']))
    assert c == FormalCochain.single(['1', 'u'], -1)

@pytest.mark.parametrize('words', [('as', 'a', 'u'), ('us', 's', '1'),
                                   ('uas', '1', 's'), ('ss', 'a')])
def test_normalize_is_independent_of_peel_order(words):
    c = FormalCochain.single(words, Fraction(2, 3))
    results = [normalize(c, order) for order in permutations('uas')]
    for r in results[1:]:
        assert r == results[0]
    assert all(k.is_canonical() for k in results[0].terms)


@settings(max_examples = 200, deadline = None)
@given(st.integers(0, 3).flatmap(patterns), coefficients)
def test_every_peel_order_agrees(pattern, c):
    cochain = FormalCochain({pattern: c}, pattern.level)
    results = [normalize(cochain, order) for order in permutations('uas')]
    for r in results[1:]:
        assert r == results[0]
    assert all(k.is_canonical() for k in results[0].terms)


@pytest.mark.parametrize('level', [1, 2])
def test_bicomplex_identities(level):
    seed = Seed(137 + level)
    for _ in range(4):
        c = seed.formal_cochain(level)
        assert b_cochain(b_cochain(c)) == 0
        if level > 1:
            assert B_cochain(B_cochain(c)) == 0
        assert b_cochain(B_cochain(c)) + B_cochain(b_cochain(c)) == 0

@settings(max_examples = 50, deadline = None)
@given(st.integers(1, 2).flatmap(cochains))
def test_bicomplex_identities_on_drawn_cochains(c):
    assert b_cochain(b_cochain(c)) == 0
    if c.level > 1:
        assert B_cochain(B_cochain(c)) == 0
    assert b_cochain(B_cochain(c)) + B_cochain(b_cochain(c)) == 0

def test_b_keeps_letter_sectors():
    seed = Seed(150)
    c = seed.formal_cochain(2)
    sectors = set(k.letters() for k in c.terms)
    bc = b_cochain(c)
    assert bc.level == 3
    for k in bc.terms:
        assert k.is_canonical()
        assert k.letters() in sectors

def test_B_needs_positive_level():
    with pytest.raises(SupportError):
        B_cochain(FormalCochain.single(['1']))


def test_appendix_fixtures():
    report = verify_appendix(PSI, BPSI)
    assert [r['identity'] for r in report] == \
        ['b(psi) == printed bpsi', 'B(psi) == 0', 'printed bpsi is b-closed']
    assert all(r['passed'] for r in report)
    assert all(r['diff'] == [] for r in report)
    assert report[2]['informational']

def test_B_acts_on_canonical_patterns():
    # phi(1, a0, a1) carries every canonical pattern into B
    c = B_cochain(FormalCochain.single(['1', 'a', 'us']))
    assert c == FormalCochain.single(['1', 'uas'], -2)
    # an odd number of letters besides u cancels under the cyclic sum
    assert B_cochain(FormalCochain.single(['1', 'aa', 'us'])) == 0

def test_mutated_fixture_changes_the_report(tmp_path):
    with open(PSI) as f:
        text = f.read()
    mutated = tmp_path / 'psi.txt'
    mutated.write_text(text.replace('1/12  ;', '-1/12 ;', 1))
    report = verify_appendix(str(mutated), BPSI)
    assert not report[0]['passed']
    diff = dict((d['pattern'], d) for d in report[0]['diff'])
    # -3 (aaa,u) feeds (a, aa, u) and (aa, a, u)
    assert diff['(a, aa, u)']['computed'] == [1, 4]
    assert diff['(a, aa, u)']['expected'] == [-1, 4]
    assert report[1]['passed']

def test_mutation_in_first_group_breaks_B(tmp_path):
    with open(PSI) as f:
        text = f.read()
    mutated = tmp_path / 'psi.txt'
    mutated.write_text(text.replace('1/8   ; 1 | a   | su',
                                    '-1/8  ; 1 | a   | su', 1))
    report = verify_appendix(str(mutated), BPSI)
    assert not report[0]['passed'] and not report[1]['passed']
    assert report[1]['diff'] == [{'pattern': '(uas)', 'computed': [1, 2],
                                  'expected': [0, 1]}]

def test_fixture_errors(tmp_path):
    path = tmp_path / 'bad.txt'
    cases = [(u'1/2 ; 1 | a\n1 ; 1 | a | s\n', 2),
             (u'# comment\n1 ; a | s\n', 2),
             (u'x ; 1 | a\n', 1),
             (u'1 ; 1 | q\n', 1),
             (u'1 1 | a\n', 1)]
    for text, lineno in cases:
        path.write_text(text)
        with pytest.raises(FixtureError) as err:
            read_fixture(str(path))
        assert err.value.lineno == lineno

def test_empty_fixture(tmp_path):
    path = tmp_path / 'empty.txt'
    path.write_text(u'# nothing here\n\n')
    c = read_fixture(str(path), 2)
    assert c.is_zero() and c.level == 2

def test_fixture_values():
    psi = read_fixture(PSI, 2)
    assert len(psi) == 14
    assert psi.coefficient(Pattern(['1', 'aaa', 'u'])) == Fraction(1, 12)
    assert psi.coefficient(Pattern(['1', 'a', 'us'])) == Fraction(1, 8)

def test_json():
    c = FormalCochain.single(['1', 'a', 'us'], Fraction(1, 2))
    assert c.to_json() == [{'coefficient': [1, 2],
                            'pattern': ['1', 'a', 'us']}]
