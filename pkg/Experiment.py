#!/usr/bin/env python

# Seeded random objects, the check recorder and the verification suites.

import logging
from fractions import Fraction
from itertools import product

import numpy as np
import sympy

from Kernel import ZERO, ONE, poly_substitute, matrix_rank
from HopfH1 import HElement, HTensor, PBWMonomial, H1Algebra, AffineEnveloping, \
     X, Y, delta, schwarzian, bracket, ad_y_eigenvalue, coproduct, antipode, \
     twisted_antipode, monomials_up_to, delta_monomials
from Enveloping import UElement, a1_monomials, pair, pair_tensor, rho_map, \
     gram_matrix, dt_map, dt_oracle, pair_delta, pair_delta_by_dt, \
     left_multiplier_coefficients, left_multiplier_expected
from Diffeo import DiffeoJet, FiberFunction, CrossedElement, jet_compose, \
     delta_coords, evaluate_delta_poly, evaluate_delta_tensor, \
     schwarzian_at_zero, g1_tangent, delta_coords_derivative, gamma, \
     hopf_act, expansional_product, expansional_closed_form
from MatchedPair import HOPF_AXIOMS, hopf_axiom_failures, load_factorization, \
     BicrossedHopf, left_action_formula, right_action_formula, kernel_ranks, \
     is_trace
from HopfCyclic import CyclicTensor, basis_tensors, check_relations, \
     bicomplex_relations, connes_B, hochschild_b, \
     antisymmetrize, ce_boundary_defects
from LieCohomology import CEComplex, affine_algebra, truncated_vector_fields, \
     ce_cohomology_dims, lie_homology_delta, weil_cohomology, WeilTruncated, \
     pontrjagin_classes, godbillon_vey
from FormalCalculus import FormalCochain, DerivWord, EMPTY, verify_appendix, \
     b_cochain, B_cochain
from Utility import fraction_json, SupportError

logger = logging.getLogger(__name__)


# Convenience object for consistent generation of test data
class Seed:
    def __init__(self, seed = 0):
        self.seed = seed
        self.rng = np.random.RandomState(seed)

    def next(self):
        self.seed += 1
        self.rng = np.random.RandomState(self.seed)

    def integer(self, low, high):
        return int(self.rng.randint(low, high + 1))

    def rational(self, bound = 3, den = 3):
        return Fraction(self.integer(-bound, bound), self.integer(1, den))

    def nonzero_rational(self, bound = 3, den = 3):
        c = ZERO
        while not c:
            c = self.rational(bound, den)
        return c

    def choice(self, seq):
        return seq[self.integer(0, len(seq) - 1)]

    def h_element(self, max_degree, terms = 3, delta_only = False):
        keys = monomials_up_to(max_degree, delta_only)
        return HElement(dict((self.choice(keys), self.nonzero_rational())
                             for _ in range(terms)))

    def jet(self, order):
        return DiffeoJet.from_coefficients(
            [self.rational(2, 2) for _ in range(order - 1)], order)

    def fiber_function(self, order, terms = 3, max_y = 2):
        return FiberFunction(dict(((self.integer(0, max_y),
                                    self.integer(0, order)),
                                   self.nonzero_rational())
                                  for _ in range(terms)), order)

    def crossed_element(self, order, parts = 2):
        return CrossedElement(dict((self.jet(order), self.fiber_function(order))
                                   for _ in range(parts)))

    def cyclic_tensor(self, algebra, level, max_degree, terms = 3):
        keys = algebra.basis(max_degree)
        out = CyclicTensor.zero(level, algebra)
        for _ in range(terms):
            k = tuple(self.choice(keys) for _ in range(level))
            out = out + CyclicTensor.basis_tensor(k, algebra,
                                                  self.nonzero_rational())
        return out

    def deriv_word(self, max_letters, allow_u):
        u = self.integer(0, 1) if allow_u else 0
        p = self.integer(0, max_letters - u)
        q = self.integer(0, max_letters - u - p)
        return DerivWord(u, p, q)

    def formal_cochain(self, level, terms = 3, max_letters = 2):
        out = FormalCochain({}, level)
        for _ in range(terms):
            words, used = [EMPTY], False
            for _ in range(level):
                w = self.deriv_word(max_letters, not used)
                used = used or bool(w.u)
                words.append(w)
            out = out + FormalCochain.single(words, self.nonzero_rational())
        return out


class Results:
    """Named identity checks, each with pass/fail and a counterexample."""

    def __init__(self, title = None):
        self.title = title
        self.records = []

    def check(self, suite, identity, passed, counterexample = None,
              informational = False):
        passed = bool(passed)
        self.records.append({'suite': suite, 'identity': identity,
                             'passed': passed, 'informational': informational,
                             'counterexample': None if passed else
                             _describe(counterexample)})
        if not passed and not informational:
            logger.warning('%s: %s fails (%s)', suite, identity,
                           _describe(counterexample))
        return passed

    def merge(self, other):
        self.records.extend(other.records)

    def failures(self):
        return [r for r in self.records
                if not r['passed'] and not r['informational']]

    def passed(self):
        return not self.failures()

    def to_json(self):
        return sorted(self.records, key = lambda r: (r['suite'], r['identity']))

    def summary(self):
        lines = []
        for r in self.to_json():
            status = 'pass' if r['passed'] else \
                ('note' if r['informational'] else 'FAIL')
            lines.append('%-4s %-14s %s' % (status, r['suite'], r['identity']))
        lines.append('%d checks, %d failed' % (len(self.records),
                                               len(self.failures())))
        return '\n'.join(lines)

def _describe(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Fraction):
        return fraction_json(x)
    if isinstance(x, (list, tuple)) and not hasattr(x, '_fields'):
        return [_describe(y) for y in x]
    if isinstance(x, dict) and all(isinstance(k, str) for k in x):
        return dict((k, _describe(v)) for k, v in x.items())
    return str(x)

# First element of `items` for which `bad` holds, else None
def first_failure(items, bad):
    for item in items:
        if bad(item):
            return item
    return None


def record_hopf_axioms(results, suite, alg, keys):
    found = {}
    for identity, where in hopf_axiom_failures(alg, keys):
        found.setdefault(identity, where)
    for identity in HOPF_AXIOMS:
        results.check(suite, '%s %s' % (alg.name, identity),
                      identity not in found, found.get(identity))

def _pairs_coproduct_act(h, u, v):
    out = CrossedElement()
    for (m1, m2), c in coproduct(h).terms.items():
        out = out + (hopf_act(HElement({m1: 1}), u) *
                     hopf_act(HElement({m2: 1}), v)).scale(c)
    return out


def suite_hopf(params, seed, results):
    w = params['max_weight']
    keys = monomials_up_to(w)
    record_hopf_axioms(results, 'hopf', H1Algebra(), keys)
    results.check('hopf', 'S~ S~ = id', *_none_failed(
        keys, lambda m: twisted_antipode(twisted_antipode(HElement({m: 1})))
        != HElement({m: 1})))
    results.check('hopf', '[Y, m] = (sum j a_j + b) m', *_none_failed(
        keys, lambda m: bracket(Y, HElement({m: 1})) !=
        HElement({m: ad_y_eigenvalue(m)})))
    d1, d2, d3 = delta(1), delta(2), delta(3)
    table = [(d1, -d1), (d2, -d2 + d1 * d1),
             (d3, -d3 + d1 * d2 * 4 - d1 * d1 * d1 * 2)]
    results.check('hopf', 'S(delta_1..3) table', *_none_failed(
        table, lambda row: antipode(row[0]) != row[1]))
    sigma = schwarzian()
    unit = HElement.unit()
    results.check('hopf', 'Schwarzian is primitive',
                  coproduct(sigma) == HTensor.from_elements([sigma, unit]) +
                  HTensor.from_elements([unit, sigma]))
    pairs = [(seed.h_element(max(w, 1)), seed.h_element(max(w, 1)))
             for _ in range(params['trials'])] if w else []
    results.check('hopf', 'Delta(uv) = Delta(u) Delta(v) (random)',
                  *_none_failed(pairs, lambda uv: coproduct(uv[0] * uv[1]) !=
                                coproduct(uv[0]) * coproduct(uv[1])))
    results.check('hopf', 'S(uv) = S(v) S(u) (random)',
                  *_none_failed(pairs, lambda uv: antipode(uv[0] * uv[1]) !=
                                antipode(uv[1]) * antipode(uv[0])))

# (passed, counterexample) pair for Results.check
def _none_failed(items, bad):
    item = first_failure(items, bad)
    return item is None, item


def _rho_table():
    x1, x2, x3, x4 = sympy.symbols('x1:5')
    half = sympy.Rational(1, 2)
    return [(1, x1), (2, x2 + x1 * x1 * half),
            (3, x3 + x2 * x1 + x1 ** 3 * half),
            (4, x4 + x3 * x1 + x2 * x2 * 2 + x2 * x1 * x1 * 2 +
             x1 ** 4 * sympy.Rational(3, 4))]

def rho_via_antipode(n):
    """rho(S delta_n) against the reversed map with z_j -> -x_j."""
    lhs = rho_map(antipode(delta(n)))
    rhs = poly_substitute(rho_map(delta(n), reversed = True), dict(
        ('z%d' % j, -sympy.Symbol('x%d' % j)) for j in range(1, n + 1)))
    return lhs, rhs

def suite_duality(params, seed, results):
    w = params['max_weight']
    bad = None
    for total in range(1, w + 1):
        for a in delta_monomials(total):
            h = HElement({PBWMonomial(a): 1})
            t = coproduct(h)
            for w1 in range(total + 1):
                for m1, m2 in product(a1_monomials(w1), a1_monomials(total - w1)):
                    u, v = UElement({m1: 1}), UElement({m2: 1})
                    if pair_tensor(t, [u, v]) != pair(h, u * v):
                        bad = bad or (str(h), str(m1), str(m2))
    results.check('duality', '<Delta h, a (x) b> = <h, ab>', bad is None, bad)
    results.check('duality', 'Gram matrices nonsingular', *_none_failed(
        range(1, w + 1),
        lambda k: matrix_rank(gram_matrix(k)) != len(delta_monomials(k))))
    results.check('duality', 'rho(delta_n) table', *_none_failed(
        [row for row in _rho_table() if row[0] <= max(w, 1)],
        lambda row: rho_map(delta(row[0])) != row[1]))
    results.check('duality', 'rho(Schwarzian) = x2',
                  rho_map(schwarzian()) == sympy.Symbol('x2'))
    results.check('duality', 'rho S = reversed rho at z = -x', *_none_failed(
        range(1, max(w, 1) + 1), lambda n: rho_via_antipode(n)[0] !=
        rho_via_antipode(n)[1]))
    monos = [m for k in range(1, w + 1) for m in a1_monomials(k)]
    results.check('duality', 'D^t matches the derivational formula',
                  *_none_failed(monos, lambda m: dt_map(UElement({m: 1})) !=
                                dt_oracle(m)))
    results.check('duality', '<delta_n, a> through (D^t)^{n-1}', *_none_failed(
        monos, lambda m: pair_delta_by_dt(m.weight, UElement({m: 1})) !=
        pair_delta(m.weight, UElement({m: 1}))))
    cases = [(n, m) for n in range(2, max(w, 2) + 1)
             for k in range(1, 3) for m in a1_monomials(k)]
    bad = lambda c: left_multiplier_coefficients(c[0], UElement({c[1]: 1})) \
        != left_multiplier_expected(c[0], UElement({c[1]: 1}))
    results.check('duality', 'lambda^k = <R^k, a0>',
                  *_none_failed(cases, bad))


def suite_action(params, seed, results):
    order = params['order']
    gens = [X, Y, delta(1), delta(2), delta(3)]
    bad_weight = None
    bad_leibniz = bad_bracket = bad_cocycle = bad_group = bad_tangent = None
    bad_sigma = None
    for trial in range(params['trials']):
        u = seed.crossed_element(order, 1)
        v = seed.crossed_element(order, 1)
        for h in gens:
            if hopf_act(h, u * v) != _pairs_coproduct_act(h, u, v):
                bad_leibniz = bad_leibniz or (str(h), trial)
        for n in (1, 2):
            if hopf_act(bracket(X, delta(n)), u) != hopf_act(delta(n + 1), u):
                bad_bracket = bad_bracket or (n, trial)
        if hopf_act(bracket(Y, X), u) != hopf_act(X, u):
            bad_weight = bad_weight or ('X', trial)
        for n in (1, 2, 3):
            if hopf_act(bracket(Y, delta(n)), u) != \
                    hopf_act(delta(n), u).scale(n):
                bad_weight = bad_weight or (n, trial)
        p, q = seed.jet(order), seed.jet(order)
        if gamma(jet_compose(q, p), 1) != gamma(p, 1) + gamma(q, 1).lift(p):
            bad_cocycle = bad_cocycle or trial
        for n in range(1, 4):
            if evaluate_delta_tensor(coproduct(delta(n)), [p, q]) != \
                    delta_coords(jet_compose(q, p), n):
                bad_group = bad_group or (n, trial)
        for n in range(1, order - 2):
            if delta_coords_derivative(p, g1_tangent(p), n) != \
                    delta_coords(p, n + 1):
                bad_tangent = bad_tangent or (n, trial)
        if evaluate_delta_poly(schwarzian(), p) != schwarzian_at_zero(p):
            bad_sigma = bad_sigma or trial
    results.check('action', 'h(uv) = h1(u) h2(v)', bad_leibniz is None,
                  bad_leibniz)
    results.check('action', '[X, delta_n] acts as delta_{n+1}',
                  bad_bracket is None, bad_bracket)
    results.check('action',
                  '[Y, X] = X and [Y, delta_n] = n delta_n on the crossed product',
                  bad_weight is None, bad_weight)
    results.check('action', 'gamma_1 cocycle', bad_cocycle is None, bad_cocycle)
    results.check('action', '<Delta delta_n, p (x) q> = delta_n(q o p)',
                  bad_group is None, bad_group)
    results.check('action', 'd/db delta_n = delta_{n+1}', bad_tangent is None,
                  bad_tangent)
    results.check('action', 'Schwarzian on jets', bad_sigma is None, bad_sigma)
    e_order = params['expansional_order']
    s, t = sympy.symbols('s t')
    bad = None
    for trial in range(max(1, params['trials'] // 2)):
        p = seed.jet(e_order + 1)
        for f in (t, s, s * s + t, s * t):
            if expansional_product(p, f, e_order) != \
                    expansional_closed_form(p, f, e_order):
                bad = bad or (str(f), trial)
    results.check('action', 'expansional product = f(s + log psi\', psi)',
                  bad is None, bad)


def suite_matched_pair(params, seed, results):
    for name in params['groups']:
        fact = load_factorization(name)
        suite = 'matched-pair'
        results.check(suite, '%s matched pair identities' % fact.name,
                      *_negate(fact.matched_pair_counterexample()))
        hopf = BicrossedHopf(fact)
        record_hopf_axioms(results, suite, hopf, hopf.keys)
        results.check(suite, '%s modular character = counit' % fact.name,
                      *_none_failed(hopf.keys, lambda h: hopf.modular(h) !=
                                    hopf.counit(h)))
        bad = None
        for (c, l), (k, a) in product(hopf.keys, hopf.dual.keys):
            f, a2 = left_action_formula(fact, {c: ONE}, l, {k: ONE}, a)
            if hopf.left_action((c, l), (k, a)) != \
                    dict(((m, a2), v) for m, v in f.items()):
                bad = bad or ('left', c, l, k, a)
            f, a2 = right_action_formula(fact, {k: ONE}, a, {c: ONE}, l)
            if hopf.right_action((k, a), (c, l)) != \
                    dict(((m, a2), v) for m, v in f.items()):
                bad = bad or ('right', c, l, k, a)
        results.check(suite, '%s bimodule formulas' % fact.name, bad is None,
                      bad)
        for kind in ('sum', 'normalized'):
            results.check(suite, '%s tau0 (%s) is a trace' % (fact.name, kind),
                          is_trace(hopf, kind))
        if fact.group.order <= params['kernel_max_order']:
            for kind in ('sum', 'normalized'):
                ranks = kernel_ranks(hopf, 1, kind)
                results.check(suite, '%s Ker theta = Ker t (%s)' %
                              (fact.name, kind), len(set(ranks)) == 1, ranks)
            results.check(suite, '%s dim C^1 = |G|' % fact.name,
                          ranks[1] == fact.group.order, ranks)
        for level in range(4):
            # the full level-3 basis of the larger groups is sampled instead
            if level < 3 or fact.group.order <= 8:
                tensors = basis_tensors(hopf, level, 0)
            else:
                tensors = [seed.cyclic_tensor(hopf, level, 0)
                           for _ in range(params['trials'])]
            failure = check_relations(tensors)
            results.check(suite, '%s cyclic relations at level %d' %
                          (fact.name, level), failure is None, failure)

def _negate(counterexample):
    return counterexample is None, counterexample


def suite_cyclic(params, seed, results):
    n, w = params['n'], params['cyclic_max_weight']
    for alg in (H1Algebra(), AffineEnveloping()):
        for level in range(n + 1):
            tensors = basis_tensors(alg, level, w)
            tensors += [seed.cyclic_tensor(alg, level, w)
                        for _ in range(params['trials'])] if level else []
            failure = check_relations(tensors)
            results.check('cyclic', '%s cyclic relations at level %d' %
                          (alg.name, level), failure is None, failure)
            failure = check_relations(tensors, bicomplex_relations)
            results.check('cyclic', '%s b, B relations at level %d' %
                          (alg.name, level), failure is None, failure)
    h1, aff = H1Algebra(), AffineEnveloping()
    y = PBWMonomial(y = 1)
    results.check('cyclic', 'B(Y) = 1 in H(1)',
                  connes_B(CyclicTensor.basis_tensor([y], h1)) ==
                  CyclicTensor.scalar(1, h1))
    xy = antisymmetrize([PBWMonomial(x = 1), y], aff)
    results.check('cyclic', 'b(X^Y) = 0 in U(aff)', hochschild_b(xy) == 0)
    results.check('cyclic', 'B(X^Y) = 0 in U(aff)', connes_B(xy) == 0)
    cx = CEComplex(affine_algebra(), 'delta')
    defects = list(ce_boundary_defects(cx, aff, [PBWMonomial(x = 1), y]))
    results.check('cyclic', 'B alpha = alpha d on U(aff) with C_delta',
                  not defects, defects[0] if defects else None)


def suite_cohomology(params, seed, results):
    betti, reps = weil_cohomology(1)
    w1 = WeilTruncated(1)
    results.check('cohomology', 'WO(1) Betti numbers (1, 0, 0, 1)',
                  betti == [1, 0, 0, 1], betti)
    results.check('cohomology', 'WO(1) H^3 spanned by h1 c1',
                  [k for k, _ in reps] == [0, 3] and
                  w1.is_nontrivial(w1.monomial('h1', 'c1')), reps)
    for n in range(1, params['weil_max_n'] + 1):
        w = WeilTruncated(n)
        results.check('cohomology', 'WO(%d) Pontrjagin classes nontrivial' % n,
                      *_none_failed(pontrjagin_classes(n), lambda ip:
                                    not w.is_cocycle(ip[1]) or
                                    not w.is_nontrivial(ip[1])))
        gv = godbillon_vey(n)
        results.check('cohomology', 'WO(%d) h1 c1^%d nontrivial' % (n, n),
                      w.is_cocycle(gv) and w.is_nontrivial(gv))
    aff = affine_algebra()
    dims, cycles = lie_homology_delta(aff)
    results.check('cohomology', 'aff with C_delta: dims (0, 1, 1)',
                  dims == [0, 1, 1], dims)
    results.check('cohomology', 'aff with C_delta: X^Y is a 2-cycle',
                  cycles[2] == [{'X^Y': ONE}], cycles[2])
    results.check('cohomology', 'aff trivial cohomology (1, 1, 0)',
                  ce_cohomology_dims(aff) == [1, 1, 0])
    a2 = truncated_vector_fields(2)
    results.check('cohomology', 'Z1, Z2 truncated: (1, 2, 1)',
                  ce_cohomology_dims(a2) == [1, 2, 1])


def suite_appendix(params, seed, results):
    report = verify_appendix(params['psi_fixture'], params['bpsi_fixture'])
    for r in report:
        results.check('appendix', r['identity'], r['passed'], r['diff'],
                      r.get('informational', False))
    bad = None
    for trial in range(params['trials']):
        c = seed.formal_cochain(1 + trial % 2)
        if b_cochain(b_cochain(c)) != 0:
            bad = bad or ('b b', str(c))
        if c.level > 1 and B_cochain(B_cochain(c)) != 0:
            bad = bad or ('B B', str(c))
        if b_cochain(B_cochain(c)) + B_cochain(b_cochain(c)) != 0:
            bad = bad or ('bB + Bb', str(c))
    results.check('appendix', 'b b = B B = bB + Bb = 0 on random cochains',
                  bad is None, bad)


SUITES = {'hopf': suite_hopf,
          'duality': suite_duality,
          'action': suite_action,
          'matched-pair': suite_matched_pair,
          'cyclic': suite_cyclic,
          'cohomology': suite_cohomology,
          'appendix': suite_appendix}

def run_suites(names, params):
    if names == 'all' or names == ['all']:
        names = sorted(SUITES)
    elif isinstance(names, str):
        names = [names]
    results = Results()
    for name in names:
        if name not in SUITES:
            raise SupportError('unknown suite %s' % name)
        seed = Seed(params['seed'])
        logger.info('running suite %s (seed %d)', name, params['seed'])
        SUITES[name](params, seed, results)
    return results
