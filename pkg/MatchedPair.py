#!/usr/bin/env python

# Matched pairs of finite groups: the bicrossed product Hopf algebra H(G),
# its dual crossed product and the maps theta and t.

"""An exact factorization G = G1 G2 writes every a k (a in G2, k in G1) as
a(k) (a.k). H(G) has basis eps_a X_k with

    (eps_a X_k)(eps_b X_l) = [a.k = b] eps_a X_{kl}
    Delta(eps_c X_k) = sum_{ba = c} eps_a X_k (x) eps_b X_{a(k)}
    eps(eps_a X_k) = [a = 1],  S(eps_a X_k) = eps_{(a.k)^-1} X_{a(k)^-1}

and the dual crossed product has basis d_k U*_a with
(d_k U*_a)(d_l U*_b) = [a(k) = l] d_k U*_{ba}; the two are paired by
<eps_c X_m, d_k U*_a> = [c = a][m = k].
"""

import logging
from itertools import product

import numpy as np
import sympy
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import CyclicGroup, SymmetricGroup

from Kernel import ZERO, ONE, qq, qq_zeros, matrix_rank
from HopfCyclic import CyclicTensor, t_normalize
from Utility import frac, AxiomViolation, FactorizationError, FixtureError, \
     SupportError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """Multiplication table on 0..n-1, checked on construction."""

    def __init__(self, table, labels = None, name = 'G', elements = None):
        table = np.asarray(table, dtype = int)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or \
                table.shape[0] == 0:
            raise FactorizationError('multiplication table must be square')
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise FactorizationError('table entries out of range')
        r = np.arange(n)
        ids = [e for e in range(n)
               if (table[e] == r).all() and (table[:, e] == r).all()]
        if not ids:
            raise FactorizationError('no identity element')
        e = ids[0]
        inverse = np.full(n, -1, dtype = int)
        for g in range(n):
            hs = np.nonzero(table[g] == e)[0]
            if len(hs) != 1 or table[hs[0], g] != e:
                raise FactorizationError('element %d has no inverse' % g)
            inverse[g] = hs[0]
        left = table[table[:, :, None], r[None, None, :]]
        right = table[r[:, None, None], table[None, :, :]]
        if not np.array_equal(left, right):
            raise FactorizationError('table is not associative')
        self.table = table
        self.inverse = inverse
        self.identity = e
        self.order = n
        self.name = name
        self.labels = list(labels) if labels is not None else \
            [str(g) for g in range(n)]
        self.elements = list(elements) if elements is not None else None

    def __len__(self):
        return self.order

    def mul(self, g, h):
        return int(self.table[g, h])

    def inv(self, g):
        return int(self.inverse[g])

    def product(self, *gs):
        out = self.identity
        for g in gs:
            out = self.mul(out, g)
        return out

    def index(self, element):
        if not isinstance(element, Permutation):
            element = Permutation(list(element))
        return self.elements.index(element)

    def subgroup(self, gens):
        """Indices of the subgroup generated by the given element indices."""
        gens = [self.elements[g] for g in gens]
        if not gens:
            return [self.identity]
        return sorted(self.index(p) for p in PermutationGroup(gens).generate())

    def is_subgroup(self, members):
        members = set(members)
        if self.identity not in members:
            return False
        return all(self.mul(g, self.inv(h)) in members
                   for g in members for h in members)


def _label(p):
    return ''.join('(%s)' % ' '.join(str(i + 1) for i in c)
                   for c in p.cyclic_form) or '()'

# (g h)(x) = g(h(x)); sympy's p * q applies p first
def permutation_group(group, name, elements = None, labels = None):
    """FiniteGroup on the elements of a sympy PermutationGroup.

    Elements are sorted by array form unless an order is given.
    """
    if elements is None:
        elements = sorted(group.generate(), key = lambda p: p.array_form)
    index = dict((p, i) for i, p in enumerate(elements))
    table = [[index[h * g] for h in elements] for g in elements]
    return FiniteGroup(table, labels or [_label(p) for p in elements], name,
                       elements)

# C_n with element i = r^i
def cyclic_group(n):
    group = CyclicGroup(n)
    r = group.generators[0]
    return permutation_group(group, 'C%d' % n, [r ** i for i in range(n)],
                             ['r^%d' % i for i in range(n)])

def symmetric_group_3():
    return permutation_group(SymmetricGroup(3), 'S3')

# x -> x + 1 and x -> 2x on Z/7
def frobenius_group_21():
    return permutation_group(
        PermutationGroup([Permutation([1, 2, 3, 4, 5, 6, 0]),
                          Permutation([0, 2, 4, 6, 1, 3, 5])]), 'F21')


class Factorization:
    """Exact factorization G = G1 G2 with its decomposition table."""

    def __init__(self, group, g1, g2, name = None):
        g1, g2 = sorted(set(g1)), sorted(set(g2))
        for label, members in (('G1', g1), ('G2', g2)):
            if not group.is_subgroup(members):
                raise FactorizationError('%s is not a subgroup' % label)
        if len(g1) * len(g2) != group.order:
            raise FactorizationError('|G1| |G2| = %d differs from |G| = %d' %
                                     (len(g1) * len(g2), group.order))
        split = np.full((group.order, 2), -1, dtype = int)
        for k in g1:
            for a in g2:
                g = group.mul(k, a)
                if split[g, 0] >= 0:
                    raise FactorizationError('decomposition of %s is not unique' %
                                             group.labels[g])
                split[g] = (k, a)
        assert((split >= 0).all())
        self.group = group
        self.g1, self.g2 = g1, g2
        self.split = split
        self.name = name or '%s=%d*%d' % (group.name, len(g1), len(g2))
        logger.debug('factorization %s: |G1| = %d, |G2| = %d',
                     self.name, len(g1), len(g2))

    # g = k a
    def decompose(self, g):
        k, a = self.split[g]
        return int(k), int(a)

    # a(k), the G1-part of a k
    def act(self, a, k):
        return int(self.split[self.group.mul(a, k), 0])

    # a.k, the G2-part of a k
    def dot(self, a, k):
        return int(self.split[self.group.mul(a, k), 1])

    def label(self, g):
        return self.group.labels[g]

    def matched_pair_counterexample(self):
        """First triple violating the matched-pair identities, or None.

        a(k1 k2) = a(k1) ((a.k1)(k2))   and   (a1 a2).k = (a1.(a2(k))) (a2.k)
        """
        G = self.group
        for a, k1, k2 in product(self.g2, self.g1, self.g1):
            if self.act(a, G.mul(k1, k2)) != \
                    G.mul(self.act(a, k1), self.act(self.dot(a, k1), k2)):
                return ('a(k1 k2)', a, k1, k2)
            if self.dot(self.dot(a, k1), k2) != self.dot(a, G.mul(k1, k2)):
                return ('a.(k1 k2)', a, k1, k2)
        for a1, a2, k in product(self.g2, self.g2, self.g1):
            if self.dot(G.mul(a1, a2), k) != \
                    G.mul(self.dot(a1, self.act(a2, k)), self.dot(a2, k)):
                return ('(a1 a2).k', a1, a2, k)
            if self.act(G.mul(a1, a2), k) != self.act(a1, self.act(a2, k)):
                return ('(a1 a2)(k)', a1, a2, k)
        return None


def named_factorization(name):
    """Built-in factorizations.

    s3   S3 = <(1 2 3)> <(1 2)>      f21  C7 C3 inside the Frobenius group
    c6   C6 = <r^2> <r^3>            cN   C_N with trivial G2
    cN-dual   C_N with trivial G1    s3-group, s3-functions   trivial splits
    """
    if name == 's3':
        G = symmetric_group_3()
        return Factorization(G, G.subgroup([G.index((1, 2, 0))]),
                             G.subgroup([G.index((1, 0, 2))]), 's3')
    if name == 'f21':
        G = frobenius_group_21()
        return Factorization(G, G.subgroup([G.index((1, 2, 3, 4, 5, 6, 0))]),
                             G.subgroup([G.index((0, 2, 4, 6, 1, 3, 5))]),
                             'f21')
    if name == 'c6':
        G = cyclic_group(6)
        return Factorization(G, G.subgroup([2]), G.subgroup([3]), 'c6')
    if name in ('s3-group', 's3-functions'):
        G = symmetric_group_3()
        whole, trivial = list(range(G.order)), [G.identity]
        if name == 's3-group':
            return Factorization(G, whole, trivial, name)
        return Factorization(G, trivial, whole, name)
    if name.startswith('c'):
        base, _, suffix = name[1:].partition('-')
        if base.isdigit() and int(base) > 0 and suffix in ('', 'dual'):
            G = cyclic_group(int(base))
            whole, trivial = list(range(G.order)), [G.identity]
            if suffix:
                return Factorization(G, trivial, whole, name)
            return Factorization(G, whole, trivial, name)
    raise SupportError('unknown group %s' % name)

def read_group_table(path):
    """Rows of product indices, then 'g1:' and 'g2:' member lines."""
    rows, members, lineno = [], {}, 0
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            head, sep, rest = line.partition(':')
            fields = rest.split() if sep else line.split()
            try:
                values = [int(x) for x in fields]
            except ValueError:
                raise FixtureError(path, lineno, 'expected integers')
            if sep:
                if head.strip() not in ('g1', 'g2'):
                    raise FixtureError(path, lineno, 'unknown key %s' % head)
                members[head.strip()] = values
            else:
                if rows and len(values) != len(rows[0]):
                    raise FixtureError(path, lineno, 'row length %d, expected %d'
                                       % (len(values), len(rows[0])))
                rows.append(values)
    if 'g1' not in members or 'g2' not in members:
        raise FixtureError(path, lineno, 'missing g1: or g2: line')
    return Factorization(FiniteGroup(rows, name = path), members['g1'],
                         members['g2'], path)

def load_factorization(spec):
    if spec.endswith('.txt') or '/' in spec:
        return read_group_table(spec)
    return named_factorization(spec)


def _acc(out, key, c):
    out[key] = out.get(key, ZERO) + c

def _linear(f, u):
    out = {}
    for k, c in u.items():
        for k2, c2 in f(k).items():
            _acc(out, k2, c * c2)
    return dict((k, c) for k, c in out.items() if c)

def _clean(u):
    return dict((k, frac(c)) for k, c in u.items() if c)


class DualCrossed:
    """Functions on G1 crossed by G2; keys (k, a) stand for d_k U*_a."""

    def __init__(self, fact):
        self.fact = fact
        self.keys = [(k, a) for a in fact.g2 for k in fact.g1]

    def unit(self):
        e = self.fact.group.identity
        return dict(((k, e), ONE) for k in self.fact.g1)

    def mul_keys(self, x, y):
        (k, a), (l, b) = x, y
        if self.fact.act(a, k) != l:
            return {}
        return {(k, self.fact.group.mul(b, a)): ONE}

    def mul(self, u, v):
        out = {}
        for x, c1 in u.items():
            for y, c2 in v.items():
                for z, c in self.mul_keys(x, y).items():
                    _acc(out, z, c1 * c2 * c)
        return _clean(out)

    def trace(self, u, kind = 'sum'):
        """tau0(d_k U*_a) = [a = 1], divided by |G1| when normalized."""
        e = self.fact.group.identity
        s = sum((c for (k, a), c in u.items() if a == e), ZERO)
        if kind == 'normalized':
            return s / len(self.fact.g1)
        if kind != 'sum':
            raise SupportError('unknown trace %s' % kind)
        return s


class BicrossedHopf:
    """H(G) with exact structure constants; keys (a, k) stand for eps_a X_k."""

    def __init__(self, fact):
        self.fact = fact
        self.name = 'H(%s)' % fact.name
        self.keys = [(a, k) for a in fact.g2 for k in fact.g1]
        self.position = dict((key, i) for i, key in enumerate(self.keys))
        self.dual = DualCrossed(fact)
        G, d = fact.group, len(self.keys)
        e = G.identity
        self.structure = np.zeros((d, d, d), dtype = object)
        self.costructure = np.zeros((d, d, d), dtype = object)
        self.counit_vector = np.zeros(d, dtype = object)
        self.antipode_matrix = np.zeros((d, d), dtype = object)
        for i, (a, k) in enumerate(self.keys):
            for b, l in self.keys:
                if fact.dot(a, k) == b:
                    self.structure[i, self.position[(b, l)],
                                   self.position[(a, G.mul(k, l))]] += 1
            for a2 in fact.g2:
                # eps_a2 X_k (x) eps_b X_{a2(k)} with b a2 = a
                b = G.mul(a, G.inv(a2))
                self.costructure[i, self.position[(a2, k)],
                                 self.position[(b, fact.act(a2, k))]] += 1
            self.counit_vector[i] = 1 if a == e else 0
            s = self.position[(G.inv(fact.dot(a, k)), G.inv(fact.act(a, k)))]
            self.antipode_matrix[i, s] += 1
        self._mul = {}
        self._left = {}
        self.character = self._modular_character()

    def _row(self, vec):
        return dict((self.keys[j], frac(c)) for j, c in enumerate(vec) if c)

    def unit(self):
        e = self.fact.group.identity
        return dict(((a, e), ONE) for a in self.fact.g2)

    def mul(self, x, y):
        key = (x, y)
        if key not in self._mul:
            self._mul[key] = self._row(self.structure[self.position[x],
                                                      self.position[y]])
        return self._mul[key]

    def coproduct(self, x):
        i = self.position[x]
        out = {}
        for j, l in zip(*np.nonzero(self.costructure[i])):
            out[(self.keys[j], self.keys[l])] = frac(self.costructure[i, j, l])
        return out

    def counit(self, x):
        return frac(self.counit_vector[self.position[x]])

    def antipode(self, x):
        return self._row(self.antipode_matrix[self.position[x]])

    def modular(self, x):
        return self.character[x]

    def twisted_antipode(self, x):
        out = {}
        for (x1, x2), c in self.coproduct(x).items():
            d = self.modular(x1)
            if d:
                for y, c2 in self.antipode(x2).items():
                    _acc(out, y, c * d * c2)
        return _clean(out)

    def basis(self, max_degree = None):
        return list(self.keys)

    def key_degree(self, x):
        return 0

    def key_json(self, x):
        return {'eps': self.fact.label(x[0]), 'X': self.fact.label(x[1])}

    def key_str(self, x):
        return 'e[%s]X[%s]' % (self.fact.label(x[0]), self.fact.label(x[1]))

    # <eps_c X_m, d_k U*_a> = [c = a][m = k]
    def pairing(self, h, x):
        return ONE if h[0] == x[1] and h[1] == x[0] else ZERO

    def left_action(self, h, x):
        """h |> x, the transpose of right multiplication by h."""
        if (h, x) in self._left:
            return self._left[(h, x)]
        out = {}
        for h2 in self.keys:
            c = sum((c2 * self.pairing(y, x)
                     for y, c2 in self.mul(h2, h).items()), ZERO)
            if c:
                out[(h2[1], h2[0])] = c
        self._left[(h, x)] = out
        return out

    def right_action(self, x, h):
        out = {}
        for h2 in self.keys:
            c = sum((c2 * self.pairing(y, x)
                     for y, c2 in self.mul(h, h2).items()), ZERO)
            if c:
                out[(h2[1], h2[0])] = c
        return out

    def _modular_character(self):
        """delta with tau0(h |> x) = delta(h) tau0(x) for every x."""
        out = {}
        for h in self.keys:
            value = None
            for x in self.dual.keys:
                lhs = self.dual.trace(self.left_action(h, x))
                rhs = self.dual.trace({x: ONE})
                if rhs == 0:
                    if lhs != 0:
                        raise AxiomViolation('tau0(h |> x) = delta(h) tau0(x)',
                                             (self.key_str(h), x))
                    continue
                if value is None:
                    value = lhs / rhs
                elif lhs != value * rhs:
                    raise AxiomViolation('tau0(h |> x) = delta(h) tau0(x)',
                                         (self.key_str(h), x))
            out[h] = value if value is not None else ZERO
        return out


def left_action_formula(fact, h, l, f, a):
    """(h X_l) |> (f U*_a) = (m -> h(a.m) f(m l)) U*_a.

    h is a dict on G2, f a dict on G1; the result is a dict on G1.
    """
    G = fact.group
    out = {}
    for m in fact.g1:
        c = h.get(fact.dot(a, m), ZERO) * f.get(G.mul(m, l), ZERO)
        if c:
            out[m] = c
    return out, a

def right_action_formula(fact, f, a, h, l):
    """(f U*_a) <| (h X_l) = h(a) (m -> f(l m)) U*_{a.l}."""
    G = fact.group
    ha = h.get(a, ZERO)
    out = {}
    for m in fact.g1:
        c = ha * f.get(G.mul(l, m), ZERO)
        if c:
            out[m] = c
    return out, fact.dot(a, l)


HOPF_AXIOMS = ('unit', 'coassociativity', 'counit', 'antipode',
               'Delta(xy) = Delta(x) Delta(y)', 'eps(xy) = eps(x) eps(y)',
               'associativity')

# Hopf axioms on basis keys; yields (identity, counterexample)
def hopf_axiom_failures(alg, keys):
    unit = alg.unit()
    def mul(u, v):
        out = {}
        for x, c1 in u.items():
            for y, c2 in v.items():
                for z, c in alg.mul(x, y).items():
                    _acc(out, z, c1 * c2 * c)
        return _clean(out)
    def tmul(u, v):
        out = {}
        for (x1, x2), c1 in u.items():
            for (y1, y2), c2 in v.items():
                for z1, d1 in alg.mul(x1, y1).items():
                    for z2, d2 in alg.mul(x2, y2).items():
                        _acc(out, (z1, z2), c1 * c2 * d1 * d2)
        return _clean(out)
    def cop(u):
        return _linear(alg.coproduct, u)
    for x in keys:
        u = {x: ONE}
        if mul(unit, u) != u or mul(u, unit) != u:
            yield 'unit', alg.key_str(x)
        dx = alg.coproduct(x)
        left, right = {}, {}
        for (x1, x2), c in dx.items():
            for (y1, y2), c2 in alg.coproduct(x1).items():
                _acc(left, (y1, y2, x2), c * c2)
            for (y1, y2), c2 in alg.coproduct(x2).items():
                _acc(right, (x1, y1, y2), c * c2)
        if _clean(left) != _clean(right):
            yield 'coassociativity', alg.key_str(x)
        l1, r1 = {}, {}
        for (x1, x2), c in dx.items():
            _acc(l1, x2, c * alg.counit(x1))
            _acc(r1, x1, c * alg.counit(x2))
        if _clean(l1) != u or _clean(r1) != u:
            yield 'counit', alg.key_str(x)
        e = alg.counit(x)
        expected = _clean(dict((k, e * c) for k, c in unit.items()))
        sl, sr = {}, {}
        for (x1, x2), c in dx.items():
            for z, c2 in mul(alg.antipode(x1), {x2: ONE}).items():
                _acc(sl, z, c * c2)
            for z, c2 in mul({x1: ONE}, alg.antipode(x2)).items():
                _acc(sr, z, c * c2)
        if _clean(sl) != expected or _clean(sr) != expected:
            yield 'antipode', alg.key_str(x)
    for x in keys:
        for y in keys:
            xy = alg.mul(x, y)
            if cop(xy) != tmul(alg.coproduct(x), alg.coproduct(y)):
                yield 'Delta(xy) = Delta(x) Delta(y)', (alg.key_str(x),
                                                        alg.key_str(y))
            exy = sum((c * alg.counit(z) for z, c in xy.items()), ZERO)
            if exy != alg.counit(x) * alg.counit(y):
                yield 'eps(xy) = eps(x) eps(y)', (alg.key_str(x), alg.key_str(y))
            for z in keys:
                if mul(mul({x: ONE}, {y: ONE}), {z: ONE}) != \
                        mul({x: ONE}, mul({y: ONE}, {z: ONE})):
                    yield 'associativity', (alg.key_str(x), alg.key_str(y),
                                            alg.key_str(z))

def build_hopf(fact, verify = True):
    hopf = BicrossedHopf(fact)
    if verify:
        for identity, where in hopf_axiom_failures(hopf, hopf.keys):
            raise AxiomViolation(identity, where)
        logger.info('%s: Hopf axioms hold on %d basis elements',
                    hopf.name, len(hopf.keys))
    return hopf


def theta(hopf, hkeys, xkeys, kind = 'sum'):
    """tau0(h0 |> x0 ... hn |> xn) on basis tuples."""
    prod = hopf.dual.unit()
    for h, x in zip(hkeys, xkeys):
        prod = hopf.dual.mul(prod, hopf.left_action(h, x))
        if not prod:
            return ZERO
    return hopf.dual.trace(prod, kind)

def theta_matrix(hopf, n, kind = 'sum'):
    """Rows: dual basis (n+1)-tuples; columns: H basis (n+1)-tuples."""
    hs = list(product(hopf.keys, repeat = n + 1))
    xs = list(product(hopf.dual.keys, repeat = n + 1))
    m = qq_zeros(len(xs), len(hs))
    for j, hk in enumerate(hs):
        for i, xk in enumerate(xs):
            c = theta(hopf, hk, xk, kind)
            if c:
                m[i, j] = qq(c)
    return m

# t of the matched pair is the generic normalization of the cyclic module
t_map = t_normalize

def t_matrix(hopf, n):
    hs = list(product(hopf.keys, repeat = n + 1))
    rows = dict((k, i) for i, k in enumerate(product(hopf.keys, repeat = n)))
    m = qq_zeros(len(rows), len(hs))
    for j, hk in enumerate(hs):
        image = t_normalize(CyclicTensor.basis_tensor(hk, hopf))
        for k, c in image.terms.items():
            m[rows[k], j] = qq(c)
    return m

def kernel_ranks(hopf, n, kind = 'sum'):
    """(rank theta, rank t, rank of both stacked); equal iff Ker theta = Ker t."""
    th = theta_matrix(hopf, n, kind)
    tt = t_matrix(hopf, n)
    ranks = (matrix_rank(th), matrix_rank(tt),
             matrix_rank(sympy.Matrix.vstack(th, tt)))
    logger.info('%s level %d: ranks %s', hopf.name, n, ranks)
    return ranks

def is_trace(hopf, kind = 'sum'):
    d = hopf.dual
    for x in d.keys:
        for y in d.keys:
            if d.trace(d.mul_keys(x, y), kind) != d.trace(d.mul_keys(y, x), kind):
                return False
    return True
