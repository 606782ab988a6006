#!/usr/bin/env python

# The cyclic module of a Hopf algebra with modular pair (delta, 1).

"""Level n is H^{(x) n}; level 0 holds the scalars under the key ().

    faces      d_i : level n-1 -> n   (0 <= i <= n)
    degeneracy s_i : level n+1 -> n   (counit on leg i)
    cyclic     t_n(h1 (x) ... (x) hn) = Delta^{n-1} S~(h1) . (h2 (x) ... (x) hn (x) 1)

b raises the level by one and B lowers it by one. A tensor at level n+1 is
the cochain of degree n seen through the characteristic map.

The algebra handle supplies unit() and mul/coproduct/antipode/
twisted_antipode as dicts over basis keys, plus counit and modular.
"""

import logging
from fractions import Fraction
from itertools import permutations

from Kernel import Combination, ZERO, ONE
from Utility import factorial, frac, fraction_json, SupportError

logger = logging.getLogger(__name__)


class CyclicTensor(Combination):
    __slots__ = ('level', 'algebra')

    def __init__(self, terms = None, level = 0, algebra = None):
        Combination.__init__(self, terms)
        for k in self.terms:
            assert(len(k) == level)
        self.level = level
        self.algebra = algebra

    def shape(self):
        return (self.level, self.algebra.name)

    def _new(self, terms):
        return CyclicTensor(terms, self.level, self.algebra)

    @staticmethod
    def scalar(c, algebra):
        return CyclicTensor({(): c}, 0, algebra)

    @staticmethod
    def zero(level, algebra):
        return CyclicTensor({}, level, algebra)

    # Legwise tensor of basis keys
    @staticmethod
    def basis_tensor(keys, algebra, c = 1):
        return CyclicTensor({tuple(keys): c}, len(keys), algebra)

    def sorted_terms(self):
        key_str = self.algebra.key_str
        return sorted(self.terms.items(),
                      key = lambda kc: [key_str(m) for m in kc[0]])

    def to_json(self):
        return [{'coefficient': fraction_json(c),
                 'monomial': [self.algebra.key_json(m) for m in k]}
                for k, c in self.sorted_terms()]

    def __str__(self):
        key_str = self.algebra.key_str
        return ' + '.join('%s*(%s)' % (c, ' # '.join(key_str(m) for m in k))
                          for k, c in self.sorted_terms()) or '0'


def _accumulate(acc, key, c):
    acc[key] = acc.get(key, ZERO) + c

def leg_product(algebra, keys1, keys2):
    partial = {(): ONE}
    for a, b in zip(keys1, keys2):
        prod = algebra.mul(a, b)
        nxt = {}
        for k, c in partial.items():
            for m, c2 in prod.items():
                _accumulate(nxt, k + (m,), c * c2)
        partial = nxt
    return partial

# Delta^{legs-1}(key) as a dict of legs-tuples
def iterated_coproduct(algebra, key, legs):
    assert(legs >= 1)
    out = {(key,): ONE}
    for _ in range(legs - 1):
        nxt = {}
        for k, c in out.items():
            for pair, c2 in algebra.coproduct(k[-1]).items():
                _accumulate(nxt, k[:-1] + tuple(pair), c * c2)
        out = nxt
    return out


def face(i, t):
    n = t.level + 1
    if i < 0 or i > n:
        raise SupportError('face %d out of range at level %d' % (i, n))
    alg = t.algebra
    unit = alg.unit()
    def image(k):
        if i == 0:
            return dict(((u,) + k, c) for u, c in unit.items())
        if i == n:
            return dict((k + (u,), c) for u, c in unit.items())
        return dict((k[:i - 1] + tuple(pair) + k[i:], c)
                    for pair, c in alg.coproduct(k[i - 1]).items())
    return t.map_linear(image, lambda terms: CyclicTensor(terms, n, alg))

def degeneracy(i, t):
    n = t.level - 1
    if i < 0 or i > n:
        raise SupportError('degeneracy %d out of range at level %d' % (i, n))
    alg = t.algebra
    def image(k):
        e = alg.counit(k[i])
        return {k[:i] + k[i + 1:]: e} if e else {}
    return t.map_linear(image, lambda terms: CyclicTensor(terms, n, alg))

def simplicial_op(kind, i, t):
    if kind == 'face':
        return face(i, t)
    if kind == 'degeneracy':
        return degeneracy(i, t)
    raise SupportError('unknown simplicial operator %s' % kind)

def cyclic_op(t):
    n = t.level
    if n < 1:
        raise SupportError('cyclic operator needs level >= 1')
    alg = t.algebra
    def image(k):
        out = {}
        for s, cs in alg.twisted_antipode(k[0]).items():
            for legs, c in iterated_coproduct(alg, s, n).items():
                # the trailing leg is multiplied by 1
                for key, c2 in leg_product(alg, legs[:-1], k[1:]).items():
                    _accumulate(out, key + (legs[-1],), cs * c * c2)
        return out
    return t.map_linear(image, lambda terms: CyclicTensor(terms, n, alg))

def cyclic_power(t, k):
    for _ in range(k):
        t = cyclic_op(t)
    return t

# lambda = (-1)^n t_n
def signed_cyclic(t):
    return cyclic_op(t).scale((-1) ** t.level)

def hochschild_b(t):
    n = t.level + 1
    out = CyclicTensor.zero(n, t.algebra)
    for i in range(n + 1):
        out = out + face(i, t).scale((-1) ** i)
    return out

def connes_B(t):
    """B = (sum_{j<n} lambda^j) s_{n-1} t_n (1 - lambda) on level n."""
    n = t.level
    if n < 1:
        raise SupportError('B needs level >= 1')
    u = t - signed_cyclic(t)
    u = degeneracy(n - 1, cyclic_op(u))
    out = CyclicTensor.zero(n - 1, t.algebra)
    term = u
    for j in range(n):
        out = out + term
        if j + 1 < n:
            term = signed_cyclic(term)
    return out

def t_normalize(t):
    """(h0 (x) h1 ... (x) hn) -> Delta^{n-1} S~(h0) . (h1 (x) ... (x) hn).

    At n = 0 the image of h0 is delta(h0).
    """
    n = t.level - 1
    if n < 0:
        raise SupportError('t needs level >= 1')
    alg = t.algebra
    def image(k):
        out = {}
        for s, cs in alg.twisted_antipode(k[0]).items():
            if n == 0:
                _accumulate(out, (), cs * alg.counit(s))
                continue
            for legs, c in iterated_coproduct(alg, s, n).items():
                for key, c2 in leg_product(alg, legs, k[1:]).items():
                    _accumulate(out, key, cs * c * c2)
        return out
    return t.map_linear(image, lambda terms: CyclicTensor(terms, n, alg))

def _sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign

# sum over permutations of sign * X_{s(1)} (x) ... (x) X_{s(n)}
def antisymmetrize(keys, algebra):
    out = {}
    for perm in permutations(range(len(keys))):
        _accumulate(out, tuple(keys[p] for p in perm), _sign(perm))
    return CyclicTensor(out, len(keys), algebra)


# Lambda^k g -> level k: x_1 ^ ... ^ x_k -> antisymmetrization / k!
def lie_chain(keys, algebra):
    if not keys:
        return CyclicTensor.scalar(1, algebra)
    scale = Fraction(1, factorial(len(keys)))
    return antisymmetrize(keys, algebra).scale(scale)

def ce_boundary_defects(cx, algebra, generators):
    """Wedges where b alpha != 0 or B alpha != alpha d.

    cx is a Chevalley-Eilenberg complex whose basis vectors are named by
    `generators`, a list of algebra keys; d is its boundary with
    coefficients in the character. Yields (degree, wedge, identity).
    """
    for k in range(1, len(cx.bases)):
        d = cx.boundary(k)
        for col, s in enumerate(cx.bases[k]):
            chain = lie_chain([generators[i] for i in s], algebra)
            if hochschild_b(chain) != 0:
                yield (k, cx.wedge_name(s), 'b alpha = 0')
            image = CyclicTensor.zero(k - 1, algebra)
            for row, r in enumerate(cx.bases[k - 1]):
                if d[row, col] != 0:
                    image = image + lie_chain(
                        [generators[i] for i in r], algebra).scale(
                            frac(d[row, col]))
            if connes_B(chain) != image:
                yield (k, cx.wedge_name(s), 'B alpha = alpha d')


def lambda_relations(t):
    """Yield (relation, lhs, rhs) for every relation with input t."""
    n = t.level
    F, S, T = face, degeneracy, cyclic_op
    for j in range(n + 3):
        for i in range(j):
            yield ('d%d d%d = d%d d%d' % (j, i, i, j - 1),
                   F(j, F(i, t)), F(i, F(j - 1, t)))
    for j in range(n - 1):
        for i in range(j + 1):
            yield ('s%d s%d = s%d s%d' % (j, i, i, j + 1),
                   S(j, S(i, t)), S(i, S(j + 1, t)))
    for i in range(n + 2):
        for j in range(n + 1):
            lhs = S(j, F(i, t))
            if i < j:
                yield ('s%d d%d = d%d s%d' % (j, i, i, j - 1), lhs,
                       F(i, S(j - 1, t)))
            elif i == j or i == j + 1:
                yield ('s%d d%d = id' % (j, i), lhs, t)
            else:
                yield ('s%d d%d = d%d s%d' % (j, i, i - 1, j), lhs,
                       F(i - 1, S(j, t)))
    yield ('t d0 = d%d' % (n + 1), T(F(0, t)), F(n + 1, t))
    if n >= 1:
        for i in range(1, n + 2):
            yield ('t d%d = d%d t' % (i, i - 1), T(F(i, t)), F(i - 1, T(t)))
        yield ('t^%d = id' % (n + 1), cyclic_power(t, n + 1), t)
    if n >= 2:
        for i in range(1, n):
            yield ('t s%d = s%d t' % (i, i - 1), T(S(i, t)), S(i - 1, T(t)))
        yield ('t s0 = s%d t^2' % (n - 1), T(S(0, t)), S(n - 1, T(T(t))))

def bicomplex_relations(t):
    """Yield (relation, value) pairs whose value must vanish."""
    bt = hochschild_b(t)
    yield ('b b = 0', hochschild_b(bt))
    if t.level == 0:
        yield ('B b = 0', connes_B(bt))
        return
    Bt = connes_B(t)
    if t.level > 1:
        yield ('B B = 0', connes_B(Bt))
    yield ('b B + B b = 0', hochschild_b(Bt) + connes_B(bt))

def check_relations(tensors, relations = lambda_relations):
    """First failure as (relation, tensor) or None."""
    for t in tensors:
        for item in relations(t):
            name, values = item[0], item[1:]
            ok = values[0] == values[1] if len(values) == 2 else values[0] == 0
            if not ok:
                logger.warning('relation %s fails on %s', name, t)
                return name, t
    return None

def basis_tensors(algebra, level, max_degree):
    """Basis tensors of the given level with total degree <= max_degree."""
    keys = algebra.basis(max_degree)
    degree = getattr(algebra, 'key_degree', lambda k: 0)
    out = [()]
    for _ in range(level):
        out = [k + (m,) for k in out for m in keys
               if sum(degree(x) for x in k) + degree(m) <= max_degree]
    return [CyclicTensor.basis_tensor(k, algebra) for k in out]
