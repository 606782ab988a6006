#!/usr/bin/env python

# The Hopf algebra H(1): PBW arithmetic, coproduct, counit, antipodes.

"""Elements are combinations of PBW monomials delta^a X^b Y^c with

    [X, delta_n] = delta_{n+1},  [Y, X] = X,  [Y, delta_n] = n delta_n,

and the coproduct

    Delta Y = Y (x) 1 + 1 (x) Y,  Delta delta_1 = delta_1 (x) 1 + 1 (x) delta_1,
    Delta X = X (x) 1 + 1 (x) X + delta_1 (x) Y.
"""

import logging
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from Kernel import Combination, ZERO, ONE
from Utility import binomial, fraction_json, latex_sum, \
     OrderMismatchError, SupportError

logger = logging.getLogger(__name__)

# Coproducts of delta_n kept in the cache
N_MAX = 12


def _strip(deltas):
    deltas = list(deltas)
    while deltas and deltas[-1] == 0:
        deltas.pop()
    return tuple(deltas)

# delta-monomials are exponent tuples (a_1, ..., a_k)
def dmul(a, b):
    if len(a) < len(b):
        a, b = b, a
    return _strip(tuple(x + (b[i] if i < len(b) else 0)
                        for i, x in enumerate(a)))

def dweight(a):
    return sum((j + 1) * e for j, e in enumerate(a))

def dgenerator(n):
    return _strip((0,) * (n - 1) + (1,))

# D: delta_n -> delta_{n+1}, extended as a derivation
@lru_cache(maxsize = None)
def dderiv(a):
    out = {}
    for j, e in enumerate(a):
        if not e:
            continue
        b = list(a) + [0]
        b[j] -= 1
        b[j + 1] += 1
        b = _strip(b)
        out[b] = out.get(b, 0) + e
    return tuple(out.items())

@lru_cache(maxsize = None)
def dderiv_power(a, j):
    if j == 0:
        return ((a, 1),)
    out = {}
    for b, c in dderiv_power(a, j - 1):
        for b2, c2 in dderiv(b):
            out[b2] = out.get(b2, 0) + c * c2
    return tuple((k, v) for k, v in out.items() if v)

# Exponent tuples of all delta-monomials of a given weight
@lru_cache(maxsize = None)
def delta_monomials(weight, max_index = None):
    if max_index is None:
        max_index = weight
    if weight == 0:
        return ((),)
    out = []
    for n in range(min(weight, max_index), 0, -1):
        for rest in delta_monomials(weight - n, n):
            out.append(dmul(rest, dgenerator(n)))
    return tuple(sorted(set(out)))


class PBWMonomial(namedtuple('PBWMonomial', 'deltas x y')):
    """delta_1^{a_1} ... delta_k^{a_k} X^x Y^y in canonical order."""

    __slots__ = ()

    def __new__(cls, deltas = (), x = 0, y = 0):
        return super(PBWMonomial, cls).__new__(cls, _strip(deltas), x, y)

    @property
    def weight(self):
        return dweight(self.deltas) + self.x

    # Weight plus Y-power; the enumeration degree
    @property
    def degree(self):
        return self.weight + self.y

    def is_delta(self):
        return self.x == 0 and self.y == 0

    def sort_key(self):
        return (self.degree, self.deltas, self.x, self.y)

    def to_json(self):
        out = dict(('delta%d' % (j + 1), e) for j, e in enumerate(self.deltas) if e)
        if self.x:
            out['X'] = self.x
        if self.y:
            out['Y'] = self.y
        return out

    def to_latex(self):
        def power(s, e):
            return s if e == 1 else '%s^{%d}' % (s, e)
        out = ''.join(power('\\delta_{%d}' % (j + 1), e)
                      for j, e in enumerate(self.deltas) if e)
        if self.x:
            out += power('X', self.x)
        if self.y:
            out += power('Y', self.y)
        return out

    def __str__(self):
        def power(s, e):
            return s if e == 1 else '%s^%d' % (s, e)
        parts = [power('d%d' % (j + 1), e) for j, e in enumerate(self.deltas) if e]
        if self.x:
            parts.append(power('X', self.x))
        if self.y:
            parts.append(power('Y', self.y))
        return '*'.join(parts) or '1'

ONE_MONO = PBWMonomial()


class HElement(Combination):
    __slots__ = ()

    @staticmethod
    def unit():
        return HElement({ONE_MONO: 1})

    @staticmethod
    def monomial(m, c = 1):
        return HElement({m: c})

    @staticmethod
    def from_delta_poly(p):
        return HElement(dict((PBWMonomial(a), c) for a, c in p.items()))

    def __mul__(self, other):
        if isinstance(other, HElement):
            return normal_product(self, other)
        return Combination.__mul__(self, other)

    def __pow__(self, k):
        out = HElement.unit()
        for _ in range(k):
            out = normal_product(out, self)
        return out

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            other = HElement.unit().scale(other)
        return Combination.__add__(self, other)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HElement.unit().scale(other)
        return Combination.__add__(self, -other)

    def __radd__(self, other):
        return self.__add__(other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def is_delta_polynomial(self):
        return all(m.is_delta() for m in self.terms)

    # delta-part as a dict of exponent tuples
    def delta_poly(self):
        if not self.is_delta_polynomial():
            raise SupportError('element involves X or Y')
        return dict((m.deltas, c) for m, c in self.terms.items())

    def sorted_terms(self):
        return sorted(self.terms.items(), key = lambda mc: mc[0].sort_key())

    def to_json(self):
        return [{'coefficient': fraction_json(c), 'monomial': m.to_json()}
                for m, c in self.sorted_terms()]

    def to_latex(self):
        return latex_sum([(c, m.to_latex()) for m, c in self.sorted_terms()])

    def __str__(self):
        return ' + '.join('%s*%s' % (c, m) for m, c in self.sorted_terms()) or '0'


def delta(n):
    return HElement.monomial(PBWMonomial(dgenerator(n)))

X = HElement.monomial(PBWMonomial(x = 1))
Y = HElement.monomial(PBWMonomial(y = 1))

# Schwarzian delta_2 - delta_1^2 / 2; primitive
def schwarzian():
    return delta(2) - delta(1) * delta(1) * Fraction(1, 2)


# (Y + k)^c as {power: coefficient}
def _shifted_power(k, c):
    return [(i, binomial(c, i) * k ** (c - i)) for i in range(c + 1)]

@lru_cache(maxsize = 1 << 16)
def monomial_product(m1, m2):
    """Product of two PBW monomials as a tuple of (monomial, coefficient).

    X^b delta^{a'} = sum_j C(b, j) D^j(delta^{a'}) X^{b-j}, and Y moves right
    past delta^{a'} X^{b'} as Y + weight.
    """
    out = {}
    shift = dweight(m2.deltas) + m2.x
    ys = _shifted_power(shift, m1.y)
    for j in range(m1.x + 1):
        cj = binomial(m1.x, j)
        for a, ca in dderiv_power(m2.deltas, j):
            deltas = dmul(m1.deltas, a)
            x = m1.x - j + m2.x
            for i, ci in ys:
                if not ci:
                    continue
                m = PBWMonomial(deltas, x, i + m2.y)
                out[m] = out.get(m, 0) + cj * ca * ci
    return tuple((m, c) for m, c in out.items() if c)

def normal_product(u, v):
    acc = {}
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            for m, c in monomial_product(m1, m2):
                acc[m] = acc.get(m, ZERO) + c1 * c2 * c
    return HElement(acc)

def bracket(u, v):
    return normal_product(u, v) - normal_product(v, u)

# Eigenvalue of ad(Y) on delta^a X^b Y^c
def ad_y_eigenvalue(m):
    return dweight(m.deltas) + m.x


class HTensor(Combination):
    """Element of H^{(x) k}; keys are k-tuples of PBW monomials."""

    __slots__ = ('legs',)

    def __init__(self, terms = None, legs = None):
        Combination.__init__(self, terms)
        if legs is None:
            legs = len(next(iter(self.terms))) if self.terms else 0
        for k in self.terms:
            assert(len(k) == legs)
        self.legs = legs

    def shape(self):
        return self.legs

    def _new(self, terms):
        return HTensor(terms, self.legs)

    @staticmethod
    def from_elements(elements):
        acc = {(): ONE}
        for e in elements:
            nxt = {}
            for k, c in acc.items():
                for m, c2 in e.terms.items():
                    nxt[k + (m,)] = nxt.get(k + (m,), ZERO) + c * c2
            acc = nxt
        return HTensor(acc, len(elements))

    def __mul__(self, other):
        if not isinstance(other, HTensor):
            return Combination.__mul__(self, other)
        if other.legs != self.legs:
            raise OrderMismatchError('tensor legs differ')
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = [((), c1 * c2)]
                for a, b in zip(k1, k2):
                    partial = [(k + (m,), c * c3) for k, c in partial
                               for m, c3 in monomial_product(a, b)]
                for k, c in partial:
                    acc[k] = acc.get(k, ZERO) + c
        return HTensor(acc, self.legs)

    # Replace leg i by the tensor f(monomial) (legs may grow)
    def expand_leg(self, i, f, new_legs):
        acc = {}
        for k, c in self.terms.items():
            for sub, c2 in f(k[i]).items():
                key = k[:i] + tuple(sub) + k[i + 1:]
                acc[key] = acc.get(key, ZERO) + c * c2
        return HTensor(acc, self.legs - 1 + new_legs)

    def permute(self, perm):
        return HTensor(dict((tuple(k[p] for p in perm), c)
                            for k, c in self.terms.items()), self.legs)

    def flip(self):
        return self.permute(list(range(self.legs))[::-1])

    # Multiply legs together: m(x)m(x)... down to one element
    def multiply_out(self):
        out = HElement()
        for k, c in self.terms.items():
            e = HElement.unit()
            for m in k:
                e = normal_product(e, HElement.monomial(m))
            out = out + e.scale(c)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key = lambda kc: tuple(m.sort_key() for m in kc[0]))

    def to_json(self):
        return [{'coefficient': fraction_json(c),
                 'monomial': [m.to_json() for m in k]}
                for k, c in self.sorted_terms()]

    def to_latex(self):
        def leg(m):
            return m.to_latex() or '1'
        return latex_sum([(c, ' \\otimes '.join(leg(m) for m in k))
                          for k, c in self.sorted_terms()])


# Delta(delta_n) inside the commutative delta-algebra, as pairs of tuples;
# Delta delta_{n+1} = (D (x) 1 + 1 (x) D) Delta delta_n + sum w(q) delta_1 p (x) q
@lru_cache(maxsize = N_MAX)
def delta_coproduct(n):
    if n == 1:
        g = dgenerator(1)
        return (((g, ()), 1), (((), g), 1))
    out = {}
    for (p, q), c in delta_coproduct(n - 1):
        for p2, c2 in dderiv(p):
            out[(p2, q)] = out.get((p2, q), 0) + c * c2
        for q2, c2 in dderiv(q):
            out[(p, q2)] = out.get((p, q2), 0) + c * c2
        w = dweight(q)
        if w:
            key = (dmul(dgenerator(1), p), q)
            out[key] = out.get(key, 0) + c * w
    logger.debug('coproduct of delta_%d: %d terms', n, len(out))
    return tuple((k, v) for k, v in out.items() if v)

def _dpair_mul(x, y):
    out = {}
    for (p1, q1), c1 in x:
        for (p2, q2), c2 in y:
            key = (dmul(p1, p2), dmul(q1, q2))
            out[key] = out.get(key, 0) + c1 * c2
    return tuple((k, v) for k, v in out.items() if v)

@lru_cache(maxsize = None)
def _delta_monomial_coproduct(a):
    out = ((((), ()), 1),)
    for j, e in enumerate(a):
        for _ in range(e):
            out = _dpair_mul(out, delta_coproduct(j + 1))
    return out

@lru_cache(maxsize = None)
def _x_power_coproduct(b):
    if b == 0:
        return HTensor({(ONE_MONO, ONE_MONO): 1}, 2)
    dx = HTensor({(PBWMonomial(x = 1), ONE_MONO): 1,
                  (ONE_MONO, PBWMonomial(x = 1)): 1,
                  (PBWMonomial(dgenerator(1)), PBWMonomial(y = 1)): 1}, 2)
    return _x_power_coproduct(b - 1) * dx

@lru_cache(maxsize = 1 << 14)
def monomial_coproduct(m):
    """Delta(delta^a X^b Y^c) = Delta(delta^a) Delta(X)^b Delta(Y)^c."""
    out = {}
    xs = _x_power_coproduct(m.x).terms
    for (p, q), c in _delta_monomial_coproduct(m.deltas):
        for (m1, m2), c2 in xs.items():
            for i in range(m.y + 1):
                key = (PBWMonomial(dmul(p, m1.deltas), m1.x, m1.y + i),
                       PBWMonomial(dmul(q, m2.deltas), m2.x, m2.y + m.y - i))
                out[key] = out.get(key, ZERO) + c * c2 * binomial(m.y, i)
    return tuple((k, v) for k, v in out.items() if v)

def coproduct(h, fold = 1, leg = None):
    """Iterated coproduct Delta^fold(h) with fold + 1 legs.

    Each step applies Delta to `leg` (default: the last one).
    """
    t = HTensor(dict(((m,), c) for m, c in h.terms.items()), 1)
    for step in range(fold):
        i = t.legs - 1 if leg is None else min(leg, t.legs - 1)
        t = t.expand_leg(i, lambda m: dict(monomial_coproduct(m)), 2)
    return t

def counit(h):
    return h.coefficient(ONE_MONO)

def counit_monomial(m):
    return ONE if m == ONE_MONO else ZERO

def modular_character_monomial(m):
    return ONE if not m.deltas and m.x == 0 else ZERO

def modular_character(h):
    return sum((c for m, c in h.terms.items() if modular_character_monomial(m)),
               ZERO)


# S(delta_n) = -delta_n - sum S(p) q over the reduced coproduct
@lru_cache(maxsize = N_MAX)
def delta_antipode(n):
    out = {dgenerator(n): Fraction(-1)}
    for (p, q), c in delta_coproduct(n):
        if not p or not q:
            continue
        for a, ca in delta_monomial_antipode(p):
            key = dmul(a, q)
            out[key] = out.get(key, ZERO) - c * ca
    return tuple((k, v) for k, v in out.items() if v)

@lru_cache(maxsize = None)
def delta_monomial_antipode(a):
    out = {(): ONE}
    for j, e in enumerate(a):
        for _ in range(e):
            nxt = {}
            for b, cb in out.items():
                for g, cg in delta_antipode(j + 1):
                    key = dmul(b, g)
                    nxt[key] = nxt.get(key, ZERO) + cb * cg
            out = dict((k, v) for k, v in nxt.items() if v)
    return tuple(out.items())

@lru_cache(maxsize = 1 << 14)
def monomial_antipode(m):
    """S(delta^a X^b Y^c) = S(Y)^c S(X)^b S(delta^a), S(X) = -X + delta_1 Y."""
    s_x = HElement({PBWMonomial(x = 1): -1, PBWMonomial(dgenerator(1), 0, 1): 1})
    out = HElement({PBWMonomial(y = m.y): (-1) ** m.y})
    for _ in range(m.x):
        out = out * s_x
    out = out * HElement(dict((PBWMonomial(a), c)
                              for a, c in delta_monomial_antipode(m.deltas)))
    return tuple(out.terms.items())

def antipode(h):
    return h.map_linear(lambda m: dict(monomial_antipode(m)))

# S~(h) = sum delta(h_(1)) S(h_(2))
@lru_cache(maxsize = 1 << 14)
def monomial_twisted_antipode(m):
    out = HElement()
    for (m1, m2), c in monomial_coproduct(m):
        d = modular_character_monomial(m1)
        if d:
            out = out + HElement(dict(monomial_antipode(m2))).scale(c * d)
    return tuple(out.terms.items())

def twisted_antipode(h):
    return h.map_linear(lambda m: dict(monomial_twisted_antipode(m)))


# Delta delta_n - delta_n (x) 1 - 1 (x) delta_n
def coproduct_remainder(n):
    t = coproduct(delta(n))
    g = PBWMonomial(dgenerator(n))
    return t - HTensor({(g, ONE_MONO): 1, (ONE_MONO, g): 1}, 2)

def remainder_by_delta(n):
    """Write the remainder of Delta delta_n as sum_k R^k (x) delta_k."""
    parts = {}
    for (m1, m2), c in coproduct_remainder(n).terms.items():
        if not (m1.is_delta() and m2.is_delta()) or sum(m2.deltas) != 1:
            raise SupportError('second leg %s is not a delta generator' % (m2,))
        k = len(m2.deltas)
        parts[k] = parts.get(k, HElement()) + HElement({m1: c})
    return parts

def monomials_up_to(max_degree, delta_only = False):
    out = []
    for w in range(max_degree + 1):
        for a in delta_monomials(w):
            rest = max_degree - w
            if delta_only:
                out.append(PBWMonomial(a))
                continue
            for x in range(rest + 1):
                for y in range(rest - x + 1):
                    out.append(PBWMonomial(a, x, y))
    return sorted(set(out), key = PBWMonomial.sort_key)


class H1Algebra:
    """Key-level interface to H(1) for the cyclic module.

    The modular pair is (delta, 1) with delta(Y) = 1.
    """

    name = 'H(1)'

    def unit(self):
        return {ONE_MONO: ONE}

    def mul(self, k1, k2):
        return dict(monomial_product(k1, k2))

    def coproduct(self, k):
        return dict(monomial_coproduct(k))

    def counit(self, k):
        return counit_monomial(k)

    def antipode(self, k):
        return dict(monomial_antipode(k))

    def twisted_antipode(self, k):
        return dict(monomial_twisted_antipode(k))

    def modular(self, k):
        return modular_character_monomial(k)

    def basis(self, max_degree):
        return monomials_up_to(max_degree)

    def key_degree(self, k):
        return k.degree

    def key_json(self, k):
        return k.to_json()

    def key_str(self, k):
        return str(k)


class AffineEnveloping(H1Algebra):
    """U(aff) = H(1) / (delta_n): the ideal of the deltas is a Hopf ideal.

    X and Y are primitive here, with [Y, X] = X and delta(Y) = 1.
    """

    name = 'U(aff)'

    @staticmethod
    def _project(d):
        def clean(k):
            legs = (k,) if isinstance(k, PBWMonomial) else k
            return all(not m.deltas for m in legs)
        return dict((k, c) for k, c in d.items() if clean(k))

    def mul(self, k1, k2):
        return self._project(H1Algebra.mul(self, k1, k2))

    def coproduct(self, k):
        return self._project(H1Algebra.coproduct(self, k))

    def antipode(self, k):
        return self._project(H1Algebra.antipode(self, k))

    def twisted_antipode(self, k):
        return self._project(H1Algebra.twisted_antipode(self, k))

    def basis(self, max_degree):
        return [m for m in monomials_up_to(max_degree) if not m.deltas]
