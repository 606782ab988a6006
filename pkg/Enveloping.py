#!/usr/bin/env python

# Enveloping algebra of formal vector fields, its pairing with H(1) and rho.

"""Z_k stands for the vector field x^{k+1} d/dx / (k+1)!, k >= -1, so that

    [Z_k, Z_l] = (l - k) (k+l+1)! / ((k+1)! (l+1)!) Z_{k+l}

and in the primed normalization Z'_k = (k+1)! Z_k simply (l - k) Z'_{k+l}.
At truncation level n every Z_m with m > n is zero; the span of Z_0..Z_n is
then a Lie algebra, while adding Z_{-1} is not (its bracket lowers weight
into the cut), so products involving Z_{-1} are always taken untruncated.
"""

import logging
from fractions import Fraction
from functools import lru_cache

from Kernel import Combination, ZERO, ONE, poly_from_dict, qq_matrix, \
     solve_linear
from HopfH1 import HElement, delta_monomials, remainder_by_delta
from Utility import binomial, factorial, \
     OrderMismatchError, SupportError

logger = logging.getLogger(__name__)


def bracket_coefficient(k, l):
    if k == l:
        return ZERO
    return Fraction((l - k) * factorial(k + l + 1),
                    factorial(k + 1) * factorial(l + 1))

# The same constant from C^{l-1}_{k+l} - C^{k-1}_{k+l}, k, l >= 1
def binomial_bracket_coefficient(k, l):
    return Fraction(binomial(k + l, l - 1) - binomial(k + l, k - 1))

def primed_bracket_coefficient(k, l):
    return Fraction(l - k)


class UMonomial(tuple):
    """Z_N^{a_N} ... Z_1^{a_1} Z_0^{a_0} Z_{-1}^{a_{-1}}.

    Stored as the exponent tuple (a_{-1}, a_0, a_1, ..., a_N).
    """

    __slots__ = ()

    def __new__(cls, exps = ()):
        exps = list(exps)
        while exps and exps[-1] == 0:
            exps.pop()
        return tuple.__new__(cls, exps)

    @staticmethod
    def from_dict(d):
        top = max(list(d) + [-1])
        return UMonomial([d.get(k, 0) for k in range(-1, top + 1)])

    def exponent(self, k):
        i = k + 1
        return self[i] if i < len(self) else 0

    @property
    def top(self):
        return len(self) - 2

    @property
    def weight(self):
        return sum((i - 1) * e for i, e in enumerate(self))

    # Factors in canonical order, highest index first
    def word(self):
        out = []
        for k in range(self.top, -2, -1):
            out.extend([k] * self.exponent(k))
        return tuple(out)

    # Index of the right-most factor
    def last(self):
        for k in range(-1, self.top + 1):
            if self.exponent(k):
                return k
        return None

    def without_last(self):
        k = self.last()
        e = list(self)
        e[k + 1] -= 1
        return UMonomial(e)

    def times_generator(self, k):
        e = list(self) + [0] * max(0, k + 2 - len(self))
        e[k + 1] += 1
        return UMonomial(e)

    def in_a1(self):
        return self.exponent(0) == 0 and self.exponent(-1) == 0

    def factorial_weight(self):
        out = 1
        for e in self:
            out *= factorial(e)
        return out

    def __str__(self):
        parts = []
        for k in range(self.top, -2, -1):
            e = self.exponent(k)
            if e:
                parts.append('Z%d' % k if e == 1 else 'Z%d^%d' % (k, e))
        return '*'.join(parts) or '1'

U_ONE = UMonomial()


class UElement(Combination):
    """Element of U at truncation level `level` (None: untruncated)."""

    __slots__ = ('level',)

    def __init__(self, terms = None, level = None):
        Combination.__init__(self, terms)
        self.level = level
        if level is not None:
            for m in self.terms:
                if m.top > level:
                    raise SupportError('Z_%d beyond truncation level %d' %
                                       (m.top, level))

    def shape(self):
        return self.level

    def _new(self, terms):
        return UElement(terms, self.level)

    @staticmethod
    def generator(k, level = None):
        return UElement({UMonomial.from_dict({k: 1}): 1}, level)

    @staticmethod
    def unit(level = None):
        return UElement({U_ONE: 1}, level)

    @staticmethod
    def monomial(exps, level = None, c = 1):
        return UElement({UMonomial.from_dict(exps): c}, level)

    def __mul__(self, other):
        if isinstance(other, UElement):
            return u_product(self, other)
        return Combination.__mul__(self, other)

    def at_level(self, level):
        return UElement(dict((m, c) for m, c in self.terms.items()
                             if level is None or m.top <= level), level)

    def in_a1(self):
        return all(m.in_a1() for m in self.terms)

    def weight_part(self, w):
        return UElement(dict((m, c) for m, c in self.terms.items()
                             if m.weight == w), self.level)


# Monomial times one generator on the right, normally ordered
@lru_cache(maxsize = 1 << 16)
def monomial_times_generator(m, k, level):
    if level is not None and k > level:
        return ()
    last = m.last()
    if last is None or k <= last:
        return ((m.times_generator(k), ONE),)
    # m' Z_j Z_k = (m' Z_k) Z_j + m' [Z_j, Z_k]
    rest = m.without_last()
    out = {}
    for m2, c2 in monomial_times_generator(rest, k, level):
        for m3, c3 in monomial_times_generator(m2, last, level):
            out[m3] = out.get(m3, ZERO) + c2 * c3
    s = last + k
    coeff = bracket_coefficient(last, k)
    if coeff and (level is None or s <= level):
        for m2, c2 in monomial_times_generator(rest, s, level):
            out[m2] = out.get(m2, ZERO) + coeff * c2
    return tuple((m, c) for m, c in out.items() if c)

@lru_cache(maxsize = 1 << 16)
def monomial_product(m1, m2, level):
    out = {m1: ONE}
    for k in m2.word():
        nxt = {}
        for m, c in out.items():
            for m3, c3 in monomial_times_generator(m, k, level):
                nxt[m3] = nxt.get(m3, ZERO) + c * c3
        out = dict((m, c) for m, c in nxt.items() if c)
    return tuple(out.items())

def u_product(u, v):
    if u.level != v.level:
        raise OrderMismatchError('truncation levels %s and %s differ' %
                                 (u.level, v.level))
    acc = {}
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            for m, c in monomial_product(m1, m2, u.level):
                acc[m] = acc.get(m, ZERO) + c1 * c2 * c
    return UElement(acc, u.level)

def u_bracket(u, v):
    return u_product(u, v) - u_product(v, u)

# Product of generators in the given order
def word_product(word, level = None):
    out = UElement.unit(level)
    for k in word:
        out = u_product(out, UElement.generator(k, level))
    return out

def jacobi_defect(i, j, k, level):
    a, b, c = (UElement.generator(t, level) for t in (i, j, k))
    return (u_bracket(a, u_bracket(b, c)) + u_bracket(b, u_bracket(c, a)) +
            u_bracket(c, u_bracket(a, b)))

def l0_eval(a):
    return a.coefficient(UMonomial.from_dict({0: 1}))


def _require_a1(a):
    if not a.in_a1():
        raise SupportError('element involves Z_0 or Z_-1')

def pair_delta(n, a):
    """<delta_n, a> = L0([Z_-1, ... [Z_-1, a] ...]) with n brackets."""
    _require_a1(a)
    a = UElement(a.weight_part(n).terms, None)
    zm = UElement.generator(-1)
    for _ in range(n):
        a = u_bracket(zm, a)
    return l0_eval(a)

@lru_cache(maxsize = 1 << 14)
def _pair_generator_monomial(n, m):
    return pair_delta(n, UElement({m: 1}))

# Splittings of an exponent vector into `parts` ordered pieces
def _splits(exps, parts):
    if parts == 1:
        yield (tuple(exps),), 1
        return
    def rec(i):
        if i == len(exps):
            yield ()
            return
        for e in range(exps[i] + 1):
            for rest in rec(i + 1):
                yield (e,) + rest
    for first in rec(0):
        rest = tuple(x - y for x, y in zip(exps, first))
        mult = 1
        for x, y in zip(exps, first):
            mult *= binomial(x, y)
        for tail, m2 in _splits(rest, parts - 1):
            yield (first,) + tail, mult * m2

@lru_cache(maxsize = 1 << 14)
def pair_monomials(deltas, m):
    """<delta^a, Z^e>: the Z's are primitive, so split e over the factors."""
    gens = []
    for j, e in enumerate(deltas):
        gens.extend([j + 1] * e)
    if not gens:
        return ONE if m == U_ONE else ZERO
    if not m.in_a1() or m.weight != sum(gens):
        return ZERO
    if len(gens) == 1:
        return _pair_generator_monomial(gens[0], m)
    total = ZERO
    for pieces, mult in _splits(tuple(m), len(gens)):
        term = Fraction(mult)
        for g, piece in zip(gens, pieces):
            piece = UMonomial(piece)
            if piece.weight != g:
                term = ZERO
                break
            term *= _pair_generator_monomial(g, piece)
            if not term:
                break
        total += term
    return total

# Pairing of a delta-polynomial HElement with a UElement
def pair(h, a):
    out = ZERO
    for hm, hc in h.terms.items():
        if not hm.is_delta():
            raise SupportError('pairing is defined on delta-polynomials')
        for um, uc in a.terms.items():
            out += hc * uc * pair_monomials(hm.deltas, um)
    return out

# Pairing of an HTensor of delta-polynomials with a list of UElements
def pair_tensor(t, elements):
    out = ZERO
    for k, c in t.terms.items():
        term = c
        for m, a in zip(k, elements):
            term *= pair(HElement({m: 1}), a)
            if not term:
                break
        out += term
    return out


# U-monomials in Z_1, ..., Z_w of weight exactly w
@lru_cache(maxsize = None)
def a1_monomials(weight):
    out = []
    for a in delta_monomials(weight):
        out.append(UMonomial((0, 0) + tuple(a)))
    return tuple(out)

def rho_map(p, reversed = False):
    """rho(P) = sum <P, Z_n^{a_n}...Z_1^{a_1}> / prod a_j! x_1^{a_1}...x_n^{a_n}.

    With `reversed` the words are taken in increasing order Z_1^{a_1}...Z_n^{a_n}
    and the variables are z_j.
    """
    if not p.is_delta_polynomial():
        raise SupportError('rho is defined on delta-polynomials')
    weights = set(m.weight for m in p.terms)
    var = 'z' if reversed else 'x'
    out = {}
    for w in weights:
        for m in a1_monomials(w):
            if reversed:
                a = word_product(m.word()[::-1])
            else:
                a = UElement({m: 1})
            c = pair(p, a)
            if c:
                mono = tuple(('%s%d' % (var, k), m.exponent(k))
                             for k in range(1, m.top + 1) if m.exponent(k))
                out[mono] = c / m.factorial_weight()
    return poly_from_dict(out)

# Weight-w Gram matrix <delta-monomials, Z-monomials>
def gram_matrix(weight):
    rows = delta_monomials(weight)
    cols = a1_monomials(weight)
    return qq_matrix([[pair_monomials(a, m) for m in cols] for a in rows])

def dt_map(a):
    """D^t(a) = [Z_-1, a] modulo the left ideal generated by Z_0, Z_-1."""
    _require_a1(a)
    a = UElement(a.terms, None)
    b = u_bracket(UElement.generator(-1), a)
    return UElement(dict((m, c) for m, c in b.terms.items()
                         if m.exponent(0) + m.exponent(-1) == 0), None)

# Derivational formula: D^t Z_n = Z_{n-1} on the Z_{>=2} part, plus the
# a_1 (a_1 - 1) / 2 Z_1^{a_1 - 1} correction
def dt_oracle(m):
    a1 = m.exponent(1)
    head = UMonomial([0, 0, 0] + list(m[3:]))
    word = head.word()
    out = UElement({}, None)
    for i, k in enumerate(word):
        w = word[:i] + (k - 1,) + word[i + 1:]
        out = out + word_product(w)
    z1 = UElement.monomial({1: a1}) if a1 else UElement.unit()
    out = u_product(out, z1)
    if a1 >= 2:
        out = out + u_product(UElement({head: 1}),
                              UElement.monomial({1: a1 - 1})).scale(
                                  Fraction(a1 * (a1 - 1), 2))
    return out

def pair_delta_by_dt(n, a):
    for _ in range(n - 1):
        a = dt_map(a)
    return a.coefficient(UMonomial.from_dict({1: 1}))

def left_multiplier_coefficients(n, a0, max_weight = None):
    """Solve <delta_n, a0 a> = <delta_n, a0> eps(a) + sum_k lambda^k <delta_k, a>.

    Unknowns lambda^1..lambda^{n-1}; equations from all Z-monomials a of
    weight 1..max_weight. Returns the solution or None.
    """
    if max_weight is None:
        max_weight = n
    a0 = UElement(a0.terms, None)
    rows, rhs = [], []
    for w in range(1, max_weight + 1):
        for m in a1_monomials(w):
            a = UElement({m: 1})
            rows.append([pair_delta(k, a) for k in range(1, n)])
            rhs.append(pair_delta(n, u_product(a0, a)))
    if n == 1:
        return {} if all(r == 0 for r in rhs) else None
    sol = solve_linear(qq_matrix(rows), rhs)
    if sol is None:
        return None
    return dict((k, sol[k - 1]) for k in range(1, n))

# lambda^k = <R^k, a0> from the reduced coproduct of delta_n
def left_multiplier_expected(n, a0):
    parts = remainder_by_delta(n) if n > 1 else {}
    return dict((k, pair(parts[k], a0) if k in parts else ZERO)
                for k in range(1, n))
