#!/usr/bin/env python

# Jets of diffeomorphisms, the affine group and the crossed product model.

"""Functions on the frame bundle are Laurent polynomials in y with x-degree
at most N (their truncation order); y = exp(-s). A jet psi acts on (y, x) by
psi~(y, x) = (psi'(x) y, psi(x)) and the crossed product obeys

    f1 U*_psi1 . f2 U*_psi2 = f1 (f2 o psi~1) U*_{psi2 o psi1}.

H(1) acts by Y = y d/dy, X = y d/dx and by multiplication with
gamma_n = y^n (log psi')^{(n)}(x), psi being the U* label.
"""

import logging

import sympy

from Kernel import TruncSeries, Combination, ZERO, series_compose, \
     series_reverse, series_log, poly_from_series, poly_substitute, \
     poly_truncate, poly_integrate, poly_terms
from HopfH1 import HElement
from Utility import factorial, binomial, frac, \
     OrderMismatchError, SupportError, TruncationError

logger = logging.getLogger(__name__)

# Default jet order
N_DEFAULT = 10


class DiffeoJet:
    """psi(x) = x + c_2 x^2 + ... + c_N x^N, tangent to the identity."""

    __slots__ = ('series',)

    def __init__(self, series):
        if not isinstance(series, TruncSeries):
            series = TruncSeries(series)
        if series.order < 1 or series.coeffs[0] != 0 or series.coeffs[1] != 1:
            raise SupportError('jet must satisfy psi(0) = 0, psi\'(0) = 1')
        self.series = series

    @staticmethod
    def identity(order = N_DEFAULT):
        return DiffeoJet(TruncSeries.identity(order))

    # From the coefficients c_2, c_3, ...
    @staticmethod
    def from_coefficients(coeffs, order = N_DEFAULT):
        return DiffeoJet(TruncSeries([0, 1] + list(coeffs), order))

    @property
    def order(self):
        return self.series.order

    def __eq__(self, other):
        return (isinstance(other, DiffeoJet) and self.order == other.order and
                self.series.coeffs == other.series.coeffs)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.series.coeffs, self.order))

    def __repr__(self):
        return 'DiffeoJet(%r)' % (self.series,)

    def derivative(self):
        return self.series.derivative()

    # log psi', known through order N - 1
    def log_derivative(self):
        return series_log(self.series.derivative())

def jet_compose(p, q):
    if p.order != q.order:
        raise OrderMismatchError('jet orders %d and %d differ' %
                                 (p.order, q.order))
    return DiffeoJet(series_compose(p.series, q.series))

def jet_invert(p):
    return DiffeoJet(series_reverse(p.series))

def delta_coords(p, n):
    if n < 1 or n > p.order - 1:
        raise TruncationError('delta_%d needs jet order > %d' % (n, n))
    return p.log_derivative().coeffs[n] * factorial(n)

def evaluate_delta_poly(h, p):
    """Value of a delta-polynomial on the jet p through its delta-coordinates."""
    if not h.is_delta_polynomial():
        raise SupportError('only delta-polynomials are functions on jets')
    coords = {}
    out = ZERO
    for m, c in h.terms.items():
        term = c
        for j, e in enumerate(m.deltas):
            if e:
                if j + 1 not in coords:
                    coords[j + 1] = delta_coords(p, j + 1)
                term *= coords[j + 1] ** e
        out += term
    return out

# Legs of an HTensor of delta-polynomials evaluated on jets, one per leg
def evaluate_delta_tensor(t, jets):
    out = ZERO
    for k, c in t.terms.items():
        term = c
        for m, p in zip(k, jets):
            term *= evaluate_delta_poly(HElement({m: 1}), p)
        out += term
    return out

# (psi''/psi')' - (psi''/psi')^2 / 2 at 0
def schwarzian_at_zero(p):
    r = p.log_derivative().derivative()
    return r.coeffs[1] - r.coeffs[0] ** 2 / 2


class AffineElement:
    """k(x) = a x + b with a > 0; the product is composition."""

    __slots__ = ('a', 'b')

    def __init__(self, a = 1, b = 0):
        a, b = frac(a), frac(b)
        if a <= 0:
            raise SupportError('scale must be positive')
        self.a, self.b = a, b

    @staticmethod
    def identity():
        return AffineElement(1, 0)

    def __mul__(self, other):
        return AffineElement(self.a * other.a, self.a * other.b + self.b)

    def inverse(self):
        return AffineElement(1 / self.a, -self.b / self.a)

    def __call__(self, x):
        return self.a * frac(x) + self.b

    def __eq__(self, other):
        return isinstance(other, AffineElement) and \
            (self.a, self.b) == (other.a, other.b)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return 'AffineElement(%s, %s)' % (self.a, self.b)

# Expand sum c_k (a x + b)^k, truncated at the series order
def _affine_substitute(s, a, b):
    out = [ZERO] * (s.order + 1)
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        for i in range(k + 1):
            if i <= s.order:
                out[i] += c * binomial(k, i) * a ** i * b ** (k - i)
    return TruncSeries(out, s.order)

def g1_right_action(p, k, polynomial = False):
    """(phi . (a, b))(x) = (phi(a x + b) - phi(b)) / (phi'(b) a).

    Exact on jets for b = 0. For b != 0 every coefficient of phi(a x + b)
    depends on terms beyond the jet order, so the jet must be declared a
    polynomial.
    """
    s = p.series
    if k.b and not polynomial:
        raise TruncationError('translation by %s needs the jet beyond order %d'
                              % (k.b, s.order))
    d = s.derivative().evaluate(k.b)
    if d == 0:
        raise SupportError('phi\'(b) vanishes')
    shifted = _affine_substitute(s, k.a, k.b) - s.evaluate(k.b)
    return DiffeoJet(shifted * (1 / (d * k.a)))

# d/db of phi . (1, b) at b = 0: phi' - 1 - phi''(0) phi
def g1_tangent(p):
    s = p.series
    d = s.derivative()
    return d - 1 - s.truncate(d.order) * d.derivative().coeffs[0]

# Derivative of delta_n along a tangent jet: n! [x^n] (tangent' / phi')
def delta_coords_derivative(p, tangent, n):
    t = tangent.derivative()
    q = t * p.series.derivative().inverse().truncate(t.order)
    if n > q.order:
        raise TruncationError('tangent known only through order %d' % q.order)
    return q.coeffs[n] * factorial(n)


class FiberFunction(Combination):
    """sum c y^i x^j with j <= order; keys are (i, j)."""

    __slots__ = ('order',)

    def __init__(self, terms = None, order = N_DEFAULT):
        if order < 0:
            raise TruncationError('negative truncation order %d' % order)
        Combination.__init__(self, terms)
        self.order = order
        self.terms = dict((k, c) for k, c in self.terms.items()
                          if k[1] <= order)

    def shape(self):
        return self.order

    def _new(self, terms):
        return FiberFunction(terms, self.order)

    @staticmethod
    def constant(c, order = N_DEFAULT):
        return FiberFunction({(0, 0): c}, order)

    @staticmethod
    def from_series(s, y_power = 0):
        return FiberFunction(dict(((y_power, j), c) for j, c in enumerate(s.coeffs)),
                             s.order)

    def truncate(self, order):
        return FiberFunction(self.terms, min(order, self.order))

    def _check(self, other):
        if not isinstance(other, FiberFunction):
            raise OrderMismatchError('not a fiber function')

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        n = min(self.order, other.order)
        return Combination.__add__(self.truncate(n), other.truncate(n))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, FiberFunction):
            return NotImplemented
        n = min(self.order, other.order)
        return self.truncate(n).terms == other.truncate(n).terms

    __hash__ = None

    def __mul__(self, other):
        if not isinstance(other, FiberFunction):
            return Combination.__mul__(self, other)
        n = min(self.order, other.order)
        acc = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                if j1 + j2 <= n:
                    k = (i1 + i2, j1 + j2)
                    acc[k] = acc.get(k, ZERO) + c1 * c2
        return FiberFunction(acc, n)

    # X = y d/dx; one order is lost
    def act_x(self):
        acc = {}
        for (i, j), c in self.terms.items():
            if j:
                acc[(i + 1, j - 1)] = acc.get((i + 1, j - 1), ZERO) + j * c
        return FiberFunction(acc, self.order - 1)

    # Y = y d/dy = -d/ds
    def act_y(self):
        return FiberFunction(dict(((i, j), i * c) for (i, j), c in self.terms.items()),
                             self.order)

    def lift(self, p):
        """f o psi~ : (y, x) -> f(psi'(x) y, psi(x)); order min(N, M - 1)."""
        n = min(self.order, p.order - 1)
        if n < 0:
            raise TruncationError('jet order too small to lift')
        d = p.series.derivative().truncate(n)
        s = p.series.truncate(n)
        dinv = d.inverse()
        dpow, spow = {}, {}
        def dpower(i):
            if i not in dpow:
                dpow[i] = d ** i if i >= 0 else dinv ** (-i)
            return dpow[i]
        def spower(j):
            if j not in spow:
                spow[j] = s ** j
            return spow[j]
        acc = {}
        for (i, j), c in self.terms.items():
            if j > n:
                continue
            q = dpower(i) * spower(j)
            for k, ck in enumerate(q.coeffs):
                if ck:
                    acc[(i, k)] = acc.get((i, k), ZERO) + c * ck
        return FiberFunction(acc, n)

    def evaluate(self, y, x):
        y, x = frac(y), frac(x)
        return sum((c * y ** i * x ** j for (i, j), c in self.terms.items()),
                   ZERO)

    def __repr__(self):
        return 'FiberFunction(%s; order %d)' % (
            ' + '.join('%s*y^%d*x^%d' % (c, i, j)
                       for (i, j), c in sorted(self.terms.items())) or '0',
            self.order)


# gamma_n = y^n (log psi')^{(n)}(x)
def gamma(p, n):
    s = p.log_derivative()
    for _ in range(n):
        if s.order == 0:
            raise TruncationError('jet order %d too small for delta_%d' %
                                  (p.order, n))
        s = s.derivative()
    return FiberFunction.from_series(s, n)


class CrossedElement:
    """Finite sum of f U*_psi, stored as {jet: FiberFunction}."""

    __slots__ = ('parts',)

    def __init__(self, parts = None):
        self.parts = {}
        for p, f in (parts or {}).items():
            if not f.is_zero():
                self.parts[p] = f

    @staticmethod
    def single(f, p):
        return CrossedElement({p: f})

    # f U_phi = f U*_{phi^-1}
    @staticmethod
    def from_u(f, phi):
        return CrossedElement({jet_invert(phi): f})

    def order(self):
        return min([f.order for f in self.parts.values()] or [N_DEFAULT])

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        parts = dict(self.parts)
        for p, f in other.parts.items():
            parts[p] = parts[p] + f if p in parts else f
        return CrossedElement(parts)

    __radd__ = __add__

    def __neg__(self):
        return CrossedElement(dict((p, -f) for p, f in self.parts.items()))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return CrossedElement(dict((p, f.scale(c)) for p, f in self.parts.items()))

    def __mul__(self, other):
        if isinstance(other, CrossedElement):
            return crossed_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map_functions(self, g):
        return CrossedElement(dict((p, g(f, p)) for p, f in self.parts.items()))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return all(f.is_zero() for f in self.parts.values())
        if not isinstance(other, CrossedElement):
            return NotImplemented
        for p in set(self.parts) | set(other.parts):
            f = self.parts.get(p)
            g = other.parts.get(p)
            if f is None:
                f = FiberFunction({}, g.order)
            if g is None:
                g = FiberFunction({}, f.order)
            if f != g:
                return False
        return True

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __repr__(self):
        return 'CrossedElement(%s)' % ', '.join(
            '%r U*_%r' % (f, p.series) for p, f in self.parts.items())

def crossed_mul(u, v):
    out = CrossedElement()
    for p1, f1 in u.parts.items():
        for p2, f2 in v.parts.items():
            out = out + CrossedElement({jet_compose(p2, p1): f1 * f2.lift(p1)})
    return out


def _act_monomial(m, u):
    for _ in range(m.y):
        u = u.map_functions(lambda f, p: f.act_y())
    for _ in range(m.x):
        u = u.map_functions(lambda f, p: f.act_x())
    for j, e in enumerate(m.deltas):
        for _ in range(e):
            u = u.map_functions(lambda f, p, n = j + 1: f * gamma(p, n))
    return u

def hopf_act(h, u):
    out = CrossedElement()
    for m, c in h.terms.items():
        out = out + _act_monomial(m, u).scale(c)
    return out

def pair_crossed(h, k, u):
    """<P X_k, f U*_psi> = P(psi) f(k), with f evaluated at y = a, x = b."""
    out = ZERO
    for p, f in u.parts.items():
        out += evaluate_delta_poly(h, p) * f.evaluate(k.a, k.b)
    return out


def expansional_product(p, f, order):
    """Iterated-integral series for the flow generated by psi = p^{-1}.

    With rho = psi'' / psi', H_0 = f and
    H_k(q) = int_0^q rho(r) (d/ds + (t - r) d/dt) H_{k-1}(r) dr,
    the product is sum_k H_k(t), truncated at t-degree `order`.
    """
    if p.order < order + 1:
        raise TruncationError('jet order %d too small for order %d' %
                              (p.order, order))
    psi = jet_invert(p)
    rho = poly_from_series(psi.log_derivative().derivative().truncate(order),
                           'r')
    s, t, r, q = sympy.symbols('s t r q')
    # Every integration raises the (t, q)-degree by at least one
    h = poly_truncate(f, order, ('t',))
    total = h
    for k in range(1, order + 1):
        g = poly_substitute(h, {'q': r})
        g = sympy.expand(rho * (sympy.diff(g, s) + (t - r) * sympy.diff(g, t)))
        h = poly_truncate(poly_integrate(g, 'r', 0, q), order, ('t', 'q'))
        if h == 0:
            break
        total = total + poly_substitute(h, {'q': t})
    total = poly_truncate(total, order, ('t',))
    logger.debug('expansional product: %d terms', len(poly_terms(total)))
    return total

# f(s + log psi'(t), psi(t)) through t-degree `order`, psi = p^{-1}
def expansional_closed_form(p, f, order):
    psi = jet_invert(p)
    log_d = poly_from_series(psi.log_derivative().truncate(order), 't')
    psi_t = poly_from_series(psi.series.truncate(order), 't')
    out = poly_substitute(f, {'s': sympy.Symbol('s') + log_d, 't': psi_t})
    return poly_truncate(out, order, ('t',))
