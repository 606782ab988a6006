#!/usr/bin/env python

# Exact scalars, commutative polynomials, truncated series and linear algebra.

import logging
import re
from fractions import Fraction

import sympy

from Utility import frac, latex_sum, fraction_json, \
     OrderMismatchError, SupportError, TruncationError

logger = logging.getLogger(__name__)

Rational = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


class TruncSeries:
    """Power series c_0 + c_1 x + ... + c_N x^N known exactly through order N.

    Binary operations truncate to the smaller order of their operands.
    """

    __slots__ = ('coeffs', 'order')

    def __init__(self, coeffs, order = None):
        coeffs = [frac(c) for c in coeffs]
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if order < 0:
            raise TruncationError('negative truncation order %d' % order)
        coeffs = coeffs[:order + 1]
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @staticmethod
    def constant(c, order):
        return TruncSeries([c], order)

    @staticmethod
    def identity(order):
        return TruncSeries([0, 1], order)

    def __getitem__(self, k):
        if k > self.order:
            raise TruncationError('coefficient %d beyond order %d' %
                                  (k, self.order))
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.order))

    # Equality at the shared truncation order
    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n + 1] == other.coeffs[:n + 1]

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __repr__(self):
        terms = ['%s*x^%d' % (c, k) for k, c in enumerate(self.coeffs) if c]
        return 'TruncSeries(%s + O(x^%d))' % (' + '.join(terms) or '0',
                                              self.order + 1)

    def truncate(self, order):
        return TruncSeries(self.coeffs, min(order, self.order))

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], n)
    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = frac(other)
            return TruncSeries([c * a for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[:n + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[:n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return TruncSeries(out, n)
    __rmul__ = __mul__

    def __pow__(self, k):
        assert(k >= 0)
        out = TruncSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self):
        if self.order == 0:
            raise TruncationError('derivative of an order-0 series')
        return TruncSeries([k * c for k, c in enumerate(self.coeffs)][1:],
                           self.order - 1)

    # Antiderivative vanishing at 0; one order more is known
    def integral(self):
        return TruncSeries([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)],
                           self.order + 1)

    def inverse(self):
        if self.coeffs[0] == 0:
            raise SupportError('reciprocal of a series with zero constant term')
        out = [ONE / self.coeffs[0]]
        for k in range(1, self.order + 1):
            s = sum((self.coeffs[j] * out[k - j] for j in range(1, k + 1)), ZERO)
            out.append(-s / self.coeffs[0])
        return TruncSeries(out, self.order)

    def evaluate(self, x):
        x = frac(x)
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def compose(self, g):
        return series_compose(self, g)

    def reverse(self):
        return series_reverse(self)

    def log(self):
        return series_log(self)

    def exp(self):
        return series_exp(self)


def series_compose(f, g):
    if g.coeffs[0] != 0:
        raise SupportError('inner series must have zero constant term')
    n = min(f.order, g.order)
    g = g.truncate(n)
    out = TruncSeries.constant(f.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        out = out * g + f.coeffs[k]
    return out

# Compositional inverse by correcting one coefficient at a time
def series_reverse(f):
    if f.coeffs[0] != 0 or (f.order >= 1 and f.coeffs[1] != 1):
        raise SupportError('reversion needs f(0) = 0 and f\'(0) = 1')
    r = TruncSeries.identity(f.order)
    for k in range(2, f.order + 1):
        err = series_compose(f, r).coeffs[k]
        if err:
            r = r - TruncSeries([0] * k + [err], f.order)
    return r

def series_log(f):
    if f.coeffs[0] != 1:
        raise SupportError('log needs f(0) = 1')
    if f.order == 0:
        return TruncSeries.constant(0, 0)
    return (f.derivative() * f.inverse().truncate(f.order - 1)).integral()

def series_exp(f):
    if f.coeffs[0] != 0:
        raise SupportError('exp needs f(0) = 0')
    e = [ONE]
    for k in range(1, f.order + 1):
        s = sum((j * f.coeffs[j] * e[k - j] for j in range(1, k + 1)), ZERO)
        e.append(s / k)
    return TruncSeries(e, f.order)


_VAR_RE = re.compile(r'^([A-Za-z_]+?)(\d*)$')

# Sort key for variable names: prefix, then numeric suffix
def var_key(name):
    m = _VAR_RE.match(name)
    if m is None:
        return (name, 0)
    return (m.group(1), int(m.group(2)) if m.group(2) else 0)

# Default grading: x_j, z_j weight j; c_i weight 2i; h_i weight 2i - 1
def default_weight(name):
    prefix, index = var_key(name)
    if prefix in ('x', 'z', 'delta'):
        return index
    if prefix == 'c':
        return 2 * index
    if prefix == 'h':
        return 2 * index - 1
    return 1


# Commutative polynomials over Q are plain sympy expressions, kept expanded.

def qq(c):
    c = frac(c)
    return sympy.Rational(c.numerator, c.denominator)

def poly_var(name):
    return sympy.Symbol(name)

def poly_from_dict(terms):
    """{((name, exponent), ...): coefficient} as an expanded expression."""
    out = sympy.Integer(0)
    for m, c in terms.items():
        term = qq(c)
        for v, e in m:
            term = term * sympy.Symbol(v) ** e
        out = out + term
    return sympy.expand(out)

def poly_from_series(s, name):
    x = sympy.Symbol(name)
    return sympy.expand(sum((qq(c) * x ** k for k, c in enumerate(s.coeffs)),
                            sympy.Integer(0)))

def _gens(p):
    return sorted((str(v) for v in p.free_symbols), key = var_key,
                  reverse = True)

def poly_terms(p):
    """[(((name, e), ...), Fraction)] ordered by exponent vector, highest-indexed
    variable first."""
    p = sympy.expand(p)
    names = _gens(p)
    if not names:
        return [((), frac(p))] if p != 0 else []
    poly = sympy.Poly(p, *[sympy.Symbol(v) for v in names], domain = 'QQ')
    out = []
    for exps, c in poly.terms(order = 'lex'):
        out.append((tuple((v, e) for v, e in zip(names, exps) if e), frac(c)))
    return out

def poly_substitute(p, values):
    """Replace variables at once, `values` mapping names to expressions."""
    return sympy.expand(p.subs(dict((sympy.Symbol(v), q)
                                    for v, q in values.items()),
                               simultaneous = True))

def poly_weight(p, weight = default_weight):
    ws = set(sum(weight(v) * e for v, e in m) for m, _ in poly_terms(p))
    return ws.pop() if len(ws) == 1 else None

def poly_is_homogeneous(p, weight = default_weight):
    return len(poly_terms(p)) <= 1 or poly_weight(p, weight) is not None

# Keep terms whose total degree in `names` is at most max_degree
def poly_truncate(p, max_degree, names):
    names = set(names)
    return poly_from_dict(dict(
        (m, c) for m, c in poly_terms(p)
        if sum(e for v, e in m if v in names) <= max_degree))

def poly_integrate(p, name, lower, upper):
    return sympy.expand(sympy.integrate(p, (sympy.Symbol(name), lower, upper)))

def poly_json(p):
    return [{'coefficient': fraction_json(c), 'monomial': dict(m)}
            for m, c in poly_terms(p)]

def poly_latex(p):
    def mono_latex(m):
        out = ''
        for v, e in m:
            prefix, index = var_key(v)
            out += '%s_{%d}' % (prefix, index) if index else prefix
            if e > 1:
                out += '^{%d}' % e
        return out
    return latex_sum([(c, mono_latex(m)) for m, c in poly_terms(p)])


# Exact linear algebra: sympy matrices with Rational entries.

def qq_matrix(rows, cols = None):
    rows = [list(r) for r in rows]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    if any(len(r) != cols for r in rows):
        raise OrderMismatchError('ragged matrix rows')
    return sympy.Matrix(len(rows), cols, [qq(c) for r in rows for c in r])

def qq_zeros(rows, cols):
    return sympy.zeros(rows, cols)

def matrix_rows(m):
    return [[frac(c) for c in m.row(i)] for i in range(m.rows)]

def matrix_rank(m):
    if m.rows == 0 or m.cols == 0:
        return 0
    return m.rank()

def kernel_basis(m):
    """Nullspace basis as lists of Fractions, one free variable set to 1 each."""
    if m.rows == 0:
        return [[ONE if i == j else ZERO for j in range(m.cols)]
                for i in range(m.cols)]
    basis = [[frac(c) for c in v] for v in m.nullspace()]
    logger.debug('nullspace of %dx%d: dimension %d', m.rows, m.cols,
                 len(basis))
    return basis

def mat_rank_kernel(m):
    """(rank, nullspace basis) of a matrix or of a list of rows."""
    if not isinstance(m, sympy.MatrixBase):
        m = qq_matrix(m)
    return matrix_rank(m), kernel_basis(m)

def rank_of_vectors(vectors):
    if not vectors:
        return 0
    return matrix_rank(qq_matrix(vectors))

# One solution of m x = rhs with the free unknowns at 0, or None
def solve_linear(m, rhs):
    if not isinstance(m, sympy.MatrixBase):
        m = qq_matrix(m)
    unknowns = sympy.symbols('t0:%d' % m.cols)
    b = sympy.Matrix([qq(c) for c in rhs])
    solutions = sympy.linsolve((m, b), *unknowns)
    if solutions.is_empty:
        return None
    sol, = solutions
    free = dict((t, 0) for t in unknowns)
    return [frac(sympy.sympify(x).subs(free)) for x in sol]


class Combination:
    """Finite Q-linear combination of hashable basis keys.

    Subclasses carry a shape (tensor legs, level, truncation order) through
    `shape()` and `_new`; sums of mismatched shapes are rejected.
    """

    __slots__ = ('terms',)

    def __init__(self, terms = None):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for k, c in items:
            acc[k] = acc.get(k, ZERO) + frac(c)
        self.terms = dict((k, c) for k, c in acc.items() if c)

    def shape(self):
        return None

    def _new(self, terms):
        return self.__class__(terms)

    def _check(self, other):
        if not isinstance(other, Combination) or other.shape() != self.shape():
            raise OrderMismatchError('cannot combine %r with %r' %
                                     (self.shape(), getattr(other, 'shape',
                                                            lambda: None)()))

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def support(self):
        return set(self.terms)

    def coefficient(self, key):
        return self.terms.get(key, ZERO)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Combination):
            return NotImplemented
        return self.shape() == other.shape() and self.terms == other.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return self._new(out)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return self._new(dict((k, -c) for k, c in self.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = frac(c)
        return self._new(dict((k, c * v) for k, v in self.terms.items()))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # Apply a linear map given on keys (returning Combinations or dicts)
    def map_linear(self, f, target = None):
        acc = {}
        for k, c in self.terms.items():
            image = f(k)
            image = image.terms if isinstance(image, Combination) else image
            for k2, c2 in image.items():
                acc[k2] = acc.get(k2, ZERO) + c * c2
        if target is None:
            return self._new(acc)
        return target(acc)

    def __repr__(self):
        if not self.terms:
            return '%s(0)' % self.__class__.__name__
        return '%s(%s)' % (self.__class__.__name__, ' + '.join(
            '%s*%s' % (c, k) for k, c in sorted(self.terms.items(),
                                                key = lambda kc: repr(kc[0]))))
