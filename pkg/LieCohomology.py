#!/usr/bin/env python

# Chevalley-Eilenberg (co)homology of finite Lie algebras and the truncated
# Weil complexes WO(n), WSO(n).

"""Only finite-dimensional truncations are computed here. The Lie algebras
Z_1..Z_n of formal vector fields are cut at Z_{>n}; nothing is claimed about
the cohomology of the full infinite-dimensional algebra.

Homology with coefficients in the character psi uses

    d(x_1 ^ ... ^ x_k) = sum_i (-1)^{i+1} psi(x_i) x_1 ^ ..^x_i^.. ^ x_k
                       + sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ ..^x_i^..^x_j^..

and the cochain differential is its transpose.
"""

import logging
from itertools import combinations

import numpy as np

from Kernel import ZERO, ONE, qq, qq_zeros, matrix_rank, matrix_rows, \
     kernel_basis, rank_of_vectors
from Enveloping import bracket_coefficient
from Utility import frac, binomial, fraction_json, AxiomViolation, SupportError

logger = logging.getLogger(__name__)


class FiniteLieAlgebra:
    """Structure constants c[i, j, k] = coefficient of x_k in [x_i, x_j]."""

    def __init__(self, names, brackets, character = None, name = 'L'):
        d = len(names)
        self.names = list(names)
        self.dim = d
        self.name = name
        self.constants = np.empty((d, d, d), dtype = object)
        self.constants.fill(ZERO)
        for (i, j), value in brackets.items():
            if i == j:
                raise AxiomViolation('[x, x] = 0', self.names[i])
            for k, c in value.items():
                self.constants[i, j, k] = frac(c)
                self.constants[j, i, k] = -frac(c)
        where = self.jacobi_counterexample()
        if where is not None:
            raise AxiomViolation('Jacobi identity', where)
        self.character = None
        if character is not None:
            self.character = [frac(c) for c in character]
            for i in range(d):
                for j in range(d):
                    if sum((self.constants[i, j, k] * self.character[k]
                            for k in range(d)), ZERO):
                        raise AxiomViolation('delta([x, y]) = 0',
                                             (self.names[i], self.names[j]))

    def bracket(self, i, j):
        return dict((k, c) for k, c in enumerate(self.constants[i, j]) if c)

    def bracket_vectors(self, u, v):
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    for k, c in self.bracket(i, j).items():
                        out[k] += a * b * c
        return out

    def jacobi_counterexample(self):
        d = self.dim
        for i, j, k in combinations(range(d), 3):
            total = [ZERO] * d
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for m, c1 in self.bracket(b, c).items():
                    for n, c2 in self.bracket(a, m).items():
                        total[n] += c1 * c2
            if any(total):
                return (self.names[i], self.names[j], self.names[k])
        return None

    # tr(ad x_i), always a character
    def ad_trace(self):
        return [sum((self.constants[i, k, k] for k in range(self.dim)), ZERO)
                for i in range(self.dim)]


def abelian_algebra(d):
    return FiniteLieAlgebra(['x%d' % (i + 1) for i in range(d)], {},
                            name = 'abelian%d' % d)

# [X, Y] = -X, delta(Y) = 1
def affine_algebra():
    return FiniteLieAlgebra(['X', 'Y'], {(0, 1): {0: -1}}, [0, 1], 'aff')

def truncated_vector_fields(n, with_z0 = False):
    """Z_1..Z_n (and Z_0) with [Z_k, Z_l] = (l-k)(k+l+1)!/((k+1)!(l+1)!) Z_{k+l}."""
    first = 0 if with_z0 else 1
    indices = list(range(first, n + 1))
    pos = dict((k, i) for i, k in enumerate(indices))
    brackets = {}
    for k, l in combinations(indices, 2):
        if k + l <= n:
            c = bracket_coefficient(k, l)
            if c:
                brackets[(pos[k], pos[l])] = {pos[k + l]: c}
    return FiniteLieAlgebra(['Z%d' % k for k in indices], brackets,
                            name = 'a%d%s' % (n, '+Z0' if with_z0 else ''))


# x_m ^ x_S with S sorted; (sign, sorted tuple) or None
def _wedge_front(m, rest):
    if m in rest:
        return None
    pos = sum(1 for s in rest if s < m)
    return (-1) ** pos, tuple(sorted(rest + (m,)))

def _representatives(kernel, image):
    """Kernel vectors completing a basis of the image to one of the kernel."""
    basis, r, reps = list(image), rank_of_vectors(image), []
    for v in kernel:
        r2 = rank_of_vectors(basis + [v])
        if r2 > r:
            basis, r = basis + [v], r2
            reps.append(v)
    return reps


class CEComplex:
    """Chain complex of Lambda^* L with coefficients in a character."""

    def __init__(self, algebra, coefficients = 'trivial'):
        d = algebra.dim
        if coefficients == 'trivial':
            psi = [ZERO] * d
        elif coefficients == 'delta':
            psi = algebra.character if algebra.character is not None \
                else algebra.ad_trace()
        else:
            psi = [frac(c) for c in coefficients]
        self.algebra = algebra
        self.psi = psi
        self.bases = [list(combinations(range(d), k)) for k in range(d + 1)]
        self.index = [dict((s, i) for i, s in enumerate(b)) for b in self.bases]
        # boundaries[k]: Lambda^k -> Lambda^{k-1}, k = 1..d
        self.boundaries = [None] + [self._boundary(k) for k in range(1, d + 1)]
        for k in range(2, d + 1):
            assert(self._composite_is_zero(k))
        logger.debug('CE complex of %s: dims %s', algebra.name,
                     [len(b) for b in self.bases])

    def _boundary(self, k):
        L = self.algebra
        m = qq_zeros(len(self.bases[k - 1]), len(self.bases[k]))
        for col, s in enumerate(self.bases[k]):
            for i in range(k):
                if self.psi[s[i]]:
                    rest = s[:i] + s[i + 1:]
                    m[self.index[k - 1][rest], col] += \
                        qq((-1) ** i * self.psi[s[i]])
            for i, j in combinations(range(k), 2):
                rest = tuple(x for p, x in enumerate(s) if p not in (i, j))
                # 0-based (i, j): (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
                for t, c in L.bracket(s[i], s[j]).items():
                    w = _wedge_front(t, rest)
                    if w is None:
                        continue
                    sign, key = w
                    row = self.index[k - 1][key]
                    m[row, col] += qq((-1) ** (i + j) * sign * c)
        return m

    def _composite_is_zero(self, k):
        a, b = self.boundaries[k - 1], self.boundaries[k]
        return all(x == 0 for x in a * b)

    def boundary(self, k):
        return self.boundaries[k]

    def _rank(self, k):
        if k < 1 or k > self.algebra.dim:
            return 0
        return matrix_rank(self.boundaries[k])

    def homology_dims(self):
        return [len(self.bases[k]) - self._rank(k) - self._rank(k + 1)
                for k in range(self.algebra.dim + 1)]

    # Through the transposed matrices: d_k = boundary_{k+1}^T
    def cohomology_dims(self):
        d = self.algebra.dim
        ranks = [matrix_rank(self.boundaries[k + 1].T) if k < d else 0
                 for k in range(d + 1)]
        return [len(self.bases[k]) - ranks[k] - (ranks[k - 1] if k else 0)
                for k in range(d + 1)]

    def cycles(self, k):
        """Representatives of H_k as {wedge names: coefficient}."""
        n = len(self.bases[k])
        if k == 0:
            kernel = [[ONE if i == j else ZERO for j in range(n)]
                      for i in range(n)]
        else:
            kernel = kernel_basis(self.boundaries[k])
        image = []
        if k < self.algebra.dim:
            image = matrix_rows(self.boundaries[k + 1].T)
        out = []
        for v in _representatives(kernel, image):
            out.append(dict((self.wedge_name(self.bases[k][i]), c)
                            for i, c in enumerate(v) if c))
        return out

    def wedge_name(self, s):
        return '^'.join(self.algebra.names[i] for i in s) or '1'

    def euler_characteristic(self):
        return sum((-1) ** k * h for k, h in enumerate(self.homology_dims()))

def expected_euler_characteristic(dim):
    return sum((-1) ** k * binomial(dim, k) for k in range(dim + 1))

def ce_cohomology_dims(algebra, coefficients = 'trivial'):
    return CEComplex(algebra, coefficients).cohomology_dims()

def lie_homology_delta(algebra, character = None):
    """Homology with coefficients in C_delta: (Betti numbers, cycles per degree)."""
    cx = CEComplex(algebra, 'delta' if character is None else character)
    dims = cx.homology_dims()
    return dims, [cx.cycles(k) for k in range(algebra.dim + 1)]


class WeilTruncated:
    """E(h_i, i odd <= n) (x) P(c_1..c_n), truncated at c-weight > 2n.

    Monomials are keys (h-indices, c-exponents, chi-power). For WSO with n
    even, chi has degree and weight n, d chi = 0 and chi^2 = c_n.
    """

    def __init__(self, n, variant = 'WO'):
        if n < 1:
            raise SupportError('Weil complex needs n >= 1')
        if variant not in ('WO', 'WSO'):
            raise SupportError('unknown Weil complex %s' % variant)
        self.n = n
        self.variant = variant
        self.has_chi = variant == 'WSO' and n % 2 == 0
        self.odd = [i for i in range(1, n + 1) if i % 2]
        self.basis = sorted(self._monomials(), key = self.sort_key)
        self.by_degree = {}
        for m in self.basis:
            self.by_degree.setdefault(self.degree(m), []).append(m)
        self.max_degree = max(self.by_degree)
        assert(self._d_squared_is_zero())

    def _c_exponents(self, budget, i = 1):
        if i > self.n:
            yield ()
            return
        for e in range(budget // (2 * i) + 1):
            for rest in self._c_exponents(budget - 2 * i * e, i + 1):
                yield (e,) + rest

    def _monomials(self):
        out = []
        for chi in ((0, 1) if self.has_chi else (0,)):
            budget = 2 * self.n - chi * self.n
            for k in range(len(self.odd) + 1):
                for hs in combinations(self.odd, k):
                    for e in self._c_exponents(budget):
                        out.append((hs, e, chi))
        return out

    def c_weight(self, m):
        hs, e, chi = m
        return sum(2 * (i + 1) * x for i, x in enumerate(e)) + chi * self.n

    def degree(self, m):
        hs, e, chi = m
        return sum(2 * i - 1 for i in hs) + self.c_weight(m)

    def sort_key(self, m):
        return (self.degree(m), m[2], m[0], tuple(-x for x in m[1]))

    def _reduce(self, hs, e, chi):
        e = list(e)
        if chi == 2:
            e[self.n - 1] += 1
            chi = 0
        m = (hs, tuple(e), chi)
        return m if self.c_weight(m) <= 2 * self.n else None

    def d(self, m):
        hs, e, chi = m
        out = {}
        for p, i in enumerate(hs):
            e2 = list(e)
            e2[i - 1] += 1
            key = self._reduce(hs[:p] + hs[p + 1:], e2, chi)
            if key is not None:
                out[key] = out.get(key, ZERO) + (-1) ** p
        return dict((k, c) for k, c in out.items() if c)

    def d_element(self, u):
        out = {}
        for m, c in u.items():
            for k, c2 in self.d(m).items():
                out[k] = out.get(k, ZERO) + c * c2
        return dict((k, c) for k, c in out.items() if c)

    def _d_squared_is_zero(self):
        return all(not self.d_element(self.d(m)) for m in self.basis)

    def generator(self, name):
        """'h1', 'c2', 'chi' as monomials."""
        e = [0] * self.n
        if name == 'chi':
            if not self.has_chi:
                raise SupportError('chi lives in WSO(n) for even n')
            return ((), tuple(e), 1)
        i = int(name[1:])
        if name[0] == 'h' and i in self.odd:
            return ((i,), tuple(e), 0)
        if name[0] == 'c' and 1 <= i <= self.n:
            e[i - 1] = 1
            return ((), tuple(e), 0)
        raise SupportError('no generator %s in %s(%d)' %
                           (name, self.variant, self.n))

    def multiply(self, m1, m2):
        """Product of two monomials as (sign, monomial) or None."""
        (h1, e1, x1), (h2, e2, x2) = m1, m2
        if set(h1) & set(h2):
            return None
        hs = h1 + h2
        sign = 1
        for a in h1:
            sign *= (-1) ** sum(1 for b in h2 if b < a)
        key = self._reduce(tuple(sorted(hs)),
                           [a + b for a, b in zip(e1, e2)], x1 + x2)
        return None if key is None else (sign, key)

    def monomial(self, *names):
        out = ((), (0,) * self.n, 0)
        sign = 1
        for name in names:
            r = self.multiply(out, self.generator(name))
            if r is None:
                return None
            sign *= r[0]
            out = r[1]
        return {out: sign}

    def _matrix(self, k):
        """d: degree k -> degree k + 1."""
        src = self.by_degree.get(k, [])
        dst = dict((m, i) for i, m in enumerate(self.by_degree.get(k + 1, [])))
        m = qq_zeros(len(dst), len(src))
        for j, mono in enumerate(src):
            for key, c in self.d(mono).items():
                m[dst[key], j] = qq(c)
        return m

    def _image(self, k):
        """Images of degree k-1 monomials, as vectors in degree k."""
        if k - 1 not in self.by_degree:
            return []
        return [r for r in matrix_rows(self._matrix(k - 1).T) if any(r)]

    def betti(self):
        out = []
        for k in range(self.max_degree + 1):
            n = len(self.by_degree.get(k, []))
            rank_out = matrix_rank(self._matrix(k)) if n else 0
            rank_in = matrix_rank(self._matrix(k - 1)) if k and \
                self.by_degree.get(k - 1) else 0
            out.append(n - rank_out - rank_in)
        return out

    def representatives(self):
        """(degree, cocycle) pairs spanning the cohomology."""
        out = []
        for k in range(self.max_degree + 1):
            src = self.by_degree.get(k, [])
            if not src:
                continue
            kernel = kernel_basis(self._matrix(k))
            for v in _representatives(kernel, self._image(k)):
                out.append((k, dict((src[i], c) for i, c in enumerate(v) if c)))
        return out

    def is_cocycle(self, u):
        return not self.d_element(u)

    def is_nontrivial(self, u):
        """u a cocycle of one degree; True when its class is nonzero."""
        assert(self.is_cocycle(u))
        degrees = set(self.degree(m) for m in u)
        if not degrees:
            return False
        assert(len(degrees) == 1)
        k = degrees.pop()
        src = self.by_degree[k]
        v = [u.get(m, ZERO) for m in src]
        image = self._image(k)
        return rank_of_vectors(image + [v]) > rank_of_vectors(image)

    def monomial_name(self, m):
        hs, e, chi = m
        parts = ['h%d' % i for i in hs]
        parts += [('c%d' % (i + 1)) + ('^%d' % x if x > 1 else '')
                  for i, x in enumerate(e) if x]
        if chi:
            parts.append('chi')
        return ' '.join(parts) or '1'

    def element_json(self, u):
        return [{'coefficient': fraction_json(c), 'monomial': self.monomial_name(m)}
                for m, c in sorted(u.items(), key = lambda mc: self.sort_key(mc[0]))]

def weil_cohomology(n, variant = 'WO'):
    w = WeilTruncated(n, variant)
    betti = w.betti()
    logger.info('%s(%d): Betti numbers %s', variant, n, betti)
    return betti, w.representatives()

# p_i = c_{2i} for 2i <= n
def pontrjagin_classes(n):
    w = WeilTruncated(n)
    return [(i, w.monomial('c%d' % (2 * i))) for i in range(1, n // 2 + 1)]

# h_1 c_1^n
def godbillon_vey(n):
    w = WeilTruncated(n)
    return w.monomial('h1', *(['c1'] * n))
