#!/usr/bin/env python

# Formal trace cochains built from the derivations d_alpha, d_s and delta_1.

"""A pattern (w0, w1, ..., wn) stands for the cochain

    a0, ..., an  ->  tau(w0(a0) w1(a1) ... wn(an))

where each word is delta_1^u d_alpha^p d_s^q (delta_1 outermost). The
trace tau is never evaluated. It enters only through

    tau(d_alpha a) = 0,   tau(delta_1 a) = 0,   tau(d_s a) = -tau(a).

The last rule is tau(Y a) = delta(Y) tau(a) with Y = -d_s and delta(Y) = 1.
Within words d_alpha commutes with everything and [d_s, delta_1] = -delta_1,
so d_s delta_1 X = delta_1 d_s X - delta_1 X. A u-marker read from the
fixtures (the A -> A* derivation d_u) is delta_1 once it is off slot 0, and
at most one slot of a pattern may carry it.
"""

import logging
from collections import namedtuple

from Kernel import Combination, ZERO, ONE
from Utility import binomial, frac, fraction_json, FixtureError, SupportError

logger = logging.getLogger(__name__)

LETTERS = ('u', 'a', 's')
DEFAULT_PEEL_ORDER = ('u', 'a', 's')


class DerivWord(namedtuple('DerivWord', 'u p q')):
    __slots__ = ()

    @staticmethod
    def parse(text):
        """Letters a, s, u in any order; '' or '1' is the empty word."""
        text = text.strip()
        if text == '1':
            text = ''
        bad = set(text) - set(LETTERS)
        if bad:
            raise SupportError('unknown letters %s in word %r' %
                               (''.join(sorted(bad)), text))
        u = text.count('u')
        if u > 1:
            raise SupportError('d_u cannot be iterated: %r' % text)
        return DerivWord(u, text.count('a'), text.count('s'))

    def is_empty(self):
        return not (self.u or self.p or self.q)

    def length(self):
        return self.u + self.p + self.q

    def __str__(self):
        return 'u' * self.u + 'a' * self.p + 's' * self.q or '1'

EMPTY = DerivWord(0, 0, 0)


def apply_letter(letter, word):
    """letter o word as {DerivWord: coefficient}."""
    u, p, q = word
    if letter == 'a':
        return {DerivWord(u, p + 1, q): ONE}
    if letter == 's':
        if u:
            return {DerivWord(1, p, q + 1): ONE, DerivWord(1, p, q): -ONE}
        return {DerivWord(0, p, q + 1): ONE}
    if letter == 'u':
        if u:
            raise SupportError('d_u cannot be iterated')
        return {DerivWord(1, p, q): ONE}
    raise SupportError('unknown derivation %r' % letter)

def leibniz(word):
    """word(x y) as {(word on x, word on y): coefficient}."""
    out = {}
    for i in range(word.p + 1):
        for j in range(word.q + 1):
            c = binomial(word.p, i) * binomial(word.q, j)
            left = (i, j)
            right = (word.p - i, word.q - j)
            if word.u:
                pairs = ((DerivWord(1, *left), DerivWord(0, *right)),
                         (DerivWord(0, *left), DerivWord(1, *right)))
            else:
                pairs = ((DerivWord(0, *left), DerivWord(0, *right)),)
            for pair in pairs:
                out[pair] = out.get(pair, ZERO) + c
    return out

def peel(letter, word):
    """Split word = letter o inner + rest; returns (inner, rest dict)."""
    u, p, q = word
    if letter == 'u' and u:
        return DerivWord(0, p, q), {}
    if letter == 'a' and p:
        return DerivWord(u, p - 1, q), {}
    if letter == 's' and q:
        inner = DerivWord(u, p, q - 1)
        # delta_1 d_s = d_s delta_1 + delta_1
        return inner, ({inner: ONE} if u else {})
    return None


class Pattern(tuple):
    """Tuple of DerivWords, slot 0 first."""

    def __new__(cls, words):
        words = tuple(w if isinstance(w, DerivWord) else DerivWord.parse(w)
                      for w in words)
        if sum(w.u for w in words) > 1:
            raise SupportError('two d_u markers in one pattern')
        return tuple.__new__(cls, words)

    @property
    def level(self):
        return len(self) - 1

    def letters(self):
        return (sum(w.u for w in self), sum(w.p for w in self),
                sum(w.q for w in self))

    def is_canonical(self):
        return self[0].is_empty()

    def __str__(self):
        return '(' + ', '.join(str(w) for w in self[1:]) + ')' \
            if self.is_canonical() else \
            '[' + ', '.join(str(w) for w in self) + ']'

    def sort_key(self):
        return tuple((w.u, w.p, w.q) for w in self)


class FormalCochain(Combination):
    __slots__ = ('level',)

    def __init__(self, terms = None, level = 0):
        Combination.__init__(self, terms)
        for k in self.terms:
            assert(len(k) == level + 1)
        self.level = level

    def shape(self):
        return self.level

    def _new(self, terms):
        return FormalCochain(terms, self.level)

    @staticmethod
    def single(words, c = 1):
        pattern = Pattern(words)
        return FormalCochain({pattern: c}, pattern.level)

    def sorted_terms(self):
        return sorted(self.terms.items(), key = lambda kc: kc[0].sort_key())

    def to_json(self):
        return [{'coefficient': fraction_json(c),
                 'pattern': [str(w) for w in k]}
                for k, c in self.sorted_terms()]

    def __str__(self):
        return ' + '.join('%s%s' % (c, k) for k, c in self.sorted_terms()) \
            or '0'

def _cochain(level, acc):
    return FormalCochain(dict((Pattern(k), c) for k, c in acc.items()), level)

def _add(acc, key, c):
    acc[key] = acc.get(key, ZERO) + c


def normalize(cochain, order = DEFAULT_PEEL_ORDER):
    """Integrate by parts until slot 0 carries the empty word.

    The letter peeled first is the first of `order` present in the slot 0
    word; every order gives the same result.
    """
    done = {}
    todo = dict(cochain.terms)
    while todo:
        pattern, c = todo.popitem()
        if not c:
            continue
        if pattern[0].is_empty():
            _add(done, pattern, c)
            continue
        letter = next(l for l in order if peel(l, pattern[0]) is not None)
        inner, rest = peel(letter, pattern[0])
        tail = pattern[1:]
        for w, c2 in rest.items():
            _add(todo, (w,) + tail, c * c2)
        # tau(L(a0 w)) = -tau(a0 w) for L = d_s and 0 otherwise
        if letter == 's':
            _add(todo, (inner,) + tail, -c)
        for i in range(len(tail)):
            for w, c2 in apply_letter(letter, tail[i]).items():
                key = Pattern((inner,) + tail[:i] + (w,) + tail[i + 1:])
                _add(todo, key, -c * c2)
    return _cochain(cochain.level, done)


def face(i, cochain):
    """Coface d_i from level n to n + 1 (slot merge, last one cyclic)."""
    n = cochain.level
    acc = {}
    for pattern, c in cochain.items():
        if i <= n:
            for (x, y), c2 in leibniz(pattern[i]).items():
                _add(acc, pattern[:i] + (x, y) + pattern[i + 1:], c * c2)
        else:
            # tau(w0(a_{n+1} a0) ...) = tau(y(a0) w1(a1) ... x(a_{n+1}))
            for (x, y), c2 in leibniz(pattern[0]).items():
                _add(acc, (y,) + pattern[1:] + (x,), c * c2)
    return _cochain(n + 1, acc)

def b_cochain(cochain, order = DEFAULT_PEEL_ORDER):
    n = cochain.level
    out = FormalCochain({}, n + 1)
    for i in range(n + 2):
        out = out + face(i, cochain).scale((-1) ** i)
    return normalize(out, order)

def rotate(cochain):
    """lambda: (w0, ..., wn) -> (-1)^n (w1, ..., wn, w0)."""
    n = cochain.level
    acc = dict((k[1:] + k[:1], c * (-1) ** n) for k, c in cochain.items())
    return _cochain(n, acc)

def B_cochain(cochain, order = DEFAULT_PEEL_ORDER):
    """B = (sum_j lambda^j) B0 with a formal unit killing nonempty words.

    (B0 phi)(a0..a_{n-1}) = phi(1, a0, ..., a_{n-1})
                            - (-1)^n phi(a_{n-1}, 1, a0, ..., a_{n-2})
    """
    n = cochain.level
    if n < 1:
        raise SupportError('B needs a cochain of level >= 1')
    acc = {}
    for pattern, c in cochain.items():
        if pattern[0].is_empty():
            _add(acc, pattern[1:], c)
        if pattern[1].is_empty():
            _add(acc, pattern[2:] + pattern[:1], -(-1) ** n * c)
    term = normalize(_cochain(n - 1, acc), order)
    out = term
    for _ in range(n - 1):
        term = normalize(rotate(term), order)
        out = out + term
    return out


def differences(lhs, rhs):
    """[(pattern, lhs coefficient, rhs coefficient)] where they differ."""
    keys = sorted(set(lhs.terms) | set(rhs.terms), key = Pattern.sort_key)
    return [(k, lhs.coefficient(k), rhs.coefficient(k)) for k in keys
            if lhs.coefficient(k) != rhs.coefficient(k)]


def parse_fixture_line(line):
    """'coeff ; w0 | w1 | ...' as (coefficient, Pattern)."""
    if ';' not in line:
        raise SupportError("expected 'coefficient ; words'")
    coeff, words = line.split(';', 1)
    try:
        c = frac(coeff.strip())
    except (ValueError, ZeroDivisionError):
        raise SupportError('bad coefficient %r' % coeff.strip())
    return c, Pattern(w for w in words.split('|'))

def read_fixture(path, level = None):
    """Cochain from a fixture file; '#' starts a comment."""
    acc = {}
    lineno = 0
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            try:
                c, pattern = parse_fixture_line(line)
            except SupportError as e:
                raise FixtureError(path, lineno, str(e))
            if level is None:
                level = pattern.level
            if pattern.level != level:
                raise FixtureError(path, lineno, 'pattern %s has level %d, '
                                   'expected %d' % (pattern, pattern.level,
                                                    level))
            if not pattern.is_canonical():
                raise FixtureError(path, lineno, 'slot 0 must be 1')
            _add(acc, pattern, c)
    logger.debug('read %d patterns from %s (%d lines)', len(acc), path, lineno)
    return _cochain(0 if level is None else level, acc)


def _diff_json(diff):
    return [{'pattern': str(k), 'computed': fraction_json(a),
             'expected': fraction_json(b)} for k, a, b in diff]

def verify_appendix(psi_path, bpsi_path):
    """Check b(psi) against the printed bpsi and B(psi) = 0.

    Returns a list of {identity, passed, diff} records. Mismatches are
    reported as found; the fixtures are never adjusted.
    """
    psi = read_fixture(psi_path, 2)
    bpsi = read_fixture(bpsi_path, 3)
    computed = b_cochain(psi)
    report = []
    diff = differences(computed, normalize(bpsi))
    report.append({'identity': 'b(psi) == printed bpsi', 'passed': not diff,
                   'diff': _diff_json(diff)})
    for k, a, e in diff:
        logger.warning('b(psi) differs at %s: computed %s, printed %s', k, a, e)
    Bpsi = B_cochain(psi)
    report.append({'identity': 'B(psi) == 0', 'passed': Bpsi.is_zero(),
                   'diff': _diff_json(differences(Bpsi, FormalCochain({}, 1)))})
    closed = b_cochain(bpsi)
    # informational only
    report.append({'identity': 'printed bpsi is b-closed',
                   'passed': closed.is_zero(), 'informational': True,
                   'diff': _diff_json(differences(closed,
                                                  FormalCochain({}, 4)))})
    return report
