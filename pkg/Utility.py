#!/usr/bin/env python

# Utility functions: errors, exact combinatorics, encoders and parameters.

import json
import logging
from fractions import Fraction

import sympy
from scipy.special import comb, factorial as sp_factorial

logger = logging.getLogger(__name__)


class HopfError(ValueError):
    pass

# Result would have negative truncation order
class TruncationError(HopfError):
    pass

class OrderMismatchError(HopfError):
    pass

# Element outside the domain of the operation
class SupportError(HopfError):
    pass

class FactorizationError(HopfError):
    pass

class AxiomViolation(HopfError):
    def __init__(self, identity, counterexample = None):
        self.identity = identity
        self.counterexample = counterexample
        msg = 'identity fails: %s' % identity
        if counterexample is not None:
            msg += ' (at %s)' % (counterexample,)
        HopfError.__init__(self, msg)

class FixtureError(HopfError):
    def __init__(self, path, lineno, msg):
        self.path = path
        self.lineno = lineno
        HopfError.__init__(self, '%s:%d: %s' % (path, lineno, msg))

class UsageError(HopfError):
    pass


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return int(comb(n, k, exact = True))

def factorial(n):
    return int(sp_factorial(n, exact = True))

# Multinomial coefficient (sum ks)! / prod(k!)
def multinomial(ks):
    total, out = 0, 1
    for k in ks:
        total += k
        out *= binomial(total, k)
    return out

def frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)

def fraction_json(c):
    c = frac(c)
    return [c.numerator, c.denominator]

def fraction_from_json(pair):
    return Fraction(pair[0], pair[1])

# Coefficient in front of a LaTeX monomial; sign handled by the caller
def fraction_latex(c, bare = False):
    c = abs(frac(c))
    if bare and c == 1:
        return ''
    if c.denominator == 1:
        return '%d' % c.numerator
    return '\\frac{%d}{%d}' % (c.numerator, c.denominator)

# Join (coefficient, monomial-latex) pairs into a signed sum
def latex_sum(terms):
    out = []
    for c, mono in terms:
        c = frac(c)
        sign = '-' if c < 0 else '+'
        if mono == '':
            body = fraction_latex(c)
        else:
            body = fraction_latex(c, bare = True) + mono
        if not out:
            out.append(body if sign == '+' else '-' + body)
        else:
            out.append('%s %s' % (sign, body))
    if not out:
        return '0'
    return ' '.join(out)

def dump_json(doc):
    return json.dumps(doc, indent = 2, sort_keys = True) + '\n'


# Values from key=value files: ints, booleans, then strings
def parse_value(text):
    text = text.strip()
    if text.lower() in ('true', 'yes', 'on'):
        return True
    if text.lower() in ('false', 'no', 'off'):
        return False
    try:
        return int(text)
    except ValueError:
        pass
    if len(text) >= 2 and text[0] == text[-1] and text[0] in '"\'':
        return text[1:-1]
    return text

def read_config(path):
    out = {}
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, 1):
            line = line.split('#', 1)[0].strip()
            if not line or (line.startswith('[') and line.endswith(']')):
                continue
            if '=' not in line:
                raise UsageError('%s:%d: expected key = value' % (path, lineno))
            key, value = line.split('=', 1)
            out[key.strip().replace('-', '_')] = parse_value(value)
    return out

# Override defaults in place; unknown keys are reported, not applied
def update_params(params, new_params, source):
    for k in sorted(new_params):
        if k not in params:
            logger.warning('ignoring unknown parameter %s from %s', k, source)
            continue
        logger.debug('%s: %s -> %s (from %s)', k, params[k], new_params[k],
                     source)
        params[k] = new_params[k]
    return params

def load_params_file(params, path):
    with open(path, 'r') as f:
        new_params = json.load(f)
    if not isinstance(new_params, dict):
        raise UsageError('%s: parameter file must hold a JSON object' % path)
    return update_params(params, new_params, path)

def init_logging(level = 'WARNING'):
    if isinstance(level, str):
        level = getattr(logging, level.upper(), None)
        if not isinstance(level, int):
            raise UsageError('unknown log level')
    logging.basicConfig(level = level,
                        format = '%(asctime)s %(name)s %(levelname)s: %(message)s')
    logging.getLogger().setLevel(level)
