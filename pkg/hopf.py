#!/usr/bin/env python

# Command-line front end: compute objects of H(1) and its relatives, and run
# the verification suites. Exit codes: 0 success, 1 failed check, 2 usage.

import os
import sys
import logging
import argparse

from Utility import HopfError, AxiomViolation, UsageError, dump_json, \
     fraction_json, init_logging, latex_sum, load_params_file, read_config, \
     update_params

logger = logging.getLogger(__name__)

SCHEMA = 'cm-hopf/1'
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
N_LIMIT = 12

COMPUTE_TARGETS = ('coproduct', 'antipode', 'rho', 'delta-coords', 'weil', 'ce',
                   'bicrossed')
VERIFY_SUITES = ('hopf', 'duality', 'action', 'matched-pair', 'cyclic',
                 'cohomology', 'appendix', 'all')

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

# Parameters
params = { 'seed': 137,
           'trials': 20,
           'max_weight': 3,
           'n': 2,
           'order': 8,
           'expansional_order': 6,
           'cyclic_max_weight': 2,
           'group': 's3',
           'groups': ['c3', 'c3-dual', 's3', 's3-group', 's3-functions', 'c6',
                      'f21'],
           'kernel_max_order': 6,
           'weil_max_n': 4,
           'variant': 'WO',
           'algebra': 'aff',
           'coefficients': 'trivial',
           'jet': None,
           'format': 'json',
           'log_level': 'WARNING',
           'psi_fixture': os.path.join(DATA, 'appendix_psi.txt'),
           'bpsi_fixture': os.path.join(DATA, 'appendix_bpsi.txt') }

FLAGS = ('n', 'order', 'group', 'format', 'max_weight', 'trials', 'seed',
         'variant', 'algebra', 'coefficients', 'jet')


def build_parser():
    parser = argparse.ArgumentParser(
        prog = 'hopf', description = 'Exact computations in H(1), its '
        'enveloping dual, bicrossed products and their cyclic cohomology.')
    parser.add_argument('command', choices = ('compute', 'verify'))
    parser.add_argument('what', help = 'compute target (%s) or verify suite '
                        '(%s)' % (', '.join(COMPUTE_TARGETS),
                                  ', '.join(VERIFY_SUITES)))
    parser.add_argument('--params', action = 'append', default = [],
                        help = 'JSON file of parameters (repeatable)')
    parser.add_argument('--config', help = 'key = value parameter file')
    parser.add_argument('--n', type = int)
    parser.add_argument('--order', type = int)
    parser.add_argument('--group')
    parser.add_argument('--format', choices = ('json', 'latex'))
    parser.add_argument('--max-weight', dest = 'max_weight', type = int)
    parser.add_argument('--trials', type = int)
    parser.add_argument('--seed', type = int)
    parser.add_argument('--variant', choices = ('WO', 'WSO'))
    parser.add_argument('--algebra', choices = ('aff', 'vector-fields'))
    parser.add_argument('--coefficients', choices = ('trivial', 'delta'))
    parser.add_argument('--jet', help = 'comma separated c2, c3, ... of a jet')
    parser.add_argument('--output', help = 'write the document here')
    parser.add_argument('-v', '--verbose', action = 'count', default = 0)
    return parser

def resolve_params(args, defaults = params):
    p = dict(defaults)
    for path in args.params:
        load_params_file(p, path)
    if args.config:
        update_params(p, read_config(args.config), args.config)
    update_params(p, dict((k, getattr(args, k)) for k in FLAGS
                          if getattr(args, k) is not None), 'command line')
    if args.verbose:
        p['log_level'] = 'INFO' if args.verbose == 1 else 'DEBUG'
    return p


def _require_n(p, low = 1, high = N_LIMIT):
    n = p['n']
    if not isinstance(n, int) or n < low or n > high:
        raise UsageError('--n must lie in %d..%d' % (low, high))
    return n

def _latex_table(header, rows):
    out = ['\\begin{tabular}{%s}' % ('l' * len(header)),
           ' & '.join(header) + ' \\\\', '\\hline']
    out += [' & '.join(str(x) for x in row) + ' \\\\' for row in rows]
    out.append('\\end{tabular}')
    return '\n'.join(out)

def _parse_jet(p):
    from Diffeo import DiffeoJet
    from Experiment import Seed
    from Utility import frac
    order = p['order']
    if p['jet'] is None:
        return Seed(p['seed']).jet(order)
    text = p['jet'] if isinstance(p['jet'], str) else \
        ','.join(str(c) for c in p['jet'])
    try:
        coeffs = [frac(c.strip()) for c in text.split(',') if c.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError('bad jet coefficients %r' % text)
    if len(coeffs) > order - 1:
        raise UsageError('%d coefficients exceed jet order %d' %
                         (len(coeffs), order))
    return DiffeoJet.from_coefficients(coeffs, order)


def compute(target, p):
    """(parameters, JSON result, LaTeX) for one target."""
    if target in ('coproduct', 'antipode', 'rho'):
        from HopfH1 import delta, coproduct, antipode
        from Enveloping import rho_map
        from Kernel import poly_json, poly_latex
        n = _require_n(p)
        if target == 'coproduct':
            value = coproduct(delta(n))
        elif target == 'antipode':
            value = antipode(delta(n))
        else:
            rho = rho_map(delta(n))
            return {'n': n}, poly_json(rho), poly_latex(rho)
        return {'n': n}, value.to_json(), value.to_latex()
    if target == 'delta-coords':
        from Diffeo import delta_coords
        jet = _parse_jet(p)
        n = _require_n(p, 1, jet.order - 1)
        values = [delta_coords(jet, k) for k in range(1, n + 1)]
        coeffs = [fraction_json(c) for c in jet.series.coeffs]
        return ({'n': n, 'order': jet.order, 'jet': coeffs},
                [fraction_json(v) for v in values],
                ', '.join('\\delta_{%d} = %s' % (k + 1, latex_sum([(v, '')]))
                          for k, v in enumerate(values)))
    if target == 'weil':
        from LieCohomology import WeilTruncated
        n = _require_n(p, 1, 6)
        w = WeilTruncated(n, p['variant'])
        betti = w.betti()
        reps = [{'degree': k, 'cocycle': w.element_json(u)}
                for k, u in w.representatives()]
        rows = [(k, b) for k, b in enumerate(betti) if b]
        return ({'n': n, 'variant': p['variant']},
                {'betti': betti, 'representatives': reps},
                _latex_table(['degree', 'dim $H$'], rows))
    if target == 'ce':
        from LieCohomology import CEComplex, affine_algebra, \
             truncated_vector_fields
        if p['algebra'] == 'aff':
            algebra = affine_algebra()
        else:
            algebra = truncated_vector_fields(_require_n(p, 1, 8))
        cx = CEComplex(algebra, p['coefficients'])
        homology = cx.homology_dims()
        cycles = [[dict((k, fraction_json(c)) for k, c in z.items())
                   for z in cx.cycles(k)] for k in range(algebra.dim + 1)]
        return ({'algebra': algebra.name, 'coefficients': p['coefficients']},
                {'homology': homology, 'cohomology': cx.cohomology_dims(),
                 'cycles': cycles},
                _latex_table(['degree', 'dim $H_k$'], enumerate(homology)))
    if target == 'bicrossed':
        from MatchedPair import load_factorization, build_hopf, kernel_ranks
        fact = load_factorization(p['group'])
        hopf = build_hopf(fact)
        rows = [(hopf.key_str(x), hopf.counit(x), hopf.modular(x),
                 ' + '.join(hopf.key_str(y) for y in hopf.antipode(x)))
                for x in hopf.keys]
        doc = {'order': fact.group.order, 'g1': len(fact.g1),
               'g2': len(fact.g2),
               'basis': [hopf.key_json(x) for x in hopf.keys],
               'counit': [int(r[1]) for r in rows],
               'modular': [int(r[2]) for r in rows],
               'antipode': [[hopf.key_json(y) for y in hopf.antipode(x)]
                            for x in hopf.keys]}
        if fact.group.order <= p['kernel_max_order']:
            doc['kernel_ranks'] = list(kernel_ranks(hopf, 1))
        return ({'group': fact.name}, doc,
                _latex_table(['basis', '$\\varepsilon$', '$\\delta$', '$S$'],
                             rows))
    raise UsageError('unknown compute target %s' % target)


def run(args, p, out):
    if args.command == 'compute':
        if args.what not in COMPUTE_TARGETS:
            raise UsageError('unknown compute target %s' % args.what)
        parameters, result, latex = compute(args.what, p)
        if p['format'] == 'latex':
            out.write(latex + '\n')
        else:
            out.write(dump_json({'schema': SCHEMA, 'command': 'compute',
                                 'target': args.what, 'parameters': parameters,
                                 'status': 'success', 'result': result}))
        return EXIT_OK
    from Experiment import run_suites
    if args.what not in VERIFY_SUITES:
        raise UsageError('unknown suite %s' % args.what)
    if args.group is not None:
        p['groups'] = [args.group]
    results = run_suites(args.what, p)
    ok = results.passed()
    out.write(dump_json({'schema': SCHEMA, 'command': 'verify',
                         'suite': args.what,
                         'parameters': dict((k, p[k]) for k in
                                            ('seed', 'trials', 'max_weight',
                                             'n', 'order')),
                         'status': 'success' if ok else 'invariant-violation',
                         'checks': results.to_json()}))
    sys.stderr.write(results.summary() + '\n')
    return EXIT_OK if ok else EXIT_FAILED

def main(argv = None):
    args = build_parser().parse_args(argv)
    try:
        p = resolve_params(args)
        init_logging(p['log_level'])
        if args.output:
            with open(args.output, 'w') as out:
                return run(args, p, out)
        return run(args, p, sys.stdout)
    except AxiomViolation as e:
        sys.stderr.write('hopf: %s\n' % e)
        return EXIT_FAILED
    except (HopfError, IOError, ValueError) as e:
        sys.stderr.write('hopf: %s\n' % e)
        return EXIT_USAGE

if __name__ == '__main__':
    sys.exit(main())
