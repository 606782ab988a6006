#!/usr/bin/env python

# The hopf command line: documents, golden outputs and exit codes.

import os
import json

import pytest

import hopf

GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data',
                      'golden')

def golden(name):
    with open(os.path.join(GOLDEN, name)) as f:
        return f.read()

def run(capsys, *argv):
    code = hopf.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize('argv, name', [
    (('compute', 'antipode', '--n', '3'), 'compute_antipode_3.json'),
    (('compute', 'rho', '--n', '1'), 'compute_rho_1.json'),
    (('compute', 'coproduct', '--n', '3'), 'compute_coproduct_3.json'),
    (('compute', 'delta-coords', '--jet', '1', '--order', '4', '--n', '3'),
     'compute_delta_coords.json'),
    (('compute', 'weil', '--n', '1'), 'compute_weil_WO_1.json'),
    (('compute', 'weil', '--n', '2'), 'compute_weil_WO_2.json'),
    (('compute', 'weil', '--n', '1', '--variant', 'WSO'),
     'compute_weil_WSO_1.json'),
    (('compute', 'weil', '--n', '2', '--variant', 'WSO'),
     'compute_weil_WSO_2.json'),
    (('compute', 'ce'), 'compute_ce_trivial.json'),
    (('compute', 'ce', '--coefficients', 'delta'), 'compute_ce_delta.json'),
    (('compute', 'bicrossed', '--group', 's3'), 'compute_bicrossed_s3.json'),
    (('verify', 'appendix'), 'verify_appendix.json')])
def test_golden_json(capsys, argv, name):
    code, out, _ = run(capsys, *argv)
    assert code == hopf.EXIT_OK
    assert json.loads(out) == json.loads(golden(name))

def test_golden_latex(capsys):
    code, out, _ = run(capsys, 'compute', 'rho', '--n', '4', '--format', 'latex')
    assert code == hopf.EXIT_OK
    assert out == golden('compute_rho_4.tex')

def test_coproduct_document(capsys):
    code, out, _ = run(capsys, 'compute', 'coproduct', '--n', '1')
    doc = json.loads(out)
    assert code == 0
    assert doc['schema'] == hopf.SCHEMA and doc['target'] == 'coproduct'
    assert len(doc['result']) == 2


def test_usage_errors(capsys):
    assert run(capsys, 'compute', 'antipode', '--n', '0')[0] == hopf.EXIT_USAGE
    assert run(capsys, 'compute', 'rho', '--n', '13')[0] == hopf.EXIT_USAGE
    assert run(capsys, 'compute', 'frobenius')[0] == hopf.EXIT_USAGE
    code, _, err = run(capsys, 'verify', 'everything')
    assert code == hopf.EXIT_USAGE
    assert 'unknown suite' in err
    assert run(capsys, 'compute', 'bicrossed', '--group', 'q8')[0] == \
        hopf.EXIT_USAGE

def test_bad_command():
    with pytest.raises(SystemExit) as err:
        hopf.main(['transform', 'antipode'])
    assert err.value.code == 2


def test_params_file_and_config(capsys, tmp_path):
    p = tmp_path / 'p.json'
    p.write_text(u'{"n": 1}')
    code, out, _ = run(capsys, 'compute', 'rho', '--params', str(p))
    assert json.loads(out) == json.loads(golden('compute_rho_1.json'))
    c = tmp_path / 'hopf.cfg'
    c.write_text(u'[hopf]\nn = 3\n')
    code, out, _ = run(capsys, 'compute', 'antipode', '--config', str(c))
    assert json.loads(out)['parameters'] == {'n': 3}
    # flags beat the config file
    code, out, _ = run(capsys, 'compute', 'antipode', '--config', str(c),
                       '--n', '2')
    assert json.loads(out)['parameters'] == {'n': 2}

def test_resolve_params_order(tmp_path):
    p = tmp_path / 'p.json'
    p.write_text(u'{"trials": 5, "seed": 1}')
    args = hopf.build_parser().parse_args(
        ['verify', 'hopf', '--params', str(p), '--seed', '2', '-vv'])
    resolved = hopf.resolve_params(args)
    assert (resolved['trials'], resolved['seed']) == (5, 2)
    assert resolved['log_level'] == 'DEBUG'
    assert hopf.params['seed'] == 137

def test_output_file(capsys, tmp_path):
    path = tmp_path / 'out.tex'
    code, out, _ = run(capsys, 'compute', 'rho', '--n', '4', '--format',
                       'latex', '--output', str(path))
    assert code == 0 and out == ''
    assert path.read_text() == golden('compute_rho_4.tex')


def test_delta_coords(capsys):
    code, out, _ = run(capsys, 'compute', 'delta-coords', '--jet', '1/2',
                       '--order', '4', '--n', '2')
    doc = json.loads(out)
    # x + c x^2: delta_1 = 2c, delta_2 = -4c^2
    assert doc['result'] == [[1, 1], [-1, 1]]

def test_weil(capsys):
    code, out, _ = run(capsys, 'compute', 'weil', '--n', '1')
    doc = json.loads(out)
    assert doc['result']['betti'] == [1, 0, 0, 1]
    assert doc['result']['representatives'][-1]['cocycle'] == \
        [{'coefficient': [1, 1], 'monomial': 'h1 c1'}]

def test_ce(capsys):
    code, out, _ = run(capsys, 'compute', 'ce', '--coefficients', 'delta')
    doc = json.loads(out)
    assert doc['result']['homology'] == [0, 1, 1]
    assert doc['result']['cycles'][2] == [{'X^Y': [1, 1]}]
    code, out, _ = run(capsys, 'compute', 'ce', '--algebra', 'vector-fields',
                       '--n', '2')
    assert json.loads(out)['result']['cohomology'] == [1, 2, 1]

def test_bicrossed(capsys):
    code, out, _ = run(capsys, 'compute', 'bicrossed', '--group', 's3')
    doc = json.loads(out)['result']
    assert (doc['order'], doc['g1'], doc['g2']) == (6, 3, 2)
    assert doc['counit'] == doc['modular']
    assert len(set(doc['kernel_ranks'])) == 1


def test_verify_hopf(capsys):
    code, out, err = run(capsys, 'verify', 'hopf', '--max-weight', '1',
                         '--trials', '2')
    doc = json.loads(out)
    assert code == hopf.EXIT_OK
    assert doc['status'] == 'success'
    assert doc['parameters']['trials'] == 2
    assert all(r['passed'] for r in doc['checks'])
    assert '0 failed' in err

def test_verify_appendix(capsys):
    code, out, _ = run(capsys, 'verify', 'appendix', '--trials', '1')
    doc = json.loads(out)
    assert code == hopf.EXIT_OK
    assert doc['status'] == 'success'
    checks = dict((r['identity'], r) for r in doc['checks'])
    assert checks['B(psi) == 0']['passed']
    assert checks['b(psi) == printed bpsi']['passed']
