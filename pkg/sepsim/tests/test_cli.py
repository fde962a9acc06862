import os
import json
import logging

from numpy.testing import assert_equal, assert_, assert_allclose

import sepsim as ss
from sepsim import testing
from sepsim.cli import main, threshold_table, scenario_defaults

RUN = "scenario = grid-full\nn = 20\nm = 80\ntrials = 30\nseed = 1\n"
SWEEP = ("scenario = coupon\nn = 10\ntrials = 20\naxis = m\n"
         "values = 10, 25, 40\n")
INSTANCE = "radius = 0.08\n[targets]\n0.2\n0.3\n0.6\n[sensors]\n0.25\n0.58\n"
INSTANCE += "0.63\n"


def write(name, text):
    path = testing.create_tempfile(name)
    with open(path, 'w') as f:
        f.write(text)
    return path


def read(path):
    with open(path, 'rb') as f:
        return f.read()


def test_threshold_table():
    "grid-full threshold values"
    table, errors = threshold_table('grid-full', n=500, c=5.0)
    assert_equal(errors, [])
    values = dict(zip(table['name'], table['value']))
    assert_allclose(values['m +'], 5607.30, rtol=1e-5)
    assert_allclose(values['radius'], 0.001)
    table, errors = threshold_table('random-partial', n=1000)
    values = dict(zip(table['name'], table['value']))
    assert_allclose(values['m sufficient'], 31404, rtol=1e-4)
    assert_equal(len(errors), 1)
    assert_(errors[0].startswith('m necessary'), 'error row')
    assert_equal(scenario_defaults('coupon'), {'m': 'coupon', 'c': 5.0})
    for name in ss.scenario_names():
        n = 1000 if name == 'random-partial' else 100
        table, errors = threshold_table(name, n=n)
        assert_(len(table) > 0, 'empty table for ' + name)


def test_thresholds_json(capsys):
    "thresholds command writes json"
    assert_equal(main(['thresholds', '--scenario', 'grid-full', '--n', '500',
                       '--c', '5', '--format', 'json']), 0)
    records = json.loads(capsys.readouterr().out)
    values = dict((r['name'], r['value']) for r in records)
    assert_allclose(values['m +'], 5607.30, rtol=1e-5)
    assert_allclose(values['m -'], 607.30, rtol=1e-4)


def test_thresholds_domain_error(capsys, caplog):
    "rows outside their domain are null and the exit status is 1"
    caplog.set_level(logging.ERROR, logger='sepsim')
    status = main(['thresholds', '--scenario', 'random-partial', '--n',
                   '1000', '--format', 'json'])
    assert_equal(status, 1)
    records = json.loads(capsys.readouterr().out)
    values = dict((r['name'], r['value']) for r in records)
    assert_(values['m necessary'] is None, 'necessary row should be null')
    assert_('m necessary' in caplog.text, 'error not logged')


def test_thresholds_bad_gamma(caplog):
    "gamma outside (0, 1/2) is rejected"
    caplog.set_level(logging.ERROR, logger='sepsim')
    status = main(['thresholds', '--scenario', 'adversarial-full', '--n',
                   '100', '--gamma', '0.6'])
    assert_equal(status, 1)
    assert_('gamma' in caplog.text, 'gamma error not logged')


def test_estimate_command():
    "estimate output is byte identical across runs and workers"
    cfg = write('sepsim_cli_run.cfg', RUN)
    outs = [testing.create_tempfile('sepsim_cli_est{}.csv'.format(i))
            for i in range(2)]
    try:
        assert_equal(main(['estimate', cfg, '--out', outs[0]]), 0)
        assert_equal(main(['estimate', cfg, '--out', outs[1], '--threads',
                           '2']), 0)
        assert_equal(read(outs[0]), read(outs[1]))
        est = ss.load_estimate_csv(outs[0])
        assert_equal(est.to_records()[0]['trials'], 30)
        assert_equal(main(['estimate', cfg, '--out', outs[1], '--trials',
                           '10', '--format', 'json']), 0)
        with open(outs[1]) as f:
            records = json.load(f)
        assert_equal(records[0]['trials'], 10)
    finally:
        testing.delete_tempfile(cfg)
        for path in outs:
            testing.delete_tempfile(path)


def test_estimate_command_errors(caplog):
    "bad config files give exit status 1"
    caplog.set_level(logging.ERROR, logger='sepsim')
    cfg = write('sepsim_cli_bad.cfg', RUN + 'bogus = 3\n')
    try:
        assert_equal(main(['estimate', cfg]), 1)
        assert_('line 6' in caplog.text, 'line number not logged')
    finally:
        testing.delete_tempfile(cfg)
    missing = testing.create_tempfile('sepsim_cli_missing.cfg')
    testing.delete_tempfile(missing)
    assert_equal(main(['estimate', missing]), 1)


def test_sweep_command():
    "sweep writes rows and a plot"
    cfg = write('sepsim_cli_sweep.cfg', SWEEP)
    out = testing.create_tempfile('sepsim_cli_sweep.csv')
    svg = testing.create_tempfile('sepsim_cli_sweep.svg')
    try:
        assert_equal(main(['sweep', cfg, '--out', out, '--plot', svg]), 0)
        est = ss.load_estimate_csv(out)
        assert_equal(len(est), 3)
        assert_equal(est.axis_name(), 'm')
        assert_(read(svg).startswith(b'<?xml'), 'plot not written')
        assert_equal(main(['sweep', write('sepsim_cli_run.cfg', RUN)]), 1)
    finally:
        for path in (cfg, out, svg,
                     testing.create_tempfile('sepsim_cli_run.cfg')):
            testing.delete_tempfile(path)


def test_sweep_preset_values_skip_plot(caplog):
    "sweep over radius preset names writes rows but no plot"
    caplog.set_level(logging.WARNING, logger='sepsim')
    text = ("scenario = grid-full\nn = 10\nm = 40\ntrials = 10\n"
            "axis = radius\nvalues = a, two-minus-a, n-plus-one\n")
    cfg = write('sepsim_cli_presets.cfg', text)
    out = testing.create_tempfile('sepsim_cli_presets.csv')
    svg = testing.create_tempfile('sepsim_cli_presets.svg')
    testing.delete_tempfile(svg)
    try:
        assert_equal(main(['sweep', cfg, '--out', out, '--plot', svg]), 0)
        est = ss.load_estimate_csv(out)
        assert_equal(list(est.df['param']),
                     ['radius=a', 'radius=two-minus-a', 'radius=n-plus-one'])
        assert_(not os.path.exists(svg), 'plot should be skipped')
        assert_('skipping plot' in caplog.text, 'skip not logged')
    finally:
        for path in (cfg, out, svg):
            testing.delete_tempfile(path)


def test_check_command(capsys):
    "check reports identifiability as json"
    path = write('sepsim_cli_instance.txt', INSTANCE)
    try:
        assert_equal(main(['check', path]), 0)
        d = json.loads(capsys.readouterr().out)
        assert_equal(d['unique_count'], [0, 0, 2])
        assert_equal(d['identifiable'], [False, False, True])
        assert_equal(d['fully_separable'], False)
        assert_equal(d['sensors'], 3)
        assert_equal(d['radius'], 0.08)
    finally:
        testing.delete_tempfile(path)


def test_no_command(capsys):
    "no command prints help"
    assert_equal(main([]), 1)
    assert_('usage' in capsys.readouterr().out, 'help not printed')
