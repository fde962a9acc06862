from numpy.testing import assert_

import sepsim as ss
from sepsim import testing
from sepsim.plot import plot_sweep


def test_plot_sweep():
    "svg output is deterministic"
    spec = ss.ExperimentSpec(ss.coupon(10), trials=20, seed=0)
    est = ss.sweep(spec, 'm', [10, 25, 40], n_jobs=1)
    marks = spec.scenario.thresholds('m')
    paths = [testing.create_tempfile('sepsim_plot{}.svg'.format(i))
             for i in range(2)]
    try:
        for path in paths:
            plot_sweep(est, path, marks)
        with open(paths[0], 'rb') as f:
            first = f.read()
        with open(paths[1], 'rb') as f:
            second = f.read()
        assert_(first.startswith(b'<?xml'), 'not an svg file')
        assert_(first == second, 'svg output differs between runs')
    finally:
        for path in paths:
            testing.delete_tempfile(path)
