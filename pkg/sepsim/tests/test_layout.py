import numpy as np
from numpy.testing import (assert_equal, assert_raises, assert_,
                           assert_allclose)

import sepsim as ss


def test_region():
    "region validation and equality"
    assert_raises(ValueError, ss.Region, 3)
    assert_raises(ValueError, ss.Region, 2, 'wrap')
    assert_(ss.Region(1, 'torus') == ss.Region(1), 'boundary used in 1d')
    assert_(ss.Region(2, 'torus') != ss.Region(2), 'boundary ignored in 2d')
    assert_(ss.Region(2, 'torus').is_torus, 'torus not detected')
    assert_(not ss.Region(1, 'torus').is_torus, 'torus in 1d')


def test_grid_layout_1d():
    "1d grid positions are cell midpoints"
    assert_equal(ss.grid_layout(1).positions, [0.5])
    assert_equal(ss.grid_layout(4).positions, [0.125, 0.375, 0.625, 0.875])
    layout = ss.grid_layout(37)
    assert_allclose(np.diff(layout.positions), 1.0 / 37)
    assert_allclose(layout.positions[0], 1.0 / 74)
    assert_equal(layout.model, 'grid')


def test_grid_layout_2d():
    "2d grid positions are midpoints of the sqrt(n) x sqrt(n) cells"
    layout = ss.grid_layout(4, ss.Region(2))
    expected = [[0.25, 0.25], [0.25, 0.75], [0.75, 0.25], [0.75, 0.75]]
    assert_equal(layout.positions, expected)
    assert_raises(ValueError, ss.grid_layout, 5, ss.Region(2))
    assert_raises(ValueError, ss.grid_layout, 0)


def test_layout_validation():
    "unsorted or out of range positions raise"
    region = ss.Region(1)
    assert_raises(ValueError, ss.TargetLayout, region, [0.5, 0.2])
    assert_raises(ValueError, ss.TargetLayout, region, [0.5, 1.2])
    assert_raises(ValueError, ss.TargetLayout, region, [[0.1, 0.2]])
    assert_raises(ValueError, ss.TargetLayout, region, [0.1], 'lattice')
    layout = ss.TargetLayout(region, [0.2, 0.2, 0.7])
    assert_equal(layout.n, 3)


def test_layout_readonly():
    "positions cannot be modified in place"
    layout = ss.grid_layout(3)
    assert_raises(ValueError, layout.positions.__setitem__, 0, 0.9)


def test_sample_uniform_points():
    "uniform sampling: sorted, in range, mean near 1/2"
    assert_equal(ss.sample_uniform_points(0).shape, (0,))
    x = ss.sample_uniform_points(10000, seed=1)
    assert_((np.diff(x) >= 0).all(), 'points not sorted')
    assert_(x.min() >= 0 and x.max() <= 1, 'points out of range')
    assert_(abs(x.mean() - 0.5) < 0.02, 'mean too far from 0.5')
    xy = ss.sample_uniform_points(10000, ss.Region(2), seed=1)
    assert_equal(xy.shape, (10000, 2))
    assert_((abs(xy.mean(axis=0) - 0.5) < 0.02).all(), 'bad 2d mean')


def test_sample_uniform_points_seed():
    "sampling is deterministic given the seed"
    a = ss.sample_uniform_points(5, seed=9)
    b = ss.sample_uniform_points(5, seed=9)
    assert_equal(a, b)


def test_sample_poisson_points():
    "Poisson counts have mean and variance equal to the intensity"
    rng = ss.trial_rng(0, 0)
    trials = 20000
    counts = np.empty(trials)
    for i in range(trials):
        x = ss.sample_poisson_points(5, seed=rng)
        assert_((np.diff(x) >= 0).all(), 'points not sorted')
        counts[i] = x.size
    assert_(abs(counts.mean() - 5) < 0.07, 'bad Poisson mean')
    assert_(abs(counts.var() - 5) < 0.3, 'bad Poisson variance')


def test_random_layouts():
    "uniform and Poisson layouts carry their model tag"
    layout = ss.uniform_layout(10, seed=2)
    assert_equal(layout.model, 'uniform')
    assert_equal(layout.n, 10)
    layout = ss.poisson_layout(10, ss.Region(2), seed=2)
    assert_equal(layout.model, 'poisson')
    assert_equal(layout.positions.shape[1], 2)


def test_configuration():
    "target configurations"
    config = ss.TargetConfiguration.from_int(5, 3)
    assert_equal(config.occupied, [True, False, True])
    assert_equal(repr(config), 'TargetConfiguration(101)')
    assert_equal(ss.TargetConfiguration.empty(4).occupied.sum(), 0)
    assert_raises(ValueError, ss.TargetConfiguration.from_int, 8, 3)
    config = ss.TargetConfiguration.random(1000, 0.5, seed=3)
    assert_(abs(config.occupied.mean() - 0.5) < 0.07, 'bad occupancy')
