import os
import sys
import tempfile

import numpy as np

import sepsim as ss


def micro_layout(dimension=1):
    "Grid layout of 4 targets for use in unit testing"
    return ss.grid_layout(4, ss.Region(dimension))


def fig1_instance():
    """
    Three targets; Ta and Tb share their only sensor, Tc has two sensors
    that cover nothing else. Returns (layout, field); Tc is index 2.
    """
    region = ss.Region(1)
    layout = ss.TargetLayout(region, [0.2, 0.3, 0.6])
    field = ss.SensorField(region, [0.25, 0.58, 0.63], 0.08)
    return layout, field


def chain_instance():
    "Sensor A covers {T1, T2}, sensor B covers {T2, T3}; (layout, field)"
    region = ss.Region(1)
    layout = ss.TargetLayout(region, [0.3, 0.5, 0.7])
    field = ss.SensorField(region, [0.4, 0.6], 0.15)
    return layout, field


def random_instance(rng, max_n=8, max_m=12, dimension=1):
    "Small random (layout, field) with random radius"
    rng = ss.as_generator(rng)
    region = ss.Region(dimension)
    n = int(rng.integers(0, max_n + 1))
    m = int(rng.integers(0, max_m + 1))
    radius = float(rng.uniform(0.01, 0.3))
    layout = ss.uniform_layout(n, region, rng)
    positions = ss.sample_uniform_points(m, region, rng)
    field = ss.SensorField(region, positions, radius)
    return layout, field


def all_configurations(n):
    "Every TargetConfiguration of n targets"
    return [ss.TargetConfiguration.from_int(b, n) for b in range(2 ** n)]


def binomial_band(p, trials, sigmas=4):
    "Half width of a `sigmas` standard error band around p"
    return sigmas * np.sqrt(p * (1 - p) / trials)


def create_tempfile(path):
    "Create temporary file"
    return os.path.join(tempfile.gettempdir(), path)


def delete_tempfile(path):
    "Remove file"
    try:
        os.remove(path)
    except OSError:
        pass


# taken from https://stackoverflow.com/a/45669280
# modified for use in sepsim
class HiddenPrints(object):

    def __enter__(self):
        self._original_stdout = sys.stdout
        sys.stdout = open(os.devnull, 'w')

    def __exit__(self, exc_type, exc_val, exc_tb):
        sys.stdout.close()
        sys.stdout = self._original_stdout
