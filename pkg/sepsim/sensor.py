import numpy as np

import sepsim as ss
from sepsim.layout import Region
from sepsim.util import readonly

# rows of a sensor x target distance block are chosen so a block holds
# about this many entries
BLOCK_ENTRIES = 2 ** 21


class SensorField(object):
    "Sensor positions, a common sensing radius, and per-sensor adversary flags"

    def __init__(self, region, positions, radius, adversary=None):
        if not isinstance(region, Region):
            raise ValueError("`region` must be a Region")
        radius = ss.util.check_positive(radius, 'radius')
        positions = region.check_points(positions)
        m = positions.shape[0]
        if adversary is None:
            adversary = np.zeros(m, dtype=bool)
        adversary = np.asarray(adversary, dtype=bool)
        if adversary.shape != (m,):
            raise ValueError("`adversary` must have one flag per sensor")
        self._region = region
        self._positions = readonly(positions)
        self._radius = radius
        self._adversary = readonly(adversary)

    @property
    def region(self):
        return self._region

    @property
    def positions(self):
        return self._positions

    @property
    def radius(self):
        return self._radius

    @property
    def adversary(self):
        return self._adversary

    @property
    def m(self):
        "Number of sensors"
        return self._positions.shape[0]

    def __len__(self):
        return self.m

    def without_adversaries(self):
        "Copy of field with every sensor marked good"
        return SensorField(self._region, self._positions, self._radius)

    def add_sensor(self, position, adversary=False):
        "Copy of field with one more sensor"
        d = self._region.dimension
        position = np.asarray(position, dtype=np.float64).reshape(1, d)
        if d == 1:
            position = position[:, 0]
        positions = np.concatenate((self._positions, position))
        flags = np.append(self._adversary, bool(adversary))
        return SensorField(self._region, positions, self._radius, flags)

    def drop_sensor(self, index):
        "Copy of field with sensor `index` removed"
        keep = np.arange(self.m) != index
        return SensorField(self._region, self._positions[keep],
                           self._radius, self._adversary[keep])

    def __repr__(self):
        t = []
        fmt = '{:<12}{:<}'
        t.append(fmt.format('dimension', self._region.dimension))
        t.append(fmt.format('sensors', self.m))
        t.append(fmt.format('radius', repr(self._radius)))
        t.append(fmt.format('adversaries', int(self._adversary.sum())))
        return '\n'.join(t)


def deploy_uniform_field(m, region=None, radius=None, seed=0):
    "Field of `m` i.i.d. uniform sensors with sensing radius `radius`"
    if region is None:
        region = Region(1)
    if radius is None:
        raise ValueError("`radius` must be given")
    positions = ss.sample_uniform_points(m, region, seed)
    return SensorField(region, positions, radius)


def distance(a, b, region):
    "Distance matrix between point arrays `a` (rows) and `b` (columns)"
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if region.dimension == 1:
        return np.abs(a.reshape(-1, 1) - b.reshape(1, -1))
    a = a.reshape(-1, 2)
    b = b.reshape(-1, 2)
    dx = np.abs(a[:, 0:1] - b[:, 0].reshape(1, -1))
    dy = np.abs(a[:, 1:2] - b[:, 1].reshape(1, -1))
    if region.is_torus:
        dx = np.minimum(dx, 1 - dx)
        dy = np.minimum(dy, 1 - dy)
    return np.hypot(dx, dy)


def iter_blocks(m, n):
    "Yield row slices that split m rows into blocks of about BLOCK_ENTRIES"
    rows = max(1, BLOCK_ENTRIES // max(n, 1))
    for start in range(0, m, rows):
        yield slice(start, min(start + rows, m))


def check_consistent(layout, config):
    if config.n != layout.n:
        msg = "configuration has {} flags but layout has {} targets"
        raise ValueError(msg.format(config.n, layout.n))


def sense(sensor_position, radius, layout, config):
    "1 if an occupied target lies strictly within `radius`; 0 otherwise"
    check_consistent(layout, config)
    radius = ss.util.check_positive(radius, 'radius')
    if layout.n == 0:
        return 0
    d = distance(sensor_position, layout.positions, layout.region)[0]
    return int(((d < radius) & config.occupied).any())


def observation_vector(field, layout, config):
    "Truthful reading of every sensor; adversary flags are ignored"
    check_consistent(layout, config)
    if field.region != layout.region:
        raise ValueError("field and layout must share a region")
    bits = np.zeros(field.m, dtype=np.int8)
    occupied = layout.positions[config.occupied]
    if occupied.shape[0] == 0:
        return bits
    for rows in iter_blocks(field.m, occupied.shape[0]):
        d = distance(field.positions[rows], occupied, field.region)
        bits[rows] = (d < field.radius).any(axis=1)
    return bits
