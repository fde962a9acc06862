import math

import numpy as np

import sepsim as ss
from sepsim.util import readonly

BOUNDARY_MODES = ('clip', 'torus')
TARGET_MODELS = ('grid', 'uniform', 'poisson')


class Region(object):
    "Unit interval (dimension 1) or unit square (dimension 2)"

    def __init__(self, dimension=1, boundary='clip'):
        if dimension not in (1, 2) or isinstance(dimension, bool):
            raise ValueError("`dimension` must be 1 or 2")
        if boundary not in BOUNDARY_MODES:
            raise ValueError("`boundary` must be 'clip' or 'torus'")
        self._dimension = int(dimension)
        self._boundary = boundary

    @property
    def dimension(self):
        return self._dimension

    @property
    def boundary(self):
        "Boundary mode; only consulted in 2D"
        return self._boundary

    @property
    def is_torus(self):
        return self._dimension == 2 and self._boundary == 'torus'

    @property
    def measure(self):
        "Length or area of the region"
        return 1.0

    def shape(self, count):
        "Array shape of `count` points in this region"
        if self._dimension == 1:
            return (count,)
        return (count, 2)

    def check_points(self, points, name='positions'):
        "Validated float copy of `points`"
        points = np.asarray(points, dtype=np.float64)
        if self._dimension == 1:
            if points.ndim == 2 and points.shape[1] == 1:
                points = points[:, 0]
            if points.ndim != 1:
                raise ValueError("`{}` must be 1d in a 1d region".format(name))
        else:
            if points.size == 0:
                points = points.reshape(0, 2)
            if points.ndim != 2 or points.shape[1] != 2:
                msg = "`{}` must have shape (k, 2) in a 2d region"
                raise ValueError(msg.format(name))
        if points.size > 0:
            if not np.isfinite(points).all():
                raise ValueError("`{}` must be finite".format(name))
            if points.min() < 0 or points.max() > 1:
                msg = "`{}` must lie inside the region"
                raise ValueError(msg.format(name))
        return points

    def __eq__(self, other):
        if not isinstance(other, Region):
            return False
        if self._dimension != other._dimension:
            return False
        return self._dimension == 1 or self._boundary == other._boundary

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._dimension, self.is_torus))

    def __repr__(self):
        if self._dimension == 1:
            return "Region(dimension=1)"
        return "Region(dimension=2, boundary={})".format(self._boundary)


class TargetLayout(object):
    "Ordered target locations in a region plus the model that produced them"

    def __init__(self, region, positions, model='uniform'):
        if not isinstance(region, Region):
            raise ValueError("`region` must be a Region")
        if model not in TARGET_MODELS:
            raise ValueError("`model` must be one of {}".format(TARGET_MODELS))
        positions = region.check_points(positions)
        if region.dimension == 1 and positions.size > 1:
            if (np.diff(positions) < 0).any():
                raise ValueError("1d target positions must be sorted")
        self._region = region
        self._positions = readonly(positions)
        self._model = model

    @property
    def region(self):
        return self._region

    @property
    def positions(self):
        "Read-only view of target positions"
        return self._positions

    @property
    def model(self):
        return self._model

    @property
    def n(self):
        "Number of target locations"
        return self._positions.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, TargetLayout):
            return False
        if self._region != other._region or self._model != other._model:
            return False
        return np.array_equal(self._positions, other._positions)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        fmt = "TargetLayout(model={}, n={}, dimension={})"
        return fmt.format(self._model, self.n, self._region.dimension)


class TargetConfiguration(object):
    "Occupancy flag per target location"

    def __init__(self, occupied):
        occupied = np.asarray(occupied)
        if occupied.ndim != 1:
            raise ValueError("`occupied` must be a 1d sequence")
        self._occupied = readonly(occupied.astype(bool))

    @property
    def occupied(self):
        return self._occupied

    @property
    def n(self):
        return self._occupied.size

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, TargetConfiguration):
            return False
        return np.array_equal(self._occupied, other._occupied)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        bits = ''.join('1' if b else '0' for b in self._occupied)
        return "TargetConfiguration({})".format(bits)

    @classmethod
    def empty(cls, n):
        "All target locations empty"
        return cls(np.zeros(n, dtype=bool))

    @classmethod
    def from_int(cls, bits, n):
        "Configuration whose i-th flag is bit i of the integer `bits`"
        if n > 0 and not 0 <= bits < 2 ** n:
            raise ValueError("`bits` out of range for `n` targets")
        occupied = [(bits >> i) & 1 == 1 for i in range(n)]
        return cls(np.array(occupied, dtype=bool))

    @classmethod
    def random(cls, n, p=0.5, seed=0):
        "Each target location occupied independently with probability `p`"
        if not 0 <= p <= 1:
            raise ValueError("`p` must satisfy 0 <= p <= 1")
        rng = ss.as_generator(seed)
        return cls(rng.random(n) < p)


def grid_layout(n, region=None):
    "Grid target layout: cell midpoints of n equal cells"
    if region is None:
        region = Region(1)
    if not ss.isint(n) or n < 1:
        raise ValueError("`n` must be a positive integer")
    if region.dimension == 1:
        i = np.arange(1, n + 1, dtype=np.float64)
        positions = (2 * i - 1) / (2 * n)
    else:
        k = math.isqrt(int(n))
        if k * k != n:
            raise ValueError("`n` must be a perfect square in 2d")
        mid = (2 * np.arange(1, k + 1, dtype=np.float64) - 1) / (2 * k)
        x, y = np.meshgrid(mid, mid, indexing='ij')
        positions = np.column_stack((x.ravel(), y.ravel()))
    return TargetLayout(region, positions, model='grid')


def sample_uniform_points(count, region=None, seed=0):
    "`count` i.i.d. uniform points in `region`; sorted ascending in 1d"
    if region is None:
        region = Region(1)
    count = ss.util.check_count(count, 'count')
    rng = ss.as_generator(seed)
    points = rng.random(region.shape(count))
    if region.dimension == 1:
        points.sort()
    return points


def sample_poisson_points(intensity, region=None, seed=0):
    "Homogeneous Poisson process of `intensity` on `region`"
    if region is None:
        region = Region(1)
    intensity = ss.util.check_positive(intensity, 'intensity')
    rng = ss.as_generator(seed)
    count = int(rng.poisson(intensity * region.measure))
    return sample_uniform_points(count, region, rng)


def uniform_layout(n, region=None, seed=0):
    "Layout of `n` i.i.d. uniform target locations"
    if region is None:
        region = Region(1)
    positions = sample_uniform_points(n, region, seed)
    return TargetLayout(region, positions, model='uniform')


def poisson_layout(intensity, region=None, seed=0):
    "Layout of target locations from a Poisson process of `intensity`"
    if region is None:
        region = Region(1)
    positions = sample_poisson_points(intensity, region, seed)
    return TargetLayout(region, positions, model='poisson')
