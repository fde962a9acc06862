import numpy as np
from scipy import sparse
from scipy.spatial import cKDTree

import sepsim as ss
from sepsim.sensor import distance, iter_blocks
from sepsim.util import readonly, IntegrityError, CapacityError

OCCUPIED = 'occupied'
EMPTY = 'empty'
UNKNOWN = 'unknown'

BRUTE_FORCE_MAX_N = 16

# coverage_map(method='auto') switches to the tree index above this many
# sensor-target pairs
TREE_MIN_PAIRS = 4 * 10 ** 6


# ---------------------------------------------------------------------------
# coverage

class CoverageMap(object):
    """
    Which targets each sensor covers, as a sparse sensor x target matrix.

    Sensor ``s`` covers target ``i`` when the target lies strictly within
    the sensing radius of the sensor. A sensor that covers exactly one
    target is a unique coverer of that target.
    """

    def __init__(self, incidence):
        incidence = sparse.csr_matrix(incidence, dtype=bool)
        incidence.sort_indices()
        incidence.eliminate_zeros()
        self.incidence = incidence
        m, n = incidence.shape
        counts = np.diff(incidence.indptr)
        unique_target = np.full(m, -1, dtype=np.int64)
        one = counts == 1
        unique_target[one] = incidence.indices[incidence.indptr[:-1][one]]
        self._sensor_counts = readonly(counts)
        self._unique_target = readonly(unique_target)
        self._unique_count = readonly(np.bincount(unique_target[one],
                                                  minlength=n))

    @property
    def m(self):
        return self.incidence.shape[0]

    @property
    def n(self):
        return self.incidence.shape[1]

    @property
    def sensor_counts(self):
        "Number of targets covered by each sensor"
        return self._sensor_counts

    @property
    def unique_target(self):
        "Target uniquely covered by each sensor; -1 if none or several"
        return self._unique_target

    @property
    def unique_count(self):
        "Number of unique coverers of each target"
        return self._unique_count

    def sensor_targets(self, s):
        "Set of targets covered by sensor `s`"
        ptr = self.incidence.indptr
        return frozenset(self.incidence.indices[ptr[s]:ptr[s + 1]].tolist())

    @property
    def per_sensor_targets(self):
        "List with the set of covered targets for every sensor"
        return [self.sensor_targets(s) for s in range(self.m)]

    @property
    def per_target_unique_sensors(self):
        "List with the unique coverers of every target, ascending"
        sensors = np.flatnonzero(self._unique_target >= 0)
        targets = self._unique_target[sensors]
        order = np.argsort(targets, kind='stable')
        bounds = np.cumsum(self._unique_count)[:-1]
        groups = np.split(sensors[order], bounds) if self.n > 0 else []
        return [g.tolist() for g in groups]

    def __eq__(self, other):
        if not isinstance(other, CoverageMap):
            return False
        if self.incidence.shape != other.incidence.shape:
            return False
        return (self.incidence != other.incidence).nnz == 0

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        fmt = "CoverageMap(sensors={}, targets={}, pairs={})"
        return fmt.format(self.m, self.n, self.incidence.nnz)


def pair_distance(a, b, region):
    "Element-wise distance; same arithmetic as sepsim.sensor.distance"
    if region.dimension == 1:
        return np.abs(a - b)
    dx = np.abs(a[:, 0] - b[:, 0])
    dy = np.abs(a[:, 1] - b[:, 1])
    if region.is_torus:
        dx = np.minimum(dx, 1 - dx)
        dy = np.minimum(dy, 1 - dy)
    return np.hypot(dx, dy)


def _incidence_brute(layout, field):
    rows = []
    cols = []
    for block in iter_blocks(field.m, layout.n):
        d = distance(field.positions[block], layout.positions, field.region)
        r, c = np.nonzero(d < field.radius)
        rows.append(r + block.start)
        cols.append(c)
    return _to_csr(rows, cols, field.m, layout.n)


def _incidence_tree(layout, field):
    region = field.region
    targets = layout.positions
    sensors = field.positions
    if region.dimension == 1:
        targets = targets.reshape(-1, 1)
        sensors = sensors.reshape(-1, 1)
    if region.is_torus:
        tt = cKDTree(np.mod(targets, 1.0), boxsize=1.0)
        st = cKDTree(np.mod(sensors, 1.0), boxsize=1.0)
    else:
        tt = cKDTree(targets)
        st = cKDTree(sensors)
    # candidates from a slightly larger ball; the exact open-ball test below
    # uses the same arithmetic as the brute force path
    reach = field.radius * (1 + 1e-9) + 1e-12
    pairs = st.sparse_distance_matrix(tt, reach, output_type='ndarray')
    s = pairs['i'].astype(np.int64)
    t = pairs['j'].astype(np.int64)
    a = field.positions[s]
    b = layout.positions[t]
    keep = pair_distance(a, b, region) < field.radius
    return _to_csr([s[keep]], [t[keep]], field.m, layout.n)


def _to_csr(rows, cols, m, n):
    if rows:
        rows = np.concatenate(rows)
        cols = np.concatenate(cols)
    else:
        rows = np.zeros(0, dtype=np.int64)
        cols = np.zeros(0, dtype=np.int64)
    data = np.ones(rows.size, dtype=bool)
    return sparse.csr_matrix((data, (rows, cols)), shape=(m, n), dtype=bool)


def coverage_map(layout, field, method='auto'):
    """
    Sensor x target coverage of `layout` by `field`.

    Parameters
    ----------
    layout : sepsim.TargetLayout
        Target locations.
    field : sepsim.SensorField
        Sensors and their common sensing radius.
    method : {'auto', 'brute', 'tree'}, optional
        'brute' compares every sensor with every target; 'tree' queries a
        k-d tree neighborhood index. Both give identical maps. 'auto'
        (default) picks 'tree' for large instances.

    Returns
    -------
    cmap : sepsim.CoverageMap

    """
    if field.region != layout.region:
        raise ValueError("field and layout must share a region")
    if method == 'auto':
        big = field.m * layout.n > TREE_MIN_PAIRS
        method = 'tree' if big else 'brute'
    if field.m == 0 or layout.n == 0:
        incidence = _to_csr([], [], field.m, layout.n)
    elif method == 'brute':
        incidence = _incidence_brute(layout, field)
    elif method == 'tree':
        incidence = _incidence_tree(layout, field)
    else:
        raise ValueError("`method` must be 'auto', 'brute', or 'tree'")
    return CoverageMap(incidence)


# ---------------------------------------------------------------------------
# identifiability

class SeparabilityReport(object):
    "Per-target unique-coverage counts and identifiability"

    def __init__(self, unique_count):
        unique_count = np.asarray(unique_count, dtype=np.int64)
        self._unique_count = readonly(unique_count)
        self._identifiable = readonly(unique_count >= 1)

    @property
    def unique_count(self):
        return self._unique_count

    @property
    def identifiable(self):
        return self._identifiable

    @property
    def n(self):
        return self._unique_count.size

    @property
    def num_identifiable(self):
        return int(self._identifiable.sum())

    @property
    def fully_separable(self):
        return self.num_identifiable == self.n

    @property
    def fraction(self):
        "Fraction of target locations that are identifiable"
        if self.n == 0:
            return 1.0
        return self.num_identifiable / self.n

    def to_dict(self):
        "Plain python dict (json ready)"
        return {'n': self.n,
                'identifiable': [bool(b) for b in self._identifiable],
                'unique_count': [int(c) for c in self._unique_count],
                'num_identifiable': self.num_identifiable,
                'fully_separable': bool(self.fully_separable)}

    def __eq__(self, other):
        if not isinstance(other, SeparabilityReport):
            return False
        return np.array_equal(self._unique_count, other._unique_count)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        t = []
        fmt = '{:<18}{:<}'
        t.append(fmt.format('targets', self.n))
        t.append(fmt.format('identifiable', self.num_identifiable))
        t.append(fmt.format('fraction', '{:.4f}'.format(self.fraction)))
        t.append(fmt.format('fully separable', self.fully_separable))
        return '\n'.join(t)


def report_from_map(cmap):
    "SeparabilityReport of a coverage map"
    return SeparabilityReport(cmap.unique_count)


def analyze(layout, field, method='auto'):
    "Identifiability of every target location of `layout` under `field`"
    return report_from_map(coverage_map(layout, field, method=method))


def sandwiched_targets(layout, radius):
    "1d targets whose two neighbors are both closer than `radius`"
    v = spacings(layout)
    if v.size < 3:
        return np.zeros(0, dtype=np.int64)
    left = v[1:-1] < radius
    right = v[2:] < radius
    return np.flatnonzero(left & right) + 1


# ---------------------------------------------------------------------------
# decoding

class DecodedConfiguration(object):
    "Verdict per target: 'occupied', 'empty', or 'unknown'"

    def __init__(self, verdicts):
        verdicts = np.asarray(verdicts, dtype='<U8')
        bad = ~np.isin(verdicts, [OCCUPIED, EMPTY, UNKNOWN])
        if bad.any():
            raise ValueError("verdicts must be occupied, empty, or unknown")
        self._verdicts = readonly(verdicts)

    @property
    def verdicts(self):
        return self._verdicts

    @property
    def n(self):
        return self._verdicts.size

    @property
    def resolved(self):
        "Bool array; True where verdict is not unknown"
        return self._verdicts != UNKNOWN

    def correct(self, config):
        "Bool array; True where verdict matches `config`"
        truth = np.where(config.occupied, OCCUPIED, EMPTY)
        return self._verdicts == truth

    def wrong(self, config):
        "Bool array; True where a resolved verdict contradicts `config`"
        return self.resolved & ~self.correct(config)

    def __eq__(self, other):
        if not isinstance(other, DecodedConfiguration):
            return False
        return np.array_equal(self._verdicts, other._verdicts)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        code = {OCCUPIED: '1', EMPTY: '0', UNKNOWN: '?'}
        return "DecodedConfiguration({})".format(
            ''.join(code[v] for v in self._verdicts))


def unique_votes(observations, cmap):
    "Number of ones and total votes from the unique coverers of each target"
    observations = np.asarray(observations)
    if observations.shape != (cmap.m,):
        raise ValueError("`observations` must have one bit per sensor")
    mask = cmap.unique_target >= 0
    ones = np.bincount(cmap.unique_target[mask],
                       weights=observations[mask].astype(np.float64),
                       minlength=cmap.n)
    return ones.astype(np.int64), np.asarray(cmap.unique_count)


def decode_truthful(observations, cmap):
    "Decode identifiable targets from truthful readings; others are unknown"
    ones, votes = unique_votes(observations, cmap)
    mixed = (ones > 0) & (ones < votes)
    if mixed.any():
        i = int(np.flatnonzero(mixed)[0])
        msg = "unique coverers of target {} disagree ({} of {} read 1)"
        raise IntegrityError(msg.format(i, ones[i], votes[i]))
    verdicts = np.full(cmap.n, UNKNOWN, dtype='<U8')
    verdicts[(votes > 0) & (ones == votes)] = OCCUPIED
    verdicts[(votes > 0) & (ones == 0)] = EMPTY
    return DecodedConfiguration(verdicts)


# ---------------------------------------------------------------------------
# spacings

def spacings(layout_or_positions):
    "Spacings V of sorted 1d positions: V_1 = T_1, V_i = T_i - T_(i-1)"
    if isinstance(layout_or_positions, ss.TargetLayout):
        if layout_or_positions.region.dimension != 1:
            raise ValueError("spacings are defined for 1d layouts only")
        positions = layout_or_positions.positions
    else:
        positions = np.asarray(layout_or_positions, dtype=np.float64)
        if positions.ndim != 1:
            raise ValueError("spacings are defined for 1d positions only")
        if (np.diff(positions) < 0).any():
            raise ValueError("positions must be sorted ascending")
    return np.diff(np.concatenate(([0.0], positions)))


def adjacent_sums(v):
    "W_i = V_i + V_(i+1) for 2 <= i <= n - 1"
    v = np.asarray(v, dtype=np.float64)
    if v.size < 3:
        return np.zeros(0)
    return v[1:-1] + v[2:]


# ---------------------------------------------------------------------------
# exhaustive oracle

def brute_force_distinguishable(layout, field):
    "True if all 2^n configurations give pairwise distinct readings"
    n = layout.n
    if n > BRUTE_FORCE_MAX_N:
        msg = "n = {} exceeds the enumeration limit of {} targets"
        raise CapacityError(msg.format(n, BRUTE_FORCE_MAX_N))
    if n == 0:
        return True
    if field.m == 0:
        return False
    cover = coverage_map(layout, field, method='brute').incidence.toarray()
    bits = np.arange(2 ** n, dtype=np.int64).reshape(-1, 1)
    configs = ((bits >> np.arange(n)) & 1).astype(np.int64)
    readings = configs.dot(cover.T.astype(np.int64)) > 0
    distinct = np.unique(readings, axis=0).shape[0]
    return distinct == 2 ** n
