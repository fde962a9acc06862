"""
Scenarios: one sampled instance per trial plus a success predicate.

A scenario samples one instance per trial and decides whether the trial
succeeded. Parameters live in the dict ``self.p``; the keyword arguments
of each constructor are exactly the keys of ``p`` so that a scenario can
be rebuilt with one parameter changed (see ``Scenario.replace``).

Radius and sensor-count parameters take either a number or the name of a
preset that evaluates the matching threshold formula.

"""

import math

import numpy as np

import sepsim as ss
from sepsim import scaling as sc
from sepsim.adversary import (AdversaryModel, deploy_adversarial_field,
                              reported_observations, majority_decode,
                              adversarial_full_m, adversarial_partial_m)
from sepsim.util import TheoremDomainError


# ---------------------------------------------------------------------------
# base class for all scenarios

class Scenario(object):

    def __repr__(self):
        msg = self.name + "("
        for name, value in self.p.items():
            msg += name + "=" + str(value) + ", "
        if msg.endswith(", "):
            msg = msg[:-2]
        return msg + ")"

    @property
    def name(self):
        "Registry name of scenario, e.g. 'grid-full'"
        return self.__class__.__name__.replace('_', '-')

    @property
    def n(self):
        return self.p['n']

    @property
    def dimension(self):
        return self.p.get('dimension', 1)

    def region(self):
        return ss.Region(self.dimension, self.p.get('boundary', 'clip'))

    def replace(self, **kwargs):
        "New scenario of the same kind with some parameters changed"
        for key in kwargs:
            if key not in self.p:
                msg = "`{}` is not a parameter of {}".format(key, self.name)
                raise ValueError(msg)
        p = dict(self.p)
        p.update(kwargs)
        return self.__class__(**p)

    def radius(self):
        "Sensing radius of the scenario"
        raise NotImplementedError

    def sensors(self):
        "Sensor count (or Poisson intensity) of the scenario"
        raise NotImplementedError

    def trial(self, rng):
        "Sample one instance with numpy Generator `rng`; True on success"
        raise NotImplementedError

    def thresholds(self, axis):
        "List of (label, value) theorem thresholds along sweep `axis`"
        return []

    def closed_form(self):
        "Exact success probability when known; None otherwise"
        return None

    def check(self):
        "Evaluate presets once so bad parameters fail at construction"
        self.radius()
        self.sensors()
        return self


def resolve(value, presets, name):
    "Number `value` as is, or the value of the preset named `value`"
    if ss.isnumber(value):
        return value
    if ss.isstring(value) and value in presets:
        return presets[value]()
    names = ', '.join(sorted(presets))
    msg = "`{}` must be a number or one of: {}".format(name, names)
    raise ValueError(msg)


def sensor_count(m):
    "Integer sensor count; thresholds are rounded up"
    if m < 0:
        raise ValueError("`m` must be non-negative")
    return int(math.ceil(m))


def required_count(alpha, n):
    "Smallest integer count that is at least alpha n"
    return int(math.ceil(alpha * n - 1e-9))


def check_dimension(dimension, allowed):
    if dimension not in allowed:
        raise ValueError("`dimension` must be one of {}".format(allowed))


def grid_side(n, dimension):
    "Number of grid cells per axis"
    if dimension == 1:
        return n
    return math.sqrt(n)


def grid_radius_presets(p):
    k = grid_side(p['n'], p.get('dimension', 1))
    a = p['a']
    return {'a': lambda: a / (2.0 * k),
            'two-minus-a': lambda: (2 - a) / (2.0 * k),
            'n-plus-one': lambda: 1.0 / (k + 1)}


def analyze_trial(layout, region, m, radius, rng):
    positions = ss.sample_uniform_points(m, region, rng)
    field = ss.SensorField(region, positions, radius)
    return ss.analyze(layout, field)


def random_targets(p, region, rng):
    if p.get('targets', 'uniform') == 'poisson':
        return ss.poisson_layout(p['n'], region, rng)
    return ss.uniform_layout(p['n'], region, rng)


def check_targets(targets):
    if targets not in ('uniform', 'poisson'):
        raise ValueError("`targets` must be 'uniform' or 'poisson'")


# ---------------------------------------------------------------------------
# targets on a grid

class grid_full(Scenario):
    "All grid targets identifiable with m uniform sensors"

    def __init__(self, n, m='full+', radius='a', a=1.0, c=5.0, dimension=1,
                 boundary='clip'):
        check_dimension(dimension, (1, 2))
        self.p = {'n': n, 'm': m, 'radius': radius, 'a': a, 'c': c,
                  'dimension': dimension, 'boundary': boundary}
        self._layout = ss.grid_layout(n, self.region())
        self.check()

    def threshold_m(self, sign):
        p = self.p
        if self.dimension == 2:
            return sc.grid_full_m_2d(p['n'], p['c'], sign)
        params = sc.GridParams(p['n'], a=p['a'], c=p['c'])
        return sc.grid_full_m(params, sign)

    def radius(self):
        return resolve(self.p['radius'], grid_radius_presets(self.p),
                       'radius')

    def sensors(self):
        presets = {'full+': lambda: self.threshold_m('+'),
                   'full-': lambda: self.threshold_m('-')}
        return sensor_count(resolve(self.p['m'], presets, 'm'))

    def trial(self, rng):
        report = analyze_trial(self._layout, self.region(), self.sensors(),
                               self.radius(), rng)
        return report.fully_separable

    def thresholds(self, axis):
        if axis != 'm':
            return []
        return [('full-', self.threshold_m('-')),
                ('full+', self.threshold_m('+'))]


class grid_partial(Scenario):
    "At least alpha n grid targets identifiable with m uniform sensors"

    def __init__(self, n, m='partial+', radius='a', a=1.0, alpha=0.9,
                 beta=0.9, dimension=1, boundary='clip'):
        check_dimension(dimension, (1, 2))
        self.p = {'n': n, 'm': m, 'radius': radius, 'a': a, 'alpha': alpha,
                  'beta': beta, 'dimension': dimension, 'boundary': boundary}
        self._layout = ss.grid_layout(n, self.region())
        self.check()

    def threshold_m(self, kind):
        p = self.p
        if self.dimension == 2:
            return sc.grid_partial_m_2d(p['n'], p['alpha'], p['beta'], kind)
        params = sc.GridParams(p['n'], a=p['a'], alpha=p['alpha'],
                               beta=p['beta'])
        if kind == 'sufficient':
            return sc.grid_partial_m_sufficient(params)
        return sc.grid_partial_m_necessary(params)

    def radius(self):
        return resolve(self.p['radius'], grid_radius_presets(self.p),
                       'radius')

    def sensors(self):
        presets = {'partial+': lambda: self.threshold_m('sufficient'),
                   'partial-': lambda: self.threshold_m('necessary')}
        return sensor_count(resolve(self.p['m'], presets, 'm'))

    def trial(self, rng):
        report = analyze_trial(self._layout, self.region(), self.sensors(),
                               self.radius(), rng)
        return report.num_identifiable >= required_count(self.p['alpha'],
                                                         self.n)

    def thresholds(self, axis):
        if axis != 'm':
            return []
        return [('necessary', self.threshold_m('necessary')),
                ('sufficient', self.threshold_m('sufficient'))]

    def closed_form_bounds(self):
        "Markov-type bounds on the success probability (1d, radius a/2n)"
        p = self.p
        return sc.grid_partial_prob_bounds(p['n'], p['a'], self.sensors(),
                                           p['alpha'])


# ---------------------------------------------------------------------------
# uniformly distributed targets

class random_full(Scenario):
    "All uniform (or Poisson) targets identifiable"

    def __init__(self, n, m='full+', radius='full', c_n=None,
                 f_n=sc.DEFAULT_F_N, dimension=1, boundary='clip',
                 targets='uniform'):
        check_dimension(dimension, (1, 2))
        check_targets(targets)
        self.p = {'n': n, 'm': m, 'radius': radius, 'c_n': c_n, 'f_n': f_n,
                  'dimension': dimension, 'boundary': boundary,
                  'targets': targets}
        self.check()

    def c_n(self):
        "Divergence surrogate c_n; ln n unless given"
        if self.p['c_n'] is None:
            return math.log(self.n)
        return self.p['c_n']

    def threshold(self, sign):
        "(r, m) thresholds"
        p = self.p
        c_n = self.c_n()
        if self.dimension == 2:
            return sc.random_full_2d(p['n'], c_n, p['f_n'], sign)
        r = sc.random_full_r(p['n'], c_n)
        return r, sc.random_full_m(p['n'], c_n, p['f_n'], sign)

    def radius(self):
        presets = {'full': lambda: self.threshold('+')[0]}
        return resolve(self.p['radius'], presets, 'radius')

    def sensors(self):
        presets = {'full+': lambda: self.threshold('+')[1],
                   'full-': lambda: self.threshold('-')[1]}
        return sensor_count(resolve(self.p['m'], presets, 'm'))

    def trial(self, rng):
        region = self.region()
        layout = random_targets(self.p, region, rng)
        report = analyze_trial(layout, region, self.sensors(), self.radius(),
                               rng)
        return report.fully_separable

    def thresholds(self, axis):
        if axis != 'm':
            return []
        return [('full-', self.threshold('-')[1]),
                ('full+', self.threshold('+')[1])]


class random_partial(Scenario):
    "At least alpha n uniform (or Poisson) targets identifiable"

    def __init__(self, n, m='partial+', radius='partial+', alpha=0.5,
                 beta=0.5, alpha1=0.6, theta1=0.4, theta2=0.5, a=2.0,
                 dimension=1, boundary='clip', targets='uniform'):
        check_dimension(dimension, (1, 2))
        check_targets(targets)
        self.p = {'n': n, 'm': m, 'radius': radius, 'alpha': alpha,
                  'beta': beta, 'alpha1': alpha1, 'theta1': theta1,
                  'theta2': theta2, 'a': a, 'dimension': dimension,
                  'boundary': boundary, 'targets': targets}
        self.check()

    def params(self):
        p = self.p
        return sc.RandomParams(p['n'], p['alpha'], p['beta'], p['alpha1'],
                               p['theta1'], p['theta2'], p['a'])

    def threshold_r(self, kind):
        p = self.p
        if self.dimension == 2:
            return sc.random_partial_r_2d(p['n'], p['alpha1'], p['beta'],
                                          p['a'], kind)
        if kind == 'sufficient':
            return sc.random_partial_r_sufficient(p['n'], p['alpha1'],
                                                  p['beta'])
        return sc.random_partial_r_necessary(p['n'], p['alpha1'], p['beta'])

    def threshold_m(self, kind):
        params = self.params()
        if self.dimension == 2:
            return sc.random_partial_m_2d(params, kind)
        if kind == 'sufficient':
            return sc.random_partial_m_sufficient(params)
        return sc.random_partial_m_necessary(params)

    def radius(self):
        presets = {'partial+': lambda: self.threshold_r('sufficient'),
                   'partial-': lambda: self.threshold_r('necessary')}
        return resolve(self.p['radius'], presets, 'radius')

    def sensors(self):
        presets = {'partial+': lambda: self.threshold_m('sufficient'),
                   'partial-': lambda: self.threshold_m('necessary')}
        return sensor_count(resolve(self.p['m'], presets, 'm'))

    def trial(self, rng):
        region = self.region()
        layout = random_targets(self.p, region, rng)
        report = analyze_trial(layout, region, self.sensors(), self.radius(),
                               rng)
        return report.num_identifiable >= required_count(self.p['alpha'],
                                                         layout.n)

    def thresholds(self, axis):
        if axis != 'm':
            return []
        marks = []
        for label in ('necessary', 'sufficient'):
            try:
                marks.append((label, self.threshold_m(label)))
            except TheoremDomainError:
                pass
        return marks


# ---------------------------------------------------------------------------
# adversarial sensors

class adversarial_full(Scenario):
    "Majority decoding recovers every grid target from a Poisson field"

    def __init__(self, n, m='adversarial', radius='a', a=1.0, gamma=0.2,
                 eps=0.5, policy='flip', p=0.5, occupancy=0.5):
        if not 0 <= occupancy <= 1:
            raise ValueError("`occupancy` must satisfy 0 <= occupancy <= 1")
        self.p = {'n': n, 'm': m, 'radius': radius, 'a': a, 'gamma': gamma,
                  'eps': eps, 'policy': policy, 'p': p,
                  'occupancy': occupancy}
        self._layout = ss.grid_layout(n)
        self.model = AdversaryModel(gamma, policy, p)
        self.check()

    def threshold_m(self):
        p = self.p
        return adversarial_full_m(p['n'], p['gamma'], p['eps'])

    def radius(self):
        return resolve(self.p['radius'], grid_radius_presets(self.p),
                       'radius')

    def sensors(self):
        presets = {'adversarial': self.threshold_m}
        return ss.util.check_positive(resolve(self.p['m'], presets, 'm'), 'm')

    def correct_verdicts(self, rng):
        "Number of targets decoded correctly in one sampled instance"
        layout = self._layout
        config = ss.TargetConfiguration.random(self.n, self.p['occupancy'],
                                               rng)
        field = deploy_adversarial_field(self.sensors(), layout.region,
                                         self.radius(), self.model, rng)
        cmap = ss.coverage_map(layout, field)
        reports = reported_observations(field, layout, config, self.model,
                                        rng)
        verdicts = majority_decode(reports, cmap)
        return int(verdicts.correct(config).sum())

    def trial(self, rng):
        return self.correct_verdicts(rng) == self.n

    def thresholds(self, axis):
        if axis != 'm':
            return []
        return [('adversarial', self.threshold_m())]


class adversarial_partial(adversarial_full):
    "Majority decoding recovers at least alpha n grid targets"

    def __init__(self, n, m='adversarial', radius='a', a=1.0, gamma=0.2,
                 eps=0.5, alpha=0.9, beta=0.9, policy='flip', p=0.5,
                 occupancy=0.5):
        if not 0 <= occupancy <= 1:
            raise ValueError("`occupancy` must satisfy 0 <= occupancy <= 1")
        self.p = {'n': n, 'm': m, 'radius': radius, 'a': a, 'gamma': gamma,
                  'eps': eps, 'alpha': alpha, 'beta': beta, 'policy': policy,
                  'p': p, 'occupancy': occupancy}
        self._layout = ss.grid_layout(n)
        self.model = AdversaryModel(gamma, policy, p)
        self.check()

    def threshold_m(self):
        p = self.p
        return adversarial_partial_m(p['n'], p['gamma'], p['eps'],
                                     p['alpha'], p['beta'])

    def trial(self, rng):
        need = required_count(self.p['alpha'], self.n)
        return self.correct_verdicts(rng) >= need


# ---------------------------------------------------------------------------
# closed-form oracles

class min_spacing(Scenario):
    "All n - 1 gaps between n uniform points exceed d"

    def __init__(self, n, d='n2-ln-n'):
        if n < 2:
            raise ValueError("`n` must be at least 2")
        self.p = {'n': n, 'd': d}
        self.check()

    def radius(self):
        presets = {'n2-ln-n': lambda: 1.0 / (self.n ** 2 * math.log(self.n))}
        d = resolve(self.p['d'], presets, 'd')
        if d < 0:
            raise ValueError("`d` must be non-negative")
        return d

    def sensors(self):
        return 0

    def trial(self, rng):
        points = ss.sample_uniform_points(self.n, ss.Region(1), rng)
        gaps = ss.spacings(points)[1:]
        return bool((gaps > self.radius()).all())

    def closed_form(self):
        return sc.min_spacing_prob(self.n, self.radius())

    def thresholds(self, axis):
        if axis != 'd':
            return []
        return [('1/(n^2 ln n)', 1.0 / (self.n ** 2 * math.log(self.n)))]


class coupon(Scenario):
    "m uniform draws hit all n cells"

    def __init__(self, n, m='coupon', c=5.0):
        self.p = {'n': n, 'm': m, 'c': c}
        self.check()

    def radius(self):
        return 0.0

    def sensors(self):
        presets = {'coupon': lambda: sc.coupon_m(self.n, self.p['c'])}
        return sensor_count(resolve(self.p['m'], presets, 'm'))

    def trial(self, rng):
        draws = rng.integers(0, self.n, size=self.sensors())
        return bool(np.bincount(draws, minlength=self.n).all())

    def closed_form(self):
        return sc.coupon_all_collected_prob(self.n, self.sensors())

    def thresholds(self, axis):
        if axis != 'm':
            return []
        return [('n ln n', self.n * math.log(self.n))]


class spacing_tail(Scenario):
    "Second and third spacings of n uniform points exceed v1 and v2"

    def __init__(self, n, v1=0.005, v2=0.005):
        if n < 3:
            raise ValueError("`n` must be at least 3")
        self.p = {'n': n, 'v1': v1, 'v2': v2}
        self.check()

    def radius(self):
        return 0.0

    def sensors(self):
        return 0

    def trial(self, rng):
        points = ss.sample_uniform_points(self.n, ss.Region(1), rng)
        v = ss.spacings(points)
        return bool(v[1] > self.p['v1'] and v[2] > self.p['v2'])

    def closed_form(self):
        return sc.spacing_tail([self.p['v1'], self.p['v2']], self.n)


# ---------------------------------------------------------------------------
# registry

SCENARIOS = [{'name': 'grid-full', 'class': grid_full, 'dimensions': (1, 2)},
             {'name': 'grid-partial', 'class': grid_partial,
              'dimensions': (1, 2)},
             {'name': 'random-full', 'class': random_full,
              'dimensions': (1, 2)},
             {'name': 'random-partial', 'class': random_partial,
              'dimensions': (1, 2)},
             {'name': 'adversarial-full', 'class': adversarial_full,
              'dimensions': (1,)},
             {'name': 'adversarial-partial', 'class': adversarial_partial,
              'dimensions': (1,)},
             {'name': 'min-spacing', 'class': min_spacing,
              'dimensions': (1,)},
             {'name': 'coupon', 'class': coupon, 'dimensions': (1,)},
             {'name': 'spacing-tail', 'class': spacing_tail,
              'dimensions': (1,)}]


def scenario_names():
    "List of registered scenario names"
    return [s['name'] for s in SCENARIOS]


def scenario_class(name):
    "Scenario class registered under `name` ('grid-full' or 'grid_full')"
    if not ss.isstring(name):
        raise ValueError("`name` must be a string")
    key = name.replace('_', '-')
    for s in SCENARIOS:
        if s['name'] == key:
            return s['class']
    raise ValueError("scenario `{}` not recognized".format(name))


def make_scenario(name, **p):
    "Scenario instance from its registry name and parameters"
    return scenario_class(name)(**p)
