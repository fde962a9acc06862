"""
Text formats read by the command line.

Run config (estimate and sweep)::

    # comments and blank lines are ignored
    scenario = grid-full
    n = 500
    m = 5608            # any scenario parameter
    trials = 400
    seed = 0
    axis = m            # sweep only
    values = 2000, 3000, 4000

Values parse as int, then float, else string.

Instance file (check)::

    radius = 0.05
    boundary = clip     # optional; clip or torus, 2d only
    [targets]
    0.3
    0.32
    [sensors]
    0.31

Points hold one coordinate in 1d and two (``x y`` or ``x, y``) in 2d.
"""

import inspect

import numpy as np

import sepsim as ss
from sepsim.scenario import scenario_class
from sepsim.montecarlo import ExperimentSpec, TRIALS_PHASE
from sepsim.util import ConfigError

RUN_KEYS = ('scenario', 'trials', 'seed', 'format', 'out', 'plot', 'axis',
            'values', 'timing')
FORMATS = ('csv', 'json')


def parse_value(text):
    "int, then float, else the stripped string"
    text = text.strip()
    for kind in (int, float):
        try:
            return kind(text)
        except ValueError:
            pass
    return text


def strip_comment(line):
    return line.split('#', 1)[0].strip()


def parse_pairs(lines):
    "Yield (line number, key, value text) of `key = value` lines"
    for number, line in enumerate(lines, start=1):
        line = strip_comment(line)
        if not line:
            continue
        if '=' not in line:
            raise ConfigError("expected `key = value`", number)
        key, value = line.split('=', 1)
        key = key.strip()
        if not key:
            raise ConfigError("empty key", number)
        yield number, key, value.strip()


def scenario_keys(cls):
    "Parameter names accepted by scenario class `cls`"
    return list(inspect.signature(cls.__init__).parameters)[1:]


class RunConfig(object):
    "Parsed run configuration"

    def __init__(self, scenario, params, trials=TRIALS_PHASE, seed=0,
                 format='csv', out=None, plot=None, axis=None, values=None,
                 timing=False):
        if format not in FORMATS:
            raise ConfigError("`format` must be 'csv' or 'json'")
        self.scenario = scenario
        self.params = params
        self.trials = trials
        self.seed = seed
        self.format = format
        self.out = out
        self.plot = plot
        self.axis = axis
        self.values = values
        self.timing = timing

    def spec(self):
        "ExperimentSpec described by the config"
        return ExperimentSpec(self.scenario, self.trials, self.seed,
                              **self.params)

    def update(self, **flags):
        "Override config entries with command line flags that are not None"
        for key, value in flags.items():
            if value is None:
                continue
            if not hasattr(self, key):
                raise ValueError("unknown config entry `{}`".format(key))
            setattr(self, key, value)
        if self.format not in FORMATS:
            raise ConfigError("`format` must be 'csv' or 'json'")
        return self

    def __repr__(self):
        t = []
        fmt = '{:<12}{:<}'
        t.append(fmt.format('scenario', self.scenario))
        for key, value in self.params.items():
            t.append(fmt.format(key, value))
        t.append(fmt.format('trials', self.trials))
        t.append(fmt.format('seed', self.seed))
        if self.axis is not None:
            t.append(fmt.format('axis', self.axis))
            t.append(fmt.format('values', self.values))
        return '\n'.join(t)


def parse_run_config(text, sweep=False):
    """
    RunConfig from config text.

    Parameters
    ----------
    text : str
        Config file contents.
    sweep : bool, optional
        Require `axis` and `values`.

    Returns
    -------
    config : sepsim.config.RunConfig

    """
    entries = {}
    where = {}
    for number, key, value in parse_pairs(text.splitlines()):
        if key in entries:
            raise ConfigError("duplicate key `{}`".format(key), number)
        entries[key] = value
        where[key] = number
    for key in ('scenario', 'n'):
        if key not in entries:
            raise ConfigError("missing required key `{}`".format(key))
    try:
        cls = scenario_class(entries['scenario'])
    except ValueError as e:
        raise ConfigError(str(e), where['scenario'])
    allowed = scenario_keys(cls)
    params = {}
    run = {}
    for key, value in entries.items():
        if key == 'scenario':
            continue
        if key in RUN_KEYS:
            run[key] = value
        elif key in allowed:
            params[key] = parse_value(value)
        else:
            raise ConfigError("unknown key `{}`".format(key), where[key])
    if sweep:
        for key in ('axis', 'values'):
            if key not in run:
                raise ConfigError("missing required key `{}`".format(key))
        if run['axis'] not in allowed:
            msg = "`axis` must be a parameter of {}".format(cls.__name__)
            raise ConfigError(msg, where['axis'])
    kwargs = {}
    for key in ('trials', 'seed'):
        if key in run:
            value = parse_value(run[key])
            if not ss.isint(value) or value < 0:
                msg = "`{}` must be a non-negative integer".format(key)
                raise ConfigError(msg, where[key])
            kwargs[key] = value
    for key in ('format', 'out', 'plot', 'axis'):
        if key in run:
            kwargs[key] = run[key]
    if 'timing' in run:
        kwargs['timing'] = run['timing'].lower() in ('1', 'true', 'yes')
    if 'values' in run:
        items = [v for v in run['values'].split(',') if v.strip()]
        kwargs['values'] = [parse_value(v) for v in items]
    if kwargs.get('format', 'csv') not in FORMATS:
        raise ConfigError("`format` must be 'csv' or 'json'", where['format'])
    return RunConfig(entries['scenario'], params, **kwargs)


def load_run_config(path, sweep=False):
    "RunConfig from the file at `path`"
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    return parse_run_config(text, sweep=sweep)


def parse_point(line, number):
    fields = line.replace(',', ' ').split()
    try:
        point = [float(x) for x in fields]
    except ValueError:
        raise ConfigError("malformed point `{}`".format(line), number)
    if len(point) not in (1, 2):
        raise ConfigError("a point has one or two coordinates", number)
    return point


def parse_instance(text):
    """
    Target layout and sensor field from instance text.

    1d targets are sorted ascending. Returns (layout, field).
    """
    radius = None
    boundary = 'clip'
    section = None
    points = {'targets': [], 'sensors': []}
    rows = {'targets': [], 'sensors': []}
    for number, line in enumerate(text.splitlines(), start=1):
        line = strip_comment(line)
        if not line:
            continue
        if line.startswith('['):
            name = line.strip('[] ').lower()
            if name not in points:
                raise ConfigError("unknown section `{}`".format(line), number)
            section = name
        elif section is None:
            key, value = next(parse_pairs([line]))[1:]
            if key == 'radius':
                radius = parse_value(value)
                if not ss.isnumber(radius) or radius <= 0:
                    raise ConfigError("`radius` must be positive", number)
            elif key == 'boundary':
                if value not in ss.layout.BOUNDARY_MODES:
                    msg = "`boundary` must be 'clip' or 'torus'"
                    raise ConfigError(msg, number)
                boundary = value
            else:
                raise ConfigError("unknown key `{}`".format(key), number)
        else:
            points[section].append(parse_point(line, number))
            rows[section].append(number)
    if radius is None:
        raise ConfigError("missing required key `radius`")
    dims = set(len(p) for p in points['targets'] + points['sensors'])
    if len(dims) > 1:
        raise ConfigError("points mix 1d and 2d coordinates")
    dimension = dims.pop() if dims else 1
    region = ss.Region(dimension, boundary)
    arrays = {}
    for section in points:
        a = np.array(points[section], dtype=np.float64)
        if dimension == 1:
            a = a.reshape(-1)
        else:
            a = a.reshape(-1, 2)
        bad = (a < 0) | (a > 1)
        if bad.any():
            i = int(np.flatnonzero(bad.reshape(a.shape[0], -1).any(axis=1))[0])
            msg = "point outside the unit {}".format(
                'interval' if dimension == 1 else 'square')
            raise ConfigError(msg, rows[section][i])
        arrays[section] = a
    targets = arrays['targets']
    if dimension == 1:
        targets = np.sort(targets)
    layout = ss.TargetLayout(region, targets, model='uniform')
    field = ss.SensorField(region, arrays['sensors'], float(radius))
    return layout, field


def load_instance(path):
    "(layout, field) from the instance file at `path`"
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    return parse_instance(text)
