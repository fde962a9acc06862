import os
import json
import math
import time

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

import sepsim as ss
from sepsim.scenario import Scenario, make_scenario

TRIALS_PHASE = 400
TRIALS_BOUND = 10000

# two-sided 95% normal quantile
WILSON_Z = 1.959963984540054

COLUMNS = ['param', 'successes', 'trials', 'estimate', 'ci_low', 'ci_high',
           'wall_time_ms']

# trial chunks handed to each worker
CHUNKS_PER_JOB = 4


def default_n_jobs():
    "Worker count from the SEPSIM_THREADS environment variable (default 1)"
    value = os.environ.get('SEPSIM_THREADS', '1').strip()
    try:
        n_jobs = int(value)
    except ValueError:
        raise ValueError("SEPSIM_THREADS must be a positive integer")
    if n_jobs < 1:
        raise ValueError("SEPSIM_THREADS must be a positive integer")
    return n_jobs


class ExperimentSpec(object):
    "A scenario, a trial count, and a master seed"

    def __init__(self, scenario, trials=TRIALS_PHASE, seed=0, **params):
        if ss.isstring(scenario):
            scenario = make_scenario(scenario, **params)
        elif params:
            scenario = scenario.replace(**params)
        if not isinstance(scenario, Scenario):
            raise ValueError("`scenario` must be a Scenario or its name")
        if not ss.isint(trials) or trials < 1:
            raise ValueError("`trials` must be a positive integer")
        if not ss.isint(seed) or seed < 0:
            raise ValueError("`seed` must be a non-negative integer")
        self.scenario = scenario
        self.trials = int(trials)
        self.seed = int(seed)

    def replace(self, **params):
        "Copy of spec with scenario parameters changed"
        return ExperimentSpec(self.scenario.replace(**params), self.trials,
                              self.seed)

    def __repr__(self):
        fmt = "ExperimentSpec({}, trials={}, seed={})"
        return fmt.format(self.scenario, self.trials, self.seed)


def run_trial(spec, trial_index):
    "Success of trial `trial_index`; a pure function of (spec, trial_index)"
    rng = ss.trial_rng(spec.seed, trial_index)
    return bool(spec.scenario.trial(rng))


def count_successes(spec, start, stop):
    "Number of successful trials with index in [start, stop)"
    return sum(run_trial(spec, k) for k in range(start, stop))


def trial_chunks(trials, n_jobs):
    "Contiguous [start, stop) ranges covering range(trials)"
    k = max(1, min(trials, n_jobs * CHUNKS_PER_JOB))
    edges = np.linspace(0, trials, k + 1).round().astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def wilson_interval(successes, trials, z=WILSON_Z):
    """
    Wilson score interval for a binomial proportion.

    Parameters
    ----------
    successes : int
        Number of successes.
    trials : int
        Number of trials; must be positive.
    z : float, optional
        Normal quantile; the default gives a 95% interval.

    Returns
    -------
    ci : tuple
        (low, high) with 0 <= low <= successes/trials <= high <= 1.

    """
    if trials < 1:
        raise ValueError("`trials` must be positive")
    if not 0 <= successes <= trials:
        raise ValueError("`successes` must be between 0 and `trials`")
    p = successes / float(trials)
    z2 = z * z
    denom = 1 + z2 / trials
    center = (p + z2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials ** 2))
    half = half / denom
    low = 0.0 if successes == 0 else max(0.0, min(p, center - half))
    high = 1.0 if successes == trials else min(1.0, max(p, center + half))
    return low, high


def param_str(axis, value):
    "Sweep point label such as 'm=5608' with the shortest float repr"
    if ss.isint(value):
        value = str(int(value))
    elif ss.isnumber(value):
        value = repr(float(value))
    return '{}={}'.format(axis, value)


def estimate(spec, param=None, n_jobs=None, verbosity=0, timing=False):
    """
    Estimate the success probability of `spec` with a Wilson interval.

    Parameters
    ----------
    spec : sepsim.ExperimentSpec
        Scenario, trial count and master seed.
    param : str, optional
        Label of the row; the scenario name by default.
    n_jobs : int, optional
        Number of joblib workers. Default (None) reads SEPSIM_THREADS.
        The success count does not depend on `n_jobs`.
    verbosity : int, optional
        An integer that determines verbosity. Zero is silent.
    timing : bool, optional
        Record measured wall time in milliseconds. By default (False) the
        wall_time_ms column is 0 so results depend only on the spec.

    Returns
    -------
    est : sepsim.Estimate
        One row.

    """
    if n_jobs is None:
        n_jobs = default_n_jobs()
    if param is None:
        param = spec.scenario.name
    t0 = time.time()
    if n_jobs == 1:
        successes = count_successes(spec, 0, spec.trials)
    else:
        chunks = trial_chunks(spec.trials, n_jobs)
        counts = Parallel(n_jobs=n_jobs)(
            delayed(count_successes)(spec, a, b) for a, b in chunks)
        successes = sum(counts)
    wall = (time.time() - t0) * 1000.0
    low, high = wilson_interval(successes, spec.trials)
    row = {'param': param,
           'successes': int(successes),
           'trials': spec.trials,
           'estimate': successes / float(spec.trials),
           'ci_low': low,
           'ci_high': high,
           'wall_time_ms': round(wall, 3) if timing else 0.0}
    est = Estimate(pd.DataFrame([row], columns=COLUMNS))
    if verbosity > 0:
        print(est.summary_line(0))
    if verbosity > 1:
        print('{} trials in {:.2f} seconds'.format(spec.trials, wall / 1000))
    return est


def sweep(spec, axis, values, n_jobs=None, verbosity=0, timing=False):
    "One estimate per value of scenario parameter `axis`"
    if axis not in spec.scenario.p:
        msg = "`axis` must be a parameter of {}; got '{}'"
        raise ValueError(msg.format(spec.scenario.name, axis))
    est = Estimate()
    if verbosity > 0:
        print(spec.scenario)
    for value in values:
        point = spec.replace(**{axis: value})
        est += estimate(point, param_str(axis, value), n_jobs=n_jobs,
                        verbosity=verbosity, timing=timing)
    return est


class Estimate(object):
    "Table of estimate rows, one per experiment or sweep point"

    def __init__(self, df=None):
        if df is None:
            df = pd.DataFrame(columns=COLUMNS)
        if list(df.columns) != COLUMNS:
            raise ValueError("columns must be {}".format(COLUMNS))
        df = df.reset_index(drop=True)
        df['param'] = df['param'].astype(str)
        df['successes'] = df['successes'].astype(np.int64)
        df['trials'] = df['trials'].astype(np.int64)
        for col in COLUMNS[3:]:
            df[col] = df[col].astype(np.float64)
        self.df = df

    def __len__(self):
        return self.df.shape[0]

    def __add__(self, other):
        if len(other) == 0:
            return Estimate(self.df.copy())
        if len(self) == 0:
            return Estimate(other.df.copy())
        df = pd.concat([self.df, other.df], ignore_index=True)
        return Estimate(df)

    def __eq__(self, other):
        if not isinstance(other, Estimate):
            return False
        return self.df.equals(other.df)

    def __ne__(self, other):
        return not self.__eq__(other)

    @property
    def estimate(self):
        return self.df['estimate'].values

    @property
    def ci_low(self):
        return self.df['ci_low'].values

    @property
    def ci_high(self):
        return self.df['ci_high'].values

    def axis_values(self):
        "Numeric sweep values parsed from the 'axis=value' param labels"
        values = []
        for param in self.df['param']:
            if '=' not in param:
                raise ValueError("rows are not sweep points")
            values.append(float(param.split('=', 1)[1]))
        return np.array(values)

    def axis_name(self):
        "Sweep axis of the param labels"
        names = set(p.split('=', 1)[0] for p in self.df['param'])
        if len(names) != 1:
            raise ValueError("rows do not share one sweep axis")
        return names.pop()

    def to_records(self):
        "List of row dicts holding python scalars"
        records = []
        for row in self.df.itertuples(index=False):
            records.append({'param': str(row.param),
                            'successes': int(row.successes),
                            'trials': int(row.trials),
                            'estimate': float(row.estimate),
                            'ci_low': float(row.ci_low),
                            'ci_high': float(row.ci_high),
                            'wall_time_ms': float(row.wall_time_ms)})
        return records

    def to_csv(self, path=None):
        "CSV text (LF line endings, shortest float repr); written if `path`"
        text = self.df.to_csv(None, index=False, lineterminator='\n')
        if path is not None:
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        return text

    def to_json(self, path=None):
        "JSON array of row objects; written if `path`"
        text = json.dumps(self.to_records(), indent=2) + '\n'
        if path is not None:
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        return text

    def summary_line(self, i):
        row = self.df.iloc[i]
        fmt = '{:<24} {:>7}/{:<7} {:.4f} [{:.4f}, {:.4f}]'
        return fmt.format(row['param'], row['successes'], row['trials'],
                          row['estimate'], row['ci_low'], row['ci_high'])

    def __repr__(self):
        if len(self) == 0:
            return 'Estimate(empty)'
        return '\n'.join(self.summary_line(i) for i in range(len(self)))


def load_estimate_csv(path):
    "Estimate from a CSV written by Estimate.to_csv"
    df = pd.read_csv(path, dtype={'param': str}, float_precision='round_trip',
                     keep_default_na=False)
    return Estimate(df[COLUMNS])


def load_estimate_json(path):
    "Estimate from a JSON file written by Estimate.to_json"
    with open(path, 'r', encoding='utf-8') as f:
        records = json.load(f)
    if len(records) == 0:
        return Estimate()
    return Estimate(pd.DataFrame(records, columns=COLUMNS))
