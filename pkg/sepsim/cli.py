"""
Command line interface.

    sepsim thresholds --scenario grid-full --n 500 --c 5
    sepsim estimate run.cfg --trials 400 --out est.csv
    sepsim sweep sweep.cfg --plot sweep.svg
    sepsim check instance.txt

Every command returns exit status 0 on success and 1 after logging an
error.
"""

import sys
import json
import math
import inspect
import logging
import argparse

import pandas as pd

import sepsim as ss
from sepsim import scaling as sc
from sepsim import adversary as adv
from sepsim.config import load_run_config, load_instance
from sepsim.montecarlo import estimate, sweep, default_n_jobs
from sepsim.plot import plot_sweep
from sepsim.scenario import scenario_class, scenario_names
from sepsim.util import TheoremDomainError

log = logging.getLogger('sepsim')

THRESHOLD_PARAMS = ('n', 'a', 'c', 'alpha', 'beta', 'alpha1', 'theta1',
                    'theta2', 'c_n', 'f_n', 'gamma', 'eps', 'dimension', 'd',
                    'v1', 'v2', 'm')


# ---------------------------------------------------------------------------
# threshold tables

def scenario_defaults(name):
    "Default parameters of scenario `name`"
    cls = scenario_class(name)
    sig = inspect.signature(cls.__init__)
    p = {}
    for key, par in list(sig.parameters.items())[1:]:
        if par.default is not inspect.Parameter.empty:
            p[key] = par.default
    return p


def _grid_rows(p, rows):
    n = p['n']
    if p.get('dimension', 1) == 2:
        rows.append(('radius', 'r = 1/(2 sqrt n)',
                     lambda: sc.grid_radius_2d(n)))
        rows.append(('radius limit', 'pi r^2 < pi/n',
                     lambda: 1 / math.sqrt(n)))
        return
    a = p['a']
    rows.append(('radius', 'r = a/2n', lambda: sc.grid_radius(n, a)))
    rows.append(('radius wide', 'r = (2 - a)/2n',
                 lambda: sc.grid_radius(n, a, wide=True)))
    rows.append(('radius limit', 'r < 1/n', lambda: 1.0 / n))


def threshold_rows(name, p):
    "List of (name, formula, thunk) for scenario `name` with parameters `p`"
    name = name.replace('_', '-')
    n = p['n']
    rows = []
    if name == 'grid-full':
        _grid_rows(p, rows)
        if p.get('dimension', 1) == 2:
            for s in '-+':
                rows.append(('m ' + s, '(4n/pi)(ln(4n/pi) {} c)'.format(s),
                             lambda s=s: sc.grid_full_m_2d(n, p['c'], s)))
        else:
            gp = sc.GridParams(n, a=p['a'], c=p['c'])
            for s in '-+':
                rows.append(('m ' + s, '(n/a)(ln(n/a) {} c)'.format(s),
                             lambda s=s: sc.grid_full_m(gp, s)))
    elif name == 'grid-partial':
        _grid_rows(p, rows)
        if p.get('dimension', 1) == 2:
            for kind in ('necessary', 'sufficient'):
                rows.append(('m ' + kind, '4n/pi in place of n/a',
                             lambda k=kind: sc.grid_partial_m_2d(
                                 n, p['alpha'], p['beta'], k)))
        else:
            gp = sc.GridParams(n, a=p['a'], alpha=p['alpha'], beta=p['beta'])
            rows.append(('m necessary', '(n/a - 1) ln(1/(1 - alpha beta))',
                         lambda: sc.grid_partial_m_necessary(gp)))
            rows.append(('m sufficient',
                         '(n/a) ln(1/((1 - alpha)(1 - beta)))',
                         lambda: sc.grid_partial_m_sufficient(gp)))
    elif name == 'random-full':
        c_n = p['c_n'] if p['c_n'] is not None else math.log(n)
        if p.get('dimension', 1) == 2:
            rows.append(('radius', 'pi r^2 = 1/(n c_n)',
                         lambda: sc.random_full_2d(n, c_n, p['f_n'])[0]))
            for s in '-+':
                rows.append(('m ' + s, 'n c_n (ln(n c_n) {} g_n)'.format(s),
                             lambda s=s: sc.random_full_2d(
                                 n, c_n, p['f_n'], s)[1]))
        else:
            rows.append(('radius', 'r = 1/(c_n n^2)',
                         lambda: sc.random_full_r(n, c_n)))
            for s in '-+':
                formula = '(n^2 c_n/2)(2 ln n + ln(c_n/2) {} f_n)'.format(s)
                rows.append(('m ' + s, formula,
                             lambda s=s: sc.random_full_m(n, c_n, p['f_n'],
                                                          s)))
    elif name == 'random-partial':
        rp = sc.RandomParams(n, p['alpha'], p['beta'], p['alpha1'],
                             p['theta1'], p['theta2'], p['a'])
        rows.append(('c1', 'ln(1/(1 - (1 - alpha1)(1 - beta)))',
                     lambda: rp.c1))
        rows.append(('c2', 'ln(1/(1 - (1 - alpha)(1 - beta)))',
                     lambda: rp.c2))
        rows.append(('c3', 'ln(1/(alpha beta))', lambda: rp.c3))
        if p.get('dimension', 1) == 2:
            for kind in ('necessary', 'sufficient'):
                rows.append(('radius ' + kind, 'pi r^2 bound',
                             lambda k=kind: sc.random_partial_r_2d(
                                 n, p['alpha1'], p['beta'], p['a'], k)))
                rows.append(('m ' + kind, '(a - 1)^2 and a^2 factors',
                             lambda k=kind: sc.random_partial_m_2d(rp, k)))
        else:
            rows.append(('radius necessary', 'ln(1/(alpha1 beta))/2n',
                         lambda: sc.random_partial_r_necessary(
                             n, p['alpha1'], p['beta'])))
            rows.append(('radius sufficient', '1/(2(n/c1 + 1))',
                         lambda: sc.random_partial_r_sufficient(
                             n, p['alpha1'], p['beta'])))
            rows.append(('m necessary',
                         '(n/(theta2 (a-1) c1) - 1) ln(1/(c3 - a theta1 c1))',
                         lambda: sc.random_partial_m_necessary(rp)))
            rows.append(('m sufficient',
                         '(n/(theta1 (a-1) c1)) ln(1 + 1/(c2 - a theta2 c1))',
                         lambda: sc.random_partial_m_sufficient(rp)))
    elif name in ('adversarial-full', 'adversarial-partial'):
        gamma = p['gamma']
        eps = p['eps']
        rows.append(('radius', 'r = 1/2n', lambda: sc.grid_radius(n)))
        rows.append(('exponent', '1 - 2 sqrt(gamma (1 - gamma))',
                     lambda: adv.decoding_exponent(gamma)))
        if name == 'adversarial-full':
            m = adv.adversarial_full_m(n, gamma, eps)
            rows.append(('m', '((1 + eps)/exponent) n ln n', lambda: m))
            rows.append(('success bound', '(1 - exp(-exponent m/n))^n',
                         lambda: adv.adversarial_full_success_bound(
                             n, gamma, m / n)))
        else:
            m = adv.adversarial_partial_m(n, gamma, eps, p['alpha'],
                                          p['beta'])
            rows.append(('m',
                         '((1 + eps)/exponent) n ln(1/((1-alpha)(1-beta)))',
                         lambda: m))
            rows.append(('success bound',
                         '(1 - alpha - exp(-exponent m/n))/(1 - alpha)',
                         lambda: adv.adversarial_partial_success_bound(
                             gamma, m / n, p['alpha'])))
        rows.append(('per-target bound', '1 - exp(-exponent m/n)',
                     lambda: adv.chernoff_success_bound(gamma, m / n)))
    elif name == 'min-spacing':
        d = p['d']
        if not ss.isnumber(d):
            d = 1.0 / (n ** 2 * math.log(n))
        rows.append(('d', 'd', lambda: d))
        rows.append(('probability', '(1 - (n - 1) d)^n',
                     lambda: sc.min_spacing_prob(n, d)))
        rows.append(('lower bound', 'exp(-n (n-1) d/(1 - (n-1) d))',
                     lambda: sc.min_spacing_bounds(n, d)[0]))
        rows.append(('upper bound', 'exp(-n (n-1) d)',
                     lambda: sc.min_spacing_bounds(n, d)[1]))
    elif name == 'coupon':
        c = p['c']
        m = p['m'] if ss.isnumber(p['m']) else sc.coupon_m(n, c)
        rows.append(('m', 'ceil(n (ln n + c))', lambda: m))
        rows.append(('probability', 'inclusion-exclusion',
                     lambda: sc.coupon_all_collected_prob(n, int(m))))
        rows.append(('asymptotic', 'exp(-exp(-c))',
                     lambda: sc.coupon_asymptotic(n, c)))
    elif name == 'spacing-tail':
        v = [p['v1'], p['v2']]
        rows.append(('probability', '(1 - v1 - v2)^n',
                     lambda: sc.spacing_tail(v, n)))
    return rows


def threshold_table(name, **params):
    """
    Closed-form thresholds of scenario `name` as a DataFrame.

    Returns (table, errors); a row whose formula is outside its domain has
    value NaN and its message in `errors`.
    """
    p = scenario_defaults(name)
    p.update(params)
    if 'n' not in p:
        raise ValueError("`n` is required")
    records = []
    errors = []
    for label, formula, thunk in threshold_rows(name, p):
        try:
            value = float(thunk())
        except TheoremDomainError as e:
            value = float('nan')
            errors.append('{}: {}'.format(label, e))
        records.append({'name': label, 'formula': formula, 'value': value})
    table = pd.DataFrame(records, columns=['name', 'formula', 'value'])
    return table, errors


# ---------------------------------------------------------------------------
# output

def emit(text, out):
    "Write `text` to file `out`, or to stdout when `out` is None"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        log.info('wrote %s', out)


def emit_estimate(est, fmt, out):
    if fmt == 'json':
        emit(est.to_json(), out)
    else:
        emit(est.to_csv(), out)


# ---------------------------------------------------------------------------
# commands

def cmd_thresholds(args):
    "Print every closed-form threshold of a scenario"
    params = {}
    for key in THRESHOLD_PARAMS:
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    log.info('thresholds for %s %s', args.scenario, params)
    table, errors = threshold_table(args.scenario, **params)
    if args.format == 'json':
        records = [{'name': r['name'], 'formula': r['formula'],
                    'value': None if math.isnan(r['value']) else r['value']}
                   for r in table.to_dict('records')]
        emit(json.dumps(records, indent=2) + '\n', args.out)
    else:
        emit(table.to_string(index=False) + '\n', args.out)
    for msg in errors:
        log.error(msg)
    return 1 if errors else 0


def run_config(args, sweep_mode):
    config = load_run_config(args.config, sweep=sweep_mode)
    config.update(seed=args.seed, trials=args.trials, format=args.format,
                  out=args.out, plot=getattr(args, 'plot', None))
    if args.timing:
        config.timing = True
    return config


def n_jobs_from(args):
    if args.threads is not None:
        if args.threads < 1:
            raise ValueError("`--threads` must be a positive integer")
        return args.threads
    return default_n_jobs()


def cmd_estimate(args):
    "Estimate the success probability of one configured experiment"
    config = run_config(args, sweep_mode=False)
    spec = config.spec()
    log.info('estimate %s', spec)
    est = estimate(spec, n_jobs=n_jobs_from(args), timing=config.timing)
    log.info('%s', est)
    emit_estimate(est, config.format, config.out)
    return 0


def cmd_sweep(args):
    "Estimate along a sweep axis; optionally plot"
    config = run_config(args, sweep_mode=True)
    spec = config.spec()
    log.info('sweep %s over %s = %s', spec, config.axis, config.values)
    est = sweep(spec, config.axis, config.values, n_jobs=n_jobs_from(args),
                timing=config.timing)
    for line in repr(est).splitlines():
        log.info('%s', line)
    emit_estimate(est, config.format, config.out)
    if config.plot is None or len(est) == 0:
        return 0
    if not all(ss.isnumber(v) for v in config.values):
        log.warning('sweep values of `%s` are not all numeric; '
                    'skipping plot %s', config.axis, config.plot)
    else:
        plot_sweep(est, config.plot, spec.scenario.thresholds(config.axis),
                   title=spec.scenario.name)
        log.info('wrote %s', config.plot)
    return 0


def cmd_check(args):
    "Separability report of an instance file as JSON"
    layout, field = load_instance(args.instance)
    report = ss.analyze(layout, field)
    log.info('%s', report)
    d = report.to_dict()
    d['targets'] = layout.positions.tolist()
    d['sensors'] = field.m
    d['radius'] = field.radius
    emit(json.dumps(d, indent=2) + '\n', args.out)
    return 0


# ---------------------------------------------------------------------------
# parser

def common_parser():
    "Flags shared by all commands"
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument('--seed', type=int, default=None, help='master seed')
    p.add_argument('--trials', type=int, default=None, help='trial count')
    p.add_argument('--format', choices=['csv', 'json'], default=None,
                   help='output format (default csv)')
    p.add_argument('--out', default=None, help='output file (default stdout)')
    p.add_argument('--timing', action='store_true',
                   help='record wall time (default 0 for reproducible CSV)')
    p.add_argument('--threads', type=int, default=None,
                   help='trial workers (default SEPSIM_THREADS or 1)')
    p.add_argument('-v', '--verbose', action='count', default=0,
                   help='log INFO (-v) or DEBUG (-vv) to stderr')
    return p


def build_parser():
    common = common_parser()
    parser = argparse.ArgumentParser(
        prog='sepsim',
        description='Separability of targets by binary proximity sensors')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + ss.__version__)
    sub = parser.add_subparsers(dest='command', help='command')

    p = sub.add_parser('thresholds', parents=[common],
                       help='closed-form thresholds of a scenario')
    p.add_argument('--scenario', required=True, choices=scenario_names())
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--m', type=float)
    for key in ('a', 'c', 'alpha', 'beta', 'alpha1', 'theta1', 'theta2',
                'gamma', 'eps', 'd', 'v1', 'v2'):
        p.add_argument('--' + key, type=float)
    p.add_argument('--c-n', dest='c_n', type=float)
    p.add_argument('--f-n', dest='f_n', type=float)
    p.add_argument('--dimension', type=int, choices=[1, 2])

    p = sub.add_parser('estimate', parents=[common],
                       help='estimate one success probability')
    p.add_argument('config', help='run config file')

    p = sub.add_parser('sweep', parents=[common],
                       help='estimate along a parameter axis')
    p.add_argument('config', help='run config file with axis and values')
    p.add_argument('--plot', default=None, help='SVG output file')

    p = sub.add_parser('check', parents=[common],
                       help='separability report of an instance file')
    p.add_argument('instance', help='instance file')
    return parser


def setup_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s: %(message)s')
    log.setLevel(level)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 1
    setup_logging(args.verbose)
    command_map = {'thresholds': cmd_thresholds,
                   'estimate': cmd_estimate,
                   'sweep': cmd_sweep,
                   'check': cmd_check}
    try:
        return command_map[args.command](args)
    except (ValueError, OSError) as e:
        log.error('%s', e)
        return 1


if __name__ == '__main__':
    sys.exit(main())
