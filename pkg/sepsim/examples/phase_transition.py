import math

import sepsim as ss


def phase_transition(n=100, trials=100, seed=0):
    "Grid full separability as m crosses n ln n, next to the exact value"
    values = [int(math.ceil(n * (math.log(n) + c))) for c in (-2, 0, 2, 5)]
    spec = ss.ExperimentSpec('grid-full', trials=trials, seed=seed, n=n)
    est = ss.sweep(spec, 'm', values, verbosity=1)
    for m in values:
        exact = ss.coupon_all_collected_prob(n, m)
        print('m={:<6} exact {:.4f}'.format(m, exact))
    return est
