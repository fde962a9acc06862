import sepsim as ss


def adversarial(n=50, gamma=0.2, eps=0.5, trials=100, seed=0):
    "Majority decoding with flipping adversaries against its lower bound"
    m = ss.adversarial_full_m(n, gamma, eps)
    spec = ss.ExperimentSpec('adversarial-full', trials=trials, seed=seed,
                             n=n, gamma=gamma, eps=eps)
    est = ss.estimate(spec, verbosity=1)
    bound = ss.adversarial_full_success_bound(n, gamma, m / n)
    print('intensity {:.1f}, lower bound {:.4f}'.format(m, bound))
    return est
