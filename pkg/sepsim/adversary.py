"""
Poisson sensor fields with adversarial sensors and majority decoding.

Each sensor of a Poisson field is independently adversarial with
probability gamma. An adversarial sensor reports a function of its own true
reading only (the adversary policy); good sensors report the truth. A target
is decoded by majority vote over its unique coverers, and a tie or an
absent vote decodes to 'unknown'.
"""

import math

import numpy as np

import sepsim as ss
from sepsim.separability import (DecodedConfiguration, unique_votes,
                                 OCCUPIED, EMPTY, UNKNOWN)
from sepsim.util import check_positive, check_open_unit

POLICIES = ('flip', 'random', 'one', 'zero')


def check_gamma(gamma):
    "Return float(gamma) if 0 < gamma < 0.5; raise ValueError otherwise"
    if not ss.isnumber(gamma) or not 0 < gamma < 0.5:
        raise ValueError("`gamma` must satisfy 0 < gamma < 0.5")
    return float(gamma)


def decoding_exponent(gamma):
    "1 - 2 sqrt(gamma (1 - gamma)), the exponent of the majority bound"
    gamma = check_gamma(gamma)
    return 1 - 2 * math.sqrt(gamma * (1 - gamma))


class AdversaryModel(object):
    """
    Adversary probability and output policy.

    Policies: 'flip' reports 1 - reading, 'random' reports Bernoulli(p),
    'one' and 'zero' report the constant.
    """

    def __init__(self, gamma, policy='flip', p=0.5):
        gamma = check_gamma(gamma)
        if policy not in POLICIES:
            raise ValueError("`policy` must be one of {}".format(POLICIES))
        if not 0 <= p <= 1:
            raise ValueError("`p` must satisfy 0 <= p <= 1")
        self.p = {'gamma': gamma, 'policy': policy, 'p': float(p)}

    @property
    def gamma(self):
        return self.p['gamma']

    @property
    def policy(self):
        return self.p['policy']

    def apply(self, readings, rng):
        "Reports of adversarial sensors whose true readings are `readings`"
        readings = np.asarray(readings, dtype=np.int8)
        policy = self.policy
        if policy == 'flip':
            return (1 - readings).astype(np.int8)
        elif policy == 'random':
            return (rng.random(readings.size) < self.p['p']).astype(np.int8)
        elif policy == 'one':
            return np.ones(readings.size, dtype=np.int8)
        return np.zeros(readings.size, dtype=np.int8)

    def __repr__(self):
        msg = "AdversaryModel(gamma={}, policy={}".format(self.gamma,
                                                          self.policy)
        if self.policy == 'random':
            msg += ", p={}".format(self.p['p'])
        return msg + ")"


def as_model(policy):
    if isinstance(policy, AdversaryModel):
        return policy
    if ss.isstring(policy):
        # gamma plays no part in reporting
        return AdversaryModel(0.25, policy=policy)
    raise ValueError("`policy` must be an AdversaryModel or a policy name")


class MajorityVerdicts(DecodedConfiguration):
    "Majority verdicts plus, when known, the margins Q_i = G_i - A_i"

    def __init__(self, verdicts, margins=None):
        super(MajorityVerdicts, self).__init__(verdicts)
        if margins is not None:
            margins = ss.util.readonly(np.asarray(margins, dtype=np.int64))
            if margins.shape != (self.n,):
                raise ValueError("`margins` must have one entry per target")
        self._margins = margins

    @property
    def margins(self):
        return self._margins

    def __repr__(self):
        code = {OCCUPIED: '1', EMPTY: '0', UNKNOWN: '?'}
        return "MajorityVerdicts({})".format(
            ''.join(code[v] for v in self.verdicts))


def deploy_adversarial_field(intensity, region=None, radius=None, model=None,
                             seed=0):
    "Poisson field of `intensity`; each sensor adversarial w.p. model.gamma"
    if region is None:
        region = ss.Region(1)
    if radius is None:
        raise ValueError("`radius` must be given")
    if model is None:
        raise ValueError("`model` must be given")
    if not isinstance(model, AdversaryModel):
        raise ValueError("`model` must be an AdversaryModel")
    rng = ss.as_generator(seed)
    positions = ss.sample_poisson_points(intensity, region, rng)
    flags = rng.random(positions.shape[0]) < model.gamma
    return ss.SensorField(region, positions, radius, flags)


def reported_observations(field, layout, config, policy, seed=0):
    "Readings of good sensors and policy output of adversarial sensors"
    model = as_model(policy)
    reports = ss.observation_vector(field, layout, config)
    adversary = field.adversary
    if adversary.any():
        rng = ss.as_generator(seed)
        reports[adversary] = model.apply(reports[adversary], rng)
    return reports


def majority_margins(field, cmap):
    "(G, A, Q): good and adversarial unique coverers per target, Q = G - A"
    if field.m != cmap.m:
        raise ValueError("`field` and `cmap` must have the same sensors")
    mask = cmap.unique_target >= 0
    bad = field.adversary[mask].astype(np.float64)
    a = np.bincount(cmap.unique_target[mask], weights=bad, minlength=cmap.n)
    a = a.astype(np.int64)
    g = np.asarray(cmap.unique_count, dtype=np.int64) - a
    return g, a, g - a


def majority_decode(reports, cmap, field=None):
    """
    Majority vote over the unique coverers of each target.

    Parameters
    ----------
    reports : array_like
        One reported bit per sensor.
    cmap : sepsim.CoverageMap
        Coverage of the targets by the same sensors.
    field : sepsim.SensorField, optional
        When given, the margins Q_i = G_i - A_i are attached to the result.

    Returns
    -------
    verdicts : sepsim.MajorityVerdicts
        'occupied' on a strict majority of ones, 'empty' on a strict
        majority of zeros, 'unknown' on a tie or when no unique coverer
        exists.

    """
    ones, votes = unique_votes(reports, cmap)
    zeros = votes - ones
    verdicts = np.full(cmap.n, UNKNOWN, dtype='<U8')
    verdicts[ones > zeros] = OCCUPIED
    verdicts[zeros > ones] = EMPTY
    margins = None
    if field is not None:
        margins = majority_margins(field, cmap)[2]
    return MajorityVerdicts(verdicts, margins)


def adversary_count_split(field):
    "(good, adversarial) sensor counts"
    bad = int(field.adversary.sum())
    return field.m - bad, bad


def chernoff_success_bound(gamma, lam):
    "Lower bound 1 - exp(-(1 - 2 sqrt(gamma (1 - gamma))) lam) on P(Q_i > 0)"
    c = decoding_exponent(gamma)
    lam = check_positive(lam, 'lam')
    return 1 - math.exp(-c * lam)


def adversarial_full_success_bound(n, gamma, lam):
    "(1 - exp(-c lam))^n, lower bound on P(every target decoded correctly)"
    return chernoff_success_bound(gamma, lam) ** n


def adversarial_partial_success_bound(gamma, lam, alpha):
    "(1 - alpha - exp(-c lam))/(1 - alpha) clamped at 0"
    alpha = check_open_unit(alpha, 'alpha')
    p = chernoff_success_bound(gamma, lam)
    return max(0.0, (p - alpha) / (1 - alpha))


def adversarial_full_m(n, gamma, eps):
    "Intensity ((1 + eps)/(1 - 2 sqrt(gamma (1 - gamma)))) n ln n at r = 1/2n"
    c = decoding_exponent(gamma)
    eps = check_positive(eps, 'eps')
    return ((1 + eps) / c) * n * math.log(n)


def adversarial_partial_m(n, gamma, eps, alpha, beta):
    "Intensity ((1 + eps)/c) n ln(1/((1 - alpha)(1 - beta))) at r = 1/2n"
    c = decoding_exponent(gamma)
    eps = check_positive(eps, 'eps')
    alpha = check_open_unit(alpha, 'alpha')
    beta = check_open_unit(beta, 'beta')
    return ((1 + eps) / c) * n * math.log(1 / ((1 - alpha) * (1 - beta)))
