"""
Closed-form separability thresholds and the probability bounds behind them.

All logarithms are natural logarithms. Sensor-count thresholds are returned
as floats; take the ceiling when an integer count is needed. Divergent
sequences of the asymptotic statements (c_n, f_n, g_n) are finite scalars
chosen by the caller.
"""

import math

import numpy as np
from scipy.special import gammaln, logsumexp

import sepsim as ss
from sepsim.util import TheoremDomainError, check_open_unit, check_positive

DEFAULT_F_N = 3.0
DEFAULT_G_N = 3.0

# inclusion-exclusion is trusted while its absolute rounding error stays
# below this; otherwise the exact occupancy recursion is used
COUPON_MAX_ERROR = 1e-12


# ---------------------------------------------------------------------------
# parameter sets

class Params(object):
    "Base class of threshold parameter sets; parameters live in self.p"

    def __getattr__(self, name):
        p = self.__dict__.get('p')
        if p is not None and name in p:
            return p[name]
        raise AttributeError(name)

    def __repr__(self):
        msg = self.__class__.__name__ + "("
        for name, value in self.p.items():
            if value is not None:
                msg += name + "=" + str(value) + ", "
        if msg.endswith(", "):
            msg = msg[:-2]
        return msg + ")"


class GridParams(Params):
    "Grid-model parameters: r = a/2n (or (2 - a)/2n)"

    def __init__(self, n, a=1.0, alpha=None, beta=None, c=0.0):
        check_positive(n, 'n')
        if not ss.isnumber(a) or not 0 < a <= 1:
            raise ValueError("`a` must satisfy 0 < a <= 1")
        if alpha is not None:
            alpha = check_open_unit(alpha, 'alpha')
        if beta is not None:
            beta = check_open_unit(beta, 'beta')
        if not ss.isnumber(c):
            raise ValueError("`c` must be a real number")
        self.p = {'n': n, 'a': float(a), 'alpha': alpha, 'beta': beta,
                  'c': float(c)}

    def partial_levels(self):
        if self.alpha is None or self.beta is None:
            raise ValueError("`alpha` and `beta` are required")
        return self.alpha, self.beta


class RandomParams(Params):
    "Random-target partial separability parameters"

    def __init__(self, n, alpha, beta, alpha1, theta1, theta2, a,
                 c_n=None, f_n=DEFAULT_F_N):
        check_positive(n, 'n')
        alpha = check_open_unit(alpha, 'alpha')
        beta = check_open_unit(beta, 'beta')
        alpha1 = check_open_unit(alpha1, 'alpha1')
        if not alpha < alpha1:
            raise TheoremDomainError("constraint alpha < alpha1 violated")
        check_positive(theta1, 'theta1')
        check_positive(theta2, 'theta2')
        check_positive(a, 'a')
        if c_n is None:
            c_n = math.log(n)
        self.p = {'n': n, 'alpha': alpha, 'beta': beta, 'alpha1': alpha1,
                  'theta1': float(theta1), 'theta2': float(theta2),
                  'a': float(a), 'c_n': c_n, 'f_n': f_n}

    @property
    def c1(self):
        return math.log(1 / (1 - (1 - self.alpha1) * (1 - self.beta)))

    @property
    def c2(self):
        return math.log(1 / (1 - (1 - self.alpha) * (1 - self.beta)))

    @property
    def c3(self):
        return math.log(1 / (self.alpha * self.beta))

    def check_thetas(self):
        "0 < theta1 <= theta2 < 1/(1 + c1/n)"
        hi = 1 / (1 + self.c1 / self.n)
        if not 0 < self.theta1 <= self.theta2 < hi:
            msg = "constraint 0 < theta1 <= theta2 < 1/(1 + c1/n) = {:.6g} "
            msg += "violated"
            raise TheoremDomainError(msg.format(hi))


def check_sign(sign):
    if sign == '+':
        return 1.0
    if sign == '-':
        return -1.0
    raise ValueError("`sign` must be '+' or '-'")


def check_kind(kind):
    if kind not in ('sufficient', 'necessary'):
        raise ValueError("`kind` must be 'sufficient' or 'necessary'")
    return kind


# ---------------------------------------------------------------------------
# preliminaries

def exp_bounds(theta, m):
    "(exp(-m theta/(1 - theta)), exp(-m theta)); (1 - theta)^m lies between"
    theta = check_open_unit(theta, 'theta')
    if not ss.isint(m) or m < 1:
        raise ValueError("`m` must be a positive integer")
    return math.exp(-m * theta / (1 - theta)), math.exp(-m * theta)


def spacing_tail(v, n):
    "P(V_(i1) > v_1, ..., V_(ik) > v_k) for n uniform points: (1 - sum v)^n"
    v = np.atleast_1d(np.asarray(v, dtype=np.float64))
    if (v < 0).any():
        raise ValueError("`v` entries must be non-negative")
    if v.size > n:
        raise ValueError("at most `n` spacings can be constrained")
    total = math.fsum(v.tolist())
    if total > 1:
        return 0.0
    return (1 - total) ** n


def min_spacing_prob(n, d):
    "P(all n - 1 gaps between adjacent uniform points exceed d)"
    if d < 0:
        raise ValueError("`d` must be non-negative")
    if n <= 1:
        return 1.0
    if (n - 1) * d >= 1:
        return 0.0
    return (1 - (n - 1) * d) ** n


def min_spacing_bounds(n, d):
    "Exponential lower and upper bounds on min_spacing_prob(n, d)"
    theta = (n - 1) * d
    if theta <= 0:
        return 1.0, 1.0
    if theta >= 1:
        return 0.0, 0.0
    return exp_bounds(theta, int(n))


def bernoulli_partial_bounds(p, alpha):
    """
    Bounds on P(S_n > alpha n) for a sum of n i.i.d. Bernoulli(p).

    Lower bound (p - alpha)/(1 - alpha) from Markov's inequality on n - S_n,
    upper bound p/alpha from Markov's inequality on S_n; both clamped to
    [0, 1] and valid for every n.
    """
    alpha = check_open_unit(alpha, 'alpha')
    if not 0 <= p <= 1:
        raise ValueError("`p` must satisfy 0 <= p <= 1")
    lower = max(0.0, (p - alpha) / (1 - alpha))
    upper = min(1.0, p / alpha)
    return lower, upper


def _coupon_occupancy(n, m):
    "P(all n cells hit by m uniform draws) by the exact occupancy recursion"
    p = np.zeros(n + 1)
    p[0] = 1.0
    j = np.arange(n + 1, dtype=np.float64)
    stay = j / n
    move = (n - j + 1) / n
    for _ in range(m):
        nxt = p * stay
        nxt[1:] += p[:-1] * move[1:]
        p = nxt
    return float(p[n])


def coupon_log_terms(n, m):
    """
    Log magnitudes of the inclusion-exclusion terms C(n, k) (1 - k/n)^m.

    Returns the array for k = 0..n-1 (the k = n term is zero when m > 0)
    and the log of their sum, which bounds the absolute rounding error of
    the alternating sum.
    """
    k = np.arange(n, dtype=np.float64)
    logc = gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)
    logt = logc + m * np.log1p(-k / n)
    return logt, logsumexp(logt)


def coupon_all_collected_prob(n, m):
    """
    Exact probability that m draws with replacement collect all n coupons.

    Inclusion-exclusion sum_k (-1)^k C(n, k) (1 - k/n)^m evaluated in the
    log domain with exactly rounded summation. When cancellation would cost
    more than COUPON_MAX_ERROR the exact occupancy recursion is used.
    """
    if not ss.isint(n) or n < 1:
        raise ValueError("`n` must be a positive integer")
    if not ss.isint(m) or m < 0:
        raise ValueError("`m` must be a non-negative integer")
    n = int(n)
    m = int(m)
    if m < n:
        return 0.0
    logt, logmass = coupon_log_terms(n, m)
    error = logmass + math.log(n) - 52 * math.log(2)
    if error > math.log(COUPON_MAX_ERROR):
        return _coupon_occupancy(n, m)
    top = logt.max()
    sign = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    scaled = (sign * np.exp(logt - top)).tolist()
    total = math.fsum(scaled) * math.exp(top)
    return min(1.0, max(0.0, total))


def coupon_asymptotic(n, c):
    "Limit of coupon_all_collected_prob(n, n (ln n + c)): exp(-exp(-c))"
    if not ss.isint(n) or n < 1:
        raise ValueError("`n` must be a positive integer")
    return math.exp(-math.exp(-c))


def coupon_m(n, c):
    "Draw count n (ln n + c), rounded up"
    return int(math.ceil(n * (math.log(n) + c)))


# ---------------------------------------------------------------------------
# targets on a 1d grid

def grid_radius(n, a=1.0, wide=False):
    "Sensing radius a/2n, or (2 - a)/2n when `wide`"
    if not 0 < a <= 1:
        raise ValueError("`a` must satisfy 0 < a <= 1")
    if wide:
        return (2 - a) / (2.0 * n)
    return a / (2.0 * n)


def grid_radius_n_plus_one(n):
    "Radius 1/(n + 1); feasible, but needs order n^2 log n sensors"
    return 1.0 / (n + 1)


def grid_radius_feasible(n, r):
    "Necessary condition for grid separability: 0 < r < 1/n"
    return 0 < r < 1.0 / n


def grid_full_m(params, sign='+'):
    "(n/a)(ln(n/a) +/- c) sensors for full separability on the grid"
    s = check_sign(sign)
    na = params.n / params.a
    return na * (math.log(na) + s * params.c)


def grid_partial_m_sufficient(params):
    "(n/a) ln(1/((1 - alpha)(1 - beta))): enough for >= alpha n w.p. > beta"
    alpha, beta = params.partial_levels()
    return (params.n / params.a) * math.log(1 / ((1 - alpha) * (1 - beta)))


def grid_partial_m_necessary(params):
    "(n/a - 1) ln(1/(1 - alpha beta)): fewer sensors fail w.p. > 1 - beta"
    alpha, beta = params.partial_levels()
    return (params.n / params.a - 1) * math.log(1 / (1 - alpha * beta))


def grid_partial_prob_bounds(n, a, m, alpha):
    "Bounds on P(at least alpha n grid targets identifiable) with m sensors"
    p = 1 - (1 - a / float(n)) ** m
    return bernoulli_partial_bounds(p, alpha)


# ---------------------------------------------------------------------------
# uniformly distributed targets in 1d

def random_full_r(n, c_n):
    "Radius 1/(c_n n^2) needed for full separability of random targets"
    check_positive(c_n, 'c_n')
    return 1.0 / (c_n * n ** 2)


def random_full_m(n, c_n, f_n=DEFAULT_F_N, sign='+'):
    "(n^2 c_n/2)(2 ln n + ln(c_n/2) +/- f_n) sensors at r = 1/(c_n n^2)"
    check_positive(c_n, 'c_n')
    check_positive(f_n, 'f_n')
    s = check_sign(sign)
    return (n ** 2 * c_n / 2.0) * (2 * math.log(n) + math.log(c_n / 2.0) +
                                   s * f_n)


def _c1(alpha1, beta):
    alpha1 = check_open_unit(alpha1, 'alpha1')
    beta = check_open_unit(beta, 'beta')
    return math.log(1 / (1 - (1 - alpha1) * (1 - beta)))


def random_partial_r_sufficient(n, alpha1, beta):
    "r <= 1/(2(n/c1 + 1)) keeps >= alpha1 n targets isolated w.p. >= beta"
    c1 = _c1(alpha1, beta)
    return 0.5 / ((n / c1) + 1)


def random_partial_r_necessary(n, alpha1, beta):
    "r > ln(1/(alpha1 beta))/2n isolates >= alpha1 n targets w.p. < beta"
    alpha1 = check_open_unit(alpha1, 'alpha1')
    beta = check_open_unit(beta, 'beta')
    return math.log(1 / (alpha1 * beta)) / (2.0 * n)


def _check_a_lower(params, a_eff):
    lo = max(1.0, params.c2 / (2 * params.theta1 * params.c1))
    if not a_eff > lo:
        msg = "constraint a > max(1, c2/(2 theta1 c1)) = {:.6g} violated"
        raise TheoremDomainError(msg.format(lo))


def random_partial_m_sufficient(params):
    """
    Sensors enough for >= alpha n separable random targets w.p. >= beta.

    m = (n/(theta1 (a - 1) c1)) ln(1 + 1/D) with D = c2 - a theta2 c1 > 0.
    Feasible only when c2/(2 theta1 c1) < a < c2/(theta2 c1), which needs
    theta2 < 2 theta1.
    """
    params.check_thetas()
    _check_a_lower(params, params.a)
    c1 = params.c1
    d = params.c2 - params.a * params.theta2 * c1
    if not d > 0:
        msg = "constraint c2 - a theta2 c1 > 0 violated (value {:.6g})"
        raise TheoremDomainError(msg.format(d))
    scale = params.n / (params.theta1 * (params.a - 1) * c1)
    return scale * math.log(1 + 1 / d)


def random_partial_m_sufficient_as_printed(params):
    """
    Printed variant with D = c2 - 2 a theta2 c1.

    With a > c2/(2 theta1 c1) and theta1 <= theta2 this D is never
    positive, so every admissible parameter set raises TheoremDomainError.
    Kept for auditing.
    """
    params.check_thetas()
    _check_a_lower(params, params.a)
    c1 = params.c1
    d = params.c2 - 2 * params.a * params.theta2 * c1
    if not d > 0:
        msg = "constraint c2 - 2 a theta2 c1 > 0 violated (value {:.6g})"
        raise TheoremDomainError(msg.format(d))
    scale = params.n / (params.theta1 * (params.a - 1) * c1)
    return scale * math.log(1 + 1 / d)


def random_partial_m_necessary(params):
    "(n/(theta2 (a - 1) c1) - 1) ln(1/(c3 - a theta1 c1)); needs 0 < . < 1"
    params.check_thetas()
    if not params.a > 1:
        raise TheoremDomainError("constraint a > 1 violated")
    c1 = params.c1
    e = params.c3 - params.a * params.theta1 * c1
    if not 0 < e < 1:
        msg = "constraint 0 < c3 - a theta1 c1 < 1 violated (value {:.6g})"
        raise TheoremDomainError(msg.format(e))
    scale = params.n / (params.theta2 * (params.a - 1) * c1) - 1
    return scale * math.log(1 / e)


def naive_partial_schemes(n, theta, theta_tilde, c_n):
    """
    Two looser partial-separability schemes for random targets.

    'grid-like' isolates and covers a fraction of targets with r = theta/2n
    and m = (n/theta) ln(n/theta). 'full-like' isolates every target with
    r = theta/(c_n n^2) and covers a fraction with m = theta_tilde c_n n^2.
    Returns dict of name -> (r, m).
    """
    check_positive(theta, 'theta')
    check_positive(theta_tilde, 'theta_tilde')
    check_positive(c_n, 'c_n')
    grid_like = (theta / (2.0 * n), (n / theta) * math.log(n / theta))
    full_like = (theta / (c_n * n ** 2), theta_tilde * c_n * n ** 2)
    return {'grid-like': grid_like, 'full-like': full_like}


# ---------------------------------------------------------------------------
# two dimensions

def grid_radius_2d(n):
    "Radius with pi r^2 = pi/4n, the disc inscribed in a grid cell"
    return 1.0 / (2 * math.sqrt(n))


def grid_radius_feasible_2d(n, r):
    "Necessary condition for 2d grid separability: 0 < pi r^2 < pi/n"
    return 0 < math.pi * r ** 2 < math.pi / n


def grid_full_m_2d(n, c, sign='+'):
    "(4n/pi)(ln(4n/pi) +/- c) sensors at pi r^2 = pi/4n"
    s = check_sign(sign)
    k = 4.0 * n / math.pi
    return k * (math.log(k) + s * c)


def grid_partial_m_2d(n, alpha, beta, kind='sufficient'):
    "2d grid partial thresholds; n/a of the 1d form becomes 4n/pi"
    kind = check_kind(kind)
    alpha = check_open_unit(alpha, 'alpha')
    beta = check_open_unit(beta, 'beta')
    k = 4.0 * n / math.pi
    if kind == 'sufficient':
        return k * math.log(1 / ((1 - alpha) * (1 - beta)))
    return (k - 1) * math.log(1 / (1 - alpha * beta))


def random_full_2d(n, c_n, g_n=DEFAULT_G_N, sign='+'):
    "(r, m) with pi r^2 = 1/(n c_n) and m = n c_n (ln(n c_n) +/- g_n)"
    check_positive(c_n, 'c_n')
    check_positive(g_n, 'g_n')
    s = check_sign(sign)
    area = 1.0 / (n * c_n)
    r = math.sqrt(area / math.pi)
    m = n * c_n * (math.log(n * c_n) + s * g_n)
    return r, m


def random_partial_r_2d(n, alpha1, beta, a, kind='sufficient'):
    "Radius thresholds from pi r^2 bounds for isolating alpha1 n targets"
    kind = check_kind(kind)
    c1 = _c1(alpha1, beta)
    if not a > 1:
        raise TheoremDomainError("constraint a > 1 violated")
    if kind == 'sufficient':
        area = 1.0 / (a ** 2 * ((n - 1) / c1 + 1))
    else:
        area = math.log(1 / (alpha1 * beta)) / (a ** 2 * n)
    return math.sqrt(area / math.pi)


def random_partial_m_2d(params, kind='sufficient'):
    "2d random-target partial thresholds with a^2 and (a - 1)^2 factors"
    kind = check_kind(kind)
    params.check_thetas()
    a = params.a
    if not a > 1:
        raise TheoremDomainError("constraint a > 1 violated")
    c1 = params.c1
    if kind == 'sufficient':
        _check_a_lower(params, a ** 2)
        d = params.c2 - a ** 2 * params.theta2 * c1
        if not d > 0:
            msg = "constraint c2 - a^2 theta2 c1 > 0 violated (value {:.6g})"
            raise TheoremDomainError(msg.format(d))
        scale = params.n / (params.theta1 * (a - 1) ** 2 * c1)
        return scale * math.log(1 + 1 / d)
    e = params.c3 - a ** 2 * params.theta1 * c1
    if not 0 < e < 1:
        msg = "constraint 0 < c3 - a^2 theta1 c1 < 1 violated (value {:.6g})"
        raise TheoremDomainError(msg.format(e))
    scale = params.n / (params.theta2 * (a - 1) ** 2 * c1) - 1
    return scale * math.log(1 / e)
