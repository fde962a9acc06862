"""
Seeding for reproducible, order-independent trials.

Every random draw in sepsim comes from a numpy ``Generator`` over the
counter-based ``Philox`` bit generator. Trial ``k`` of an experiment with
master seed ``s`` uses the key ``sub_seed(s, k)``:

    x = (s + (k + 1) * 0x9E3779B97F4A7C15) mod 2**64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB mod 2**64
    sub_seed = x ^ (x >> 31)

which is the SplitMix64 output for state ``s`` advanced ``k + 1`` steps.
The mixing function is frozen: changing it changes every stored result.
"""

import numpy as np

import sepsim as ss

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x):
    "SplitMix64 finalizer of the 64-bit integer `x`"
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def sub_seed(master_seed, trial_index):
    "64-bit key of trial `trial_index` under `master_seed`"
    if not ss.isint(master_seed) or master_seed < 0:
        raise ValueError("`master_seed` must be a non-negative integer")
    if not ss.isint(trial_index) or trial_index < 0:
        raise ValueError("`trial_index` must be a non-negative integer")
    state = int(master_seed) + (int(trial_index) + 1) * GOLDEN_GAMMA
    return splitmix64(state)


def trial_rng(master_seed, trial_index):
    "Generator for trial `trial_index`; independent of all other trials"
    key = sub_seed(master_seed, trial_index)
    return np.random.Generator(np.random.Philox(key=key))


def as_generator(seed):
    """
    Turn `seed` into a numpy Generator.

    An integer seed maps to ``trial_rng(seed, 0)`` so that a bare seed
    passed to a sampling function gives the same stream as trial 0 of an
    experiment with that master seed. A Generator is returned unchanged.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    if ss.isint(seed):
        return trial_rng(seed, 0)
    raise ValueError("`seed` must be a non-negative integer or a Generator")
