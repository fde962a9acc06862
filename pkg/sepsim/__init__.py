# flake8: noqa

# util
from sepsim.util import isint
from sepsim.util import isstring
from sepsim.util import isnumber
from sepsim.util import TheoremDomainError
from sepsim.util import IntegrityError
from sepsim.util import CapacityError
from sepsim.util import ConfigError

# seeding
from sepsim.rng import sub_seed
from sepsim.rng import trial_rng
from sepsim.rng import as_generator

# layouts and sensors
from sepsim.layout import Region
from sepsim.layout import TargetLayout
from sepsim.layout import TargetConfiguration
from sepsim.layout import grid_layout
from sepsim.layout import uniform_layout
from sepsim.layout import poisson_layout
from sepsim.layout import sample_uniform_points
from sepsim.layout import sample_poisson_points
from sepsim.sensor import SensorField
from sepsim.sensor import deploy_uniform_field
from sepsim.sensor import distance
from sepsim.sensor import sense
from sepsim.sensor import observation_vector

# separability
from sepsim.separability import CoverageMap
from sepsim.separability import SeparabilityReport
from sepsim.separability import DecodedConfiguration
from sepsim.separability import coverage_map
from sepsim.separability import analyze
from sepsim.separability import decode_truthful
from sepsim.separability import sandwiched_targets
from sepsim.separability import spacings
from sepsim.separability import adjacent_sums
from sepsim.separability import brute_force_distinguishable
from sepsim.separability import OCCUPIED
from sepsim.separability import EMPTY
from sepsim.separability import UNKNOWN

# scaling laws
from sepsim.scaling import GridParams
from sepsim.scaling import RandomParams
from sepsim.scaling import exp_bounds
from sepsim.scaling import spacing_tail
from sepsim.scaling import min_spacing_prob
from sepsim.scaling import min_spacing_bounds
from sepsim.scaling import bernoulli_partial_bounds
from sepsim.scaling import coupon_all_collected_prob
from sepsim.scaling import coupon_log_terms
from sepsim.scaling import coupon_asymptotic
from sepsim.scaling import grid_radius
from sepsim.scaling import grid_radius_n_plus_one
from sepsim.scaling import grid_radius_feasible
from sepsim.scaling import grid_full_m
from sepsim.scaling import grid_partial_m_sufficient
from sepsim.scaling import grid_partial_m_necessary
from sepsim.scaling import grid_partial_prob_bounds
from sepsim.scaling import random_full_r
from sepsim.scaling import random_full_m
from sepsim.scaling import random_partial_r_sufficient
from sepsim.scaling import random_partial_r_necessary
from sepsim.scaling import random_partial_m_sufficient
from sepsim.scaling import random_partial_m_sufficient_as_printed
from sepsim.scaling import random_partial_m_necessary
from sepsim.scaling import naive_partial_schemes
from sepsim.scaling import grid_radius_2d
from sepsim.scaling import grid_radius_feasible_2d
from sepsim.scaling import grid_full_m_2d
from sepsim.scaling import grid_partial_m_2d
from sepsim.scaling import random_full_2d
from sepsim.scaling import random_partial_r_2d
from sepsim.scaling import random_partial_m_2d

# adversarial
from sepsim.adversary import AdversaryModel
from sepsim.adversary import MajorityVerdicts
from sepsim.adversary import deploy_adversarial_field
from sepsim.adversary import reported_observations
from sepsim.adversary import majority_decode
from sepsim.adversary import majority_margins
from sepsim.adversary import adversary_count_split
from sepsim.adversary import chernoff_success_bound
from sepsim.adversary import adversarial_full_m
from sepsim.adversary import adversarial_partial_m
from sepsim.adversary import adversarial_full_success_bound
from sepsim.adversary import adversarial_partial_success_bound

# scenarios
from sepsim.scenario import Scenario
from sepsim.scenario import grid_full
from sepsim.scenario import grid_partial
from sepsim.scenario import random_full
from sepsim.scenario import random_partial
from sepsim.scenario import adversarial_full
from sepsim.scenario import adversarial_partial
from sepsim.scenario import min_spacing
from sepsim.scenario import coupon
from sepsim.scenario import spacing_tail as spacing_tail_scenario
from sepsim.scenario import SCENARIOS
from sepsim.scenario import scenario_names
from sepsim.scenario import make_scenario

# monte carlo
from sepsim.montecarlo import ExperimentSpec
from sepsim.montecarlo import Estimate
from sepsim.montecarlo import run_trial
from sepsim.montecarlo import estimate
from sepsim.montecarlo import sweep
from sepsim.montecarlo import wilson_interval
from sepsim.montecarlo import load_estimate_csv
from sepsim.montecarlo import load_estimate_json
from sepsim.montecarlo import TRIALS_PHASE
from sepsim.montecarlo import TRIALS_BOUND

# command line
from sepsim.config import RunConfig
from sepsim.config import load_run_config
from sepsim.config import load_instance
from sepsim.plot import plot_sweep
from sepsim.cli import main
from sepsim.cli import cmd_thresholds
from sepsim.cli import cmd_estimate
from sepsim.cli import cmd_sweep
from sepsim.cli import cmd_check

# misc
from sepsim import examples
from sepsim.version import __version__


def test(*args):
    "Run the sepsim unit tests with pytest; returns pytest's exit code"
    import os
    import pytest
    path = os.path.join(os.path.dirname(__file__), 'tests')
    return pytest.main([path] + list(args))
