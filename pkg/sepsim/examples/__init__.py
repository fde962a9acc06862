# flake8: noqa

from sepsim.examples.run_all_examples import run_all_examples
from sepsim.examples.separability import separability
from sepsim.examples.phase_transition import phase_transition
from sepsim.examples.adversarial import adversarial
from sepsim.examples.bounds import bounds
