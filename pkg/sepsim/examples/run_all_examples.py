import inspect
import sepsim as ss


def run_all_examples(trials=100):
    "Run the sepsim examples with `trials` Monte Carlo trials each"

    separability = ss.examples.separability
    print_source(separability)
    separability()

    phase_transition = ss.examples.phase_transition
    print_source(phase_transition)
    phase_transition(trials=trials)

    adversarial = ss.examples.adversarial
    print_source(adversarial)
    adversarial(trials=trials)

    bounds = ss.examples.bounds
    print_source(bounds)
    bounds(trials=trials)


def print_source(func):
    print('-' * 70)
    print('\n{}\n'.format(func.__name__.upper()))
    lines = inspect.getsourcelines(func)
    print("".join(lines[0]))
