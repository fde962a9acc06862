import sepsim as ss
from sepsim import testing


def test_examples():
    with testing.HiddenPrints():
        ss.examples.run_all_examples(trials=5)
