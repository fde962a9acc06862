import sepsim as ss
from sepsim import testing


def separability():
    "Identifiability and decoding on two hand-made instances"

    layout, field = testing.fig1_instance()
    print(ss.analyze(layout, field))
    cmap = ss.coverage_map(layout, field)
    config = ss.TargetConfiguration([True, False, True])
    readings = ss.observation_vector(field, layout, config)
    print(ss.decode_truthful(readings, cmap))

    # two sensors, three targets: configurations 101 and 010 read the same
    layout, field = testing.chain_instance()
    print('distinguishable:', ss.brute_force_distinguishable(layout, field))
