import sepsim as ss


def bounds(trials=1000, seed=0):
    "Closed-form probabilities next to their Monte Carlo estimates"
    scenarios = [ss.min_spacing(100),
                 ss.coupon(50, c=2.0),
                 ss.spacing_tail_scenario(50, v1=0.005, v2=0.005)]
    for scenario in scenarios:
        spec = ss.ExperimentSpec(scenario, trials=trials, seed=seed)
        est = ss.estimate(spec)
        fmt = '{:<14} exact {:.4f}  estimate {:.4f} [{:.4f}, {:.4f}]'
        print(fmt.format(scenario.name, scenario.closed_form(),
                         est.estimate[0], est.ci_low[0], est.ci_high[0]))
