import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

# fixed ids and no timestamp so equal inputs give byte-identical files
SVG_RC = {'svg.hashsalt': 'sepsim',
          'svg.fonttype': 'none',
          'path.simplify': False}


def plot_sweep(est, path, thresholds=None, title=None):
    """
    Save an SVG of a sweep: estimate vs axis value with its Wilson band.

    Parameters
    ----------
    est : sepsim.Estimate
        Rows of a sweep; param labels are 'axis=value'.
    path : str
        Output file name.
    thresholds : list of (label, value), optional
        Drawn as vertical dashed markers.
    title : str, optional
        Figure title; the axis name by default.

    """
    x = est.axis_values()
    order = x.argsort(kind='stable')
    x = x[order]
    y = est.estimate[order]
    lo = est.ci_low[order]
    hi = est.ci_high[order]
    axis = est.axis_name()
    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.fill_between(x, lo, hi, color='tab:blue', alpha=0.25, linewidth=0,
                        label='95% CI')
        ax.plot(x, y, color='tab:blue', marker='o', label='estimate')
        if thresholds:
            for label, value in thresholds:
                ax.axvline(value, color='tab:red', linestyle='--',
                           linewidth=1)
                ax.annotate(label, (value, 1.02), color='tab:red',
                            ha='center', fontsize=8)
        ax.set_xlabel(axis)
        ax.set_ylabel('success probability')
        ax.set_ylim(-0.02, 1.08)
        ax.set_title(axis if title is None else title)
        ax.legend(loc='center right')
        fig.savefig(path, format='svg', metadata={'Date': None})
        plt.close(fig)
