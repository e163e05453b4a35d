"""Figures for region reports, written straight to files."""

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure


def _clip(poly, a, b, c):
    # keep the part of poly with a*x + b*y <= c
    out = []
    n = len(poly)
    for k in range(n):
        p, q = poly[k], poly[(k + 1) % n]
        fp = a * p[0] + b * p[1] - c
        fq = a * q[0] + b * q[1] - c
        if fp <= 0:
            out.append(p)
        if fp * fq < 0:
            s = fp / (fp - fq)
            out.append((p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])))
    return out


def region_polygon(report):
    """Vertices of the two-rate outer region intersected with R >= 0."""
    big = 1.0 + 2.0 * max((c.bound for c in report.constraints), default=1.0)
    poly = [(0.0, 0.0), (big, 0.0), (big, big), (0.0, big)]
    for c in report.constraints:
        a = 1.0 if 0 in c.subset else 0.0
        b = 1.0 if 1 in c.subset else 0.0
        poly = _clip(poly, a, b, c.bound)
        if not poly:
            break
    return poly


def _draw_plane(ax, report):
    poly = region_polygon(report)
    if poly:
        xs, ys = zip(*poly)
        ax.fill(xs, ys, alpha=0.25, color="tab:blue", label="outer bound")
        ax.plot(list(xs) + [xs[0]], list(ys) + [ys[0]], color="tab:blue", lw=1.5)
    for lb in report.lower_bounds:
        ax.plot(*lb.rates, "o", color="tab:red", label=lb.method.replace("_", " "))
    ax.set_xlabel(f"{report.rate_labels[0]} (bits/use)")
    ax.set_ylabel(f"{report.rate_labels[1]} (bits/use)")
    top = 1.15 * max([1e-12] + [x for v in poly for x in v])
    ax.set_xlim(0, top)
    ax.set_ylim(0, top)
    ax.set_aspect("equal", adjustable="box")
    ax.legend(loc="upper right", fontsize=8, frameon=False)


def _draw_bars(ax, report):
    labels = ["+".join(report.rate_labels[i] for i in c.subset) for c in report.constraints]
    vals = [c.bound for c in report.constraints]
    ys = range(len(vals))
    ax.barh(list(ys), vals, color="tab:blue", alpha=0.6)
    ax.set_yticks(list(ys))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("bound (bits/use)")


def render_region(report, path, title=None):
    """Write a figure of ``report`` to ``path``; format follows the file suffix.

    Two-rate regions are drawn in the rate plane, anything else as one bar
    per inequality.
    """
    fig = Figure(figsize=(5.0, 4.0))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    if len(report.rate_labels) == 2:
        _draw_plane(ax, report)
    else:
        _draw_bars(ax, report)
    ax.set_title(title or report.scenario.name or report.scenario.kind.value, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)
    return path
