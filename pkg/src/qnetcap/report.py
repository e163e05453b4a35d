"""Report documents and delimited plot-data rows."""

import csv
import io
import json

from . import __version__
from .cuts import TOL, Functional, evaluate
from .network import Cut

MULTICAST_NOTE = (
    "a single shared conference key can be derived from the per-receiver keys, "
    "so the conference key rate is at least the multi-message key rate"
)


def fmt(x):
    """Round to 12 significant digits; JSON then prints the shortest repr."""
    return float(f"{x:.12g}")


def subset_label(report, subset):
    return "+".join(report.rate_labels[i] for i in subset)


def scenario_dict(report, net):
    rows = []
    for c in report.constraints:
        rows.append(
            {
                "subset": [i + 1 for i in c.subset],
                "rates": subset_label(report, c.subset),
                "bound": fmt(c.bound),
                "witness_side_a": c.witness.sorted_a(net),
                "functional": report.functional.value,
            }
        )
    d = {
        "name": report.scenario.name,
        "kind": report.scenario.kind.value,
        "functional": report.functional.value,
        "measure": report.measure,
        "rate_labels": list(report.rate_labels),
        "rows": rows,
    }
    if report.scalar_cap_bound is not None:
        d["scalar_capacity_bound"] = fmt(report.scalar_cap_bound)
        d["note"] = MULTICAST_NOTE
    if report.lower_bounds:
        d["lower_bounds"] = [
            {"method": lb.method, "rates": [fmt(r) for r in lb.rates]} for lb in report.lower_bounds
        ]
    return d


def report_document(reports, net, tol=TOL):
    return {
        "tool": "qnetcap",
        "version": __version__,
        "tolerance": tol,
        "scenarios": [scenario_dict(r, net) for r in reports],
    }


def dumps_report(reports, net, tol=TOL):
    return json.dumps(report_document(reports, net, tol), indent=2, ensure_ascii=False) + "\n"


def verify_report(doc, net, tol=None):
    """Re-evaluate every witness in a parsed report document.

    Returns a list of ``(scenario, rates, reported, recomputed)`` for rows
    whose witness does not reproduce the bound within the tolerance.
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    tol = doc.get("tolerance", TOL) if tol is None else tol
    bad = []
    for sc in doc["scenarios"]:
        for row in sc["rows"]:
            cut = Cut.from_side_a(net, row["witness_side_a"])
            got = evaluate(net, cut, Functional(row["functional"]))
            if abs(got - row["bound"]) > tol * max(1.0, abs(got)):
                bad.append((sc["name"], row["rates"], row["bound"], got))
    return bad


PLOT_COLUMNS = ("scenario", "kind", "subset", "rates", "bound", "functional", "witness_side_a")


def plot_rows(reports, net):
    for r in reports:
        for c in r.constraints:
            yield (
                r.scenario.name,
                r.scenario.kind.value,
                " ".join(str(i + 1) for i in c.subset),
                subset_label(r, c.subset),
                repr(fmt(c.bound)),
                r.functional.value,
                " ".join(c.witness.sorted_a(net)),
            )


def plot_data(reports, net, delimiter="\t"):
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    w.writerow(PLOT_COLUMNS)
    w.writerows(plot_rows(reports, net))
    return buf.getvalue()
