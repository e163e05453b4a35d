"""Outer bounds on rate regions for the four end-point configurations.

Each configuration produces one inequality ``sum_{i in S} R_i <= v(S)`` per
nonempty subset S of rate variables, where ``v(S)`` is a cut functional
minimised over the cut family attached to S:

=====================  ============  ===========================================
scenario               functional    cut family for subset S
=====================  ============  ===========================================
unicast, single path   single-edge   {a_i : i in S} | {b_i : i in S}
unicast, multipath     multi-edge    {a_i : i in S} | {b_i : i in S}
multicast              multi-edge    a | {b_i : i in S}
multiple multicast     multi-edge    {a_i : i in S} in A, some receiver in B
=====================  ============  ===========================================
"""

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from .cuts import TOL, Functional, bound, evaluate
from .errors import CapacityError, SolverError, StructuralError
from .flows import concurrent_flow, time_shared_widest_paths, widest_path_rate
from .lp import LPStatus, maximize
from .network import Cut, CutConstraint, EndpointSpec, validate

MAX_RATES = 16


class ScenarioKind(enum.Enum):
    UNICAST_SINGLE_PATH = "unicast_single_path"
    UNICAST_MULTIPATH = "unicast_multipath"
    MULTICAST = "multicast"
    MULTIPLE_MULTICAST = "multiple_multicast"

    @property
    def functional(self):
        if self is ScenarioKind.UNICAST_SINGLE_PATH:
            return Functional.SINGLE_EDGE
        return Functional.MULTI_EDGE

    @property
    def unicast(self):
        return self in (ScenarioKind.UNICAST_SINGLE_PATH, ScenarioKind.UNICAST_MULTIPATH)


@dataclass(frozen=True)
class Scenario:
    kind: ScenarioKind
    spec: EndpointSpec
    name: str = ""

    def __post_init__(self):
        if not isinstance(self.kind, ScenarioKind):
            object.__setattr__(self, "kind", ScenarioKind(self.kind))

    def problems(self, net):
        out = validate(net, self.spec)
        s, r = self.spec.senders, self.spec.receivers
        if self.kind.unicast:
            if self.spec.pairs is None and len(s) != len(r):
                out.append(f"unicast needs equal sender/receiver counts, got {len(s)} and {len(r)}")
            if not self.spec.unicast_pairs():
                out.append("unicast needs at least one pair")
        elif self.kind is ScenarioKind.MULTICAST:
            if len(s) != 1:
                out.append(f"multicast needs exactly one sender, got {len(s)}")
            if not r:
                out.append("multicast needs at least one receiver")
        else:
            if not s or not r:
                out.append("multiple multicast needs at least one sender and one receiver")
        return out

    def check(self, net):
        problems = self.problems(net)
        if problems:
            raise StructuralError("; ".join(problems))


@dataclass(frozen=True)
class RateConstraint:
    subset: tuple  # 0-based rate indices
    bound: float
    witness: Cut
    cut_constraint: CutConstraint


@dataclass(frozen=True)
class LowerBound:
    method: str
    rates: tuple


@dataclass
class RegionReport:
    scenario: Scenario
    functional: Functional
    rate_labels: tuple
    constraints: list
    measure: str = "ree"
    scalar_cap_bound: float = None
    lower_bounds: list = field(default_factory=list)

    def value(self, subset):
        subset = tuple(sorted(subset))
        for c in self.constraints:
            if c.subset == subset:
                return c.bound
        raise KeyError(subset)

    def satisfied_by(self, rates, tol=TOL):
        """Constraints violated by ``rates`` beyond ``tol`` (empty list when feasible)."""
        return [c for c in self.constraints if sum(rates[i] for i in c.subset) > c.bound + tol]


def rate_families(scenario, pairwise=False):
    """Rate labels and a function mapping a subset to its cut constraint."""
    spec = scenario.spec
    kind = scenario.kind
    if kind.unicast:
        pairs = spec.unicast_pairs()
        labels = tuple(f"R{i + 1}" for i in range(len(pairs)))

        def family(S):
            return CutConstraint({pairs[i][0] for i in S}, {pairs[i][1] for i in S})

    elif kind is ScenarioKind.MULTICAST:
        a = spec.senders[0]
        labels = tuple(f"R{i + 1}" for i in range(len(spec.receivers)))

        def family(S):
            return CutConstraint({a}, {spec.receivers[i] for i in S})

    elif pairwise:
        pairs = [(i, j) for i in range(len(spec.senders)) for j in range(len(spec.receivers))]
        labels = tuple(f"R{i + 1},{j + 1}" for i, j in pairs)

        def family(S):
            return CutConstraint(
                {spec.senders[pairs[k][0]] for k in S}, {spec.receivers[pairs[k][1]] for k in S}
            )

    else:
        labels = tuple(f"R{i + 1}" for i in range(len(spec.senders)))

        def family(S):
            return CutConstraint({spec.senders[i] for i in S}, (), spec.receivers)

    return labels, family


def subsets(m):
    """Nonempty subsets of range(m), by size then lexicographically."""
    for r in range(1, m + 1):
        yield from itertools.combinations(range(m), r)


def build_region(net, scenario, tol=TOL, jobs=1, pairwise=False, prune=False, lower=False):
    """Evaluate every inequality of the outer region for ``scenario`` on ``net``."""
    scenario.check(net)
    functional = scenario.kind.functional
    labels, family = rate_families(scenario, pairwise)
    if len(labels) > MAX_RATES:
        raise CapacityError(f"{len(labels)} rate variables exceed the limit of {MAX_RATES}")
    subs = list(subsets(len(labels)))

    def one(S):
        con = family(S)
        cv = bound(net, con, functional, tol)
        _recheck(net, con, cv, tol)
        return RateConstraint(S, cv.value, cv.witness, con)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            constraints = list(pool.map(one, subs))
    else:
        constraints = [one(S) for S in subs]

    report = RegionReport(
        scenario=scenario,
        functional=functional,
        rate_labels=labels,
        constraints=constraints,
        measure="capacity" if net.distillable else "ree",
    )
    if scenario.kind is ScenarioKind.MULTICAST:
        report.scalar_cap_bound = min(c.bound for c in constraints if len(c.subset) == 1)
    if prune:
        report = prune_redundant(report, tol)
    if lower:
        attach_lower_bounds(net, report, pairwise)
    return report


def _recheck(net, con, cv, tol):
    if not con.admits(cv.witness):
        raise SolverError(f"witness {sorted(cv.witness.side_a)} is not admissible")
    got = evaluate(net, cv.witness, cv.functional)
    if abs(got - cv.value) > tol * max(1.0, abs(cv.value)):
        raise SolverError(f"witness evaluates to {got}, bound says {cv.value}")


def unicast_region_singlepath(net, spec, **kw):
    return build_region(net, Scenario(ScenarioKind.UNICAST_SINGLE_PATH, spec), **kw)


def unicast_region_multipath(net, spec, **kw):
    return build_region(net, Scenario(ScenarioKind.UNICAST_MULTIPATH, spec), **kw)


def multicast_region(net, spec, **kw):
    return build_region(net, Scenario(ScenarioKind.MULTICAST, spec), **kw)


def multiple_multicast_region(net, spec, pairwise=False, **kw):
    return build_region(net, Scenario(ScenarioKind.MULTIPLE_MULTICAST, spec), pairwise=pairwise, **kw)


def prune_redundant(report, tol=TOL):
    """Drop inequalities implied by the remaining ones (and R >= 0)."""
    m = len(report.rate_labels)
    kept = list(report.constraints)
    for c in list(report.constraints):
        others = [o for o in kept if o is not c]
        if not others:
            continue
        obj = [1.0 if i in c.subset else 0.0 for i in range(m)]
        A = [[1.0 if i in o.subset else 0.0 for i in range(m)] for o in others]
        b = [o.bound for o in others]
        res = maximize(obj, A, b)
        if res.status is LPStatus.OPTIMAL and res.value <= c.bound + tol:
            kept = others
    return replace(report, constraints=kept)


def attach_lower_bounds(net, report, pairwise=False):
    """Append achievable rate vectors from classical routing to ``report``."""
    sc = report.scenario
    spec = sc.spec
    if sc.kind is ScenarioKind.UNICAST_SINGLE_PATH:
        pairs = spec.unicast_pairs()
        if len(pairs) == 1:
            rate, _ = widest_path_rate(net, *pairs[0])
            report.lower_bounds.append(LowerBound("widest_path", (rate,)))
        else:
            rates = time_shared_widest_paths(net, pairs)
            report.lower_bounds.append(LowerBound("time_shared_widest_paths", rates))
        return report
    if sc.kind is ScenarioKind.UNICAST_MULTIPATH:
        sol = concurrent_flow(net, spec.unicast_pairs())
        rates = sol.rates
    elif sc.kind is ScenarioKind.MULTICAST:
        a = spec.senders[0]
        sol = concurrent_flow(net, [(a, b) for b in spec.receivers])
        rates = sol.rates
    else:
        commodities = [(a, b) for a in spec.senders for b in spec.receivers]
        sol = concurrent_flow(net, commodities)
        if pairwise:
            rates = sol.rates
        else:
            rates = tuple(sol.throughput for _ in spec.senders)
    report.lower_bounds.append(LowerBound("concurrent_flow", tuple(rates)))
    return report
