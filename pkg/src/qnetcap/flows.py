"""Achievable-rate lower bounds from classical routing.

Single-path unicast is served by widest paths, multipath by the arc-based
multicommodity flow program solved with :func:`qnetcap.lp.maximize`.
Each undirected edge contributes two opposing arcs that share its weight.
"""

import enum
import heapq
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintError
from .lp import CERT_TOL, LPStatus, maximize


class Objective(enum.Enum):
    MAX_SINGLE_FLOW = "max_single_flow"
    MAX_CONCURRENT = "max_concurrent_throughput"
    MAX_TOTAL = "max_total_flow"


class FlowStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Commodity:
    source: str
    sink: str
    demand: float = 1.0


@dataclass
class FlowSolution:
    rates: tuple
    arc_flows: np.ndarray  # commodity x arc; arc 2k is u->v of edge k, 2k+1 is v->u
    status: FlowStatus
    commodities: tuple
    throughput: float = None

    def check(self, net, tol=CERT_TOL):
        """Raise AssertionError unless conservation and edge coupling hold within ``tol``."""
        w = np.asarray(net.weights)
        use = self.arc_flows[:, 0::2] + self.arc_flows[:, 1::2]
        over = use.sum(axis=0) - w
        assert (over <= tol).all(), f"edge coupling violated by {over.max():.3g}"
        assert (self.arc_flows >= -tol).all(), "negative arc flow"
        for k, com in enumerate(self.commodities):
            net_out = _net_outflow(net, self.arc_flows[k])
            for p in net.points:
                want = 0.0
                if p == com.source:
                    want = self.rates[k]
                elif p == com.sink:
                    want = -self.rates[k]
                assert abs(net_out[p] - want) <= tol, f"conservation broken at {p} for commodity {k}"


def _net_outflow(net, flows):
    out = {p: 0.0 for p in net.points}
    for k, e in enumerate(net.edges):
        f = flows[2 * k] - flows[2 * k + 1]
        out[e.u] += f
        out[e.v] -= f
    return out


def _check_points(net, *names):
    for p in names:
        if p not in net.index:
            raise ConstraintError(f"unknown point {p}")


def widest_path_rate(net, a, b):
    """Best bottleneck over a-b paths, with one path attaining it.

    Returns ``(0.0, [])`` when ``b`` cannot be reached from ``a``.
    """
    _check_points(net, a, b)
    if a == b:
        raise ConstraintError("source and sink coincide")
    adj = net.adjacency()
    width = {a: float("inf")}
    prev = {}
    done = set()
    heap = [(-float("inf"), net.index[a], a)]
    while heap:
        negw, _, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        if x == b:
            break
        for y, k in adj[x]:
            cand = min(-negw, net.weights[k])
            if y not in done and cand > width.get(y, -1.0):
                width[y] = cand
                prev[y] = x
                heapq.heappush(heap, (-cand, net.index[y], y))
    if b not in done:
        return 0.0, []
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return width[b], path[::-1]


def _solve(net, commodities, objective):
    commodities = tuple(c if isinstance(c, Commodity) else Commodity(*c) for c in commodities)
    if not commodities:
        raise ConstraintError("need at least one commodity")
    for c in commodities:
        _check_points(net, c.source, c.sink)
        if c.source == c.sink:
            raise ConstraintError(f"degenerate commodity {c.source}->{c.sink}")
        if not c.demand > 0:
            raise ConstraintError(f"demand must be positive, got {c.demand}")
    K = len(commodities)
    E = len(net.edges)
    n_arc = 2 * E
    n_flow = K * n_arc
    n_rate = 1 if objective is Objective.MAX_CONCURRENT else K
    nv = n_flow + n_rate

    c = np.zeros(nv)
    c[n_flow:] = 1.0

    ends = net.endpoints()
    npts = len(net.points)
    A_eq = []
    for k, com in enumerate(commodities):
        src, snk = net.index[com.source], net.index[com.sink]
        rows = np.zeros((npts, nv))
        for j, (u, v) in enumerate(ends):
            base = k * n_arc + 2 * j
            rows[u, base] += 1.0
            rows[v, base] -= 1.0
            rows[v, base + 1] += 1.0
            rows[u, base + 1] -= 1.0
        if objective is Objective.MAX_CONCURRENT:
            rows[src, n_flow] = -com.demand
        else:
            rows[src, n_flow + k] = -1.0
        # the sink row is implied by the others
        A_eq.append(np.delete(rows, snk, axis=0))
    A_eq = np.vstack(A_eq)
    b_eq = np.zeros(len(A_eq))

    A_ub = np.zeros((E, nv))
    for k in range(K):
        for j in range(E):
            A_ub[j, k * n_arc + 2 * j] = 1.0
            A_ub[j, k * n_arc + 2 * j + 1] = 1.0
    b_ub = np.asarray(net.weights, dtype=float)

    res = maximize(c, A_ub, b_ub, A_eq, b_eq)
    if res.status is not LPStatus.OPTIMAL:
        empty = np.zeros((K, n_arc))
        return FlowSolution(tuple([0.0] * K), empty, FlowStatus.INFEASIBLE, commodities)
    flows = res.x[:n_flow].reshape(K, n_arc)
    if objective is Objective.MAX_CONCURRENT:
        t = float(res.x[n_flow])
        rates = tuple(t * com.demand for com in commodities)
    else:
        t = None
        rates = tuple(float(r) for r in res.x[n_flow:])
    return FlowSolution(rates, flows, FlowStatus.OPTIMAL, commodities, t)


def max_flow_rate(net, a, b):
    """Single-commodity maximum a->b flow, solved as a linear program."""
    return _solve(net, [Commodity(a, b)], Objective.MAX_SINGLE_FLOW)


def concurrent_flow(net, commodities):
    """Largest t such that every commodity ships ``t * demand`` simultaneously.

    ``commodities`` holds :class:`Commodity` objects or ``(source, sink[, demand])`` tuples.
    """
    return _solve(net, commodities, Objective.MAX_CONCURRENT)


def max_total_flow(net, commodities):
    """Largest summed rate of simultaneous commodities (no fairness constraint)."""
    return _solve(net, commodities, Objective.MAX_TOTAL)


def time_shared_widest_paths(net, pairs):
    """Rates achieved by cycling through the pairs, one widest path per network use."""
    widths = [widest_path_rate(net, a, b)[0] for a, b in pairs]
    return tuple(w / len(pairs) for w in widths)
