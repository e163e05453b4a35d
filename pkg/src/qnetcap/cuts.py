"""Cut functionals over constrained cut families.

Two functionals are minimised over the admissible cuts of a network:

* single-edge: the largest edge weight in the cut-set (single-path routing),
* multi-edge: the summed edge weight of the cut-set (multipath routing).

Both have a fast route (bottleneck connectivity, max-flow) and a
brute-force route used as an oracle.  An empty cut-set evaluates to 0.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, ConstraintError
from .maxflow import FlowGraph
from .network import MAX_FREE_POINTS, Cut, cutset, free_points

TOL = 1e-9


class Functional(enum.Enum):
    SINGLE_EDGE = "single_edge_max"
    MULTI_EDGE = "multi_edge_sum"


@dataclass(frozen=True)
class CutValue:
    value: float
    witness: Cut
    functional: Functional


def evaluate(net, cut, functional):
    """Value of ``functional`` on the cut-set of ``cut``."""
    ws = [e.weight for e in cutset(net, cut)]
    if functional is Functional.SINGLE_EDGE:
        return max(ws, default=0.0)
    return float(sum(ws))


def _pick(net, results, tol):
    # smallest value; among values within tol of it, lexicographically smallest side A
    best = min(r.value for r in results)
    near = [r for r in results if r.value <= best + tol]
    return min(near, key=lambda r: r.witness.key(net))


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def _closure(net, seeds, usable):
    """Points reachable from ``seeds`` through edges whose index passes ``usable``."""
    adj = net.adjacency()
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        x = stack.pop()
        for y, k in adj[x]:
            if y not in seen and usable(k):
                seen.add(y)
                stack.append(y)
    return seen


def _single_plain(net, con, tol):
    idx = net.index
    a0 = idx[next(iter(con.must_a))]
    b0 = idx[next(iter(con.must_b))]
    dsu = _DSU(len(net.points))
    for p in con.must_a:
        dsu.union(idx[p], a0)
    for p in con.must_b:
        dsu.union(idx[p], b0)
    order = sorted(range(len(net.edges)), key=lambda k: -net.weights[k])
    value = 0.0
    for k in order:
        e = net.edges[k]
        dsu.union(idx[e.u], idx[e.v])
        if dsu.find(a0) == dsu.find(b0):
            value = net.weights[k]
            break
    # minimal A: everything glued to must_a by edges strictly heavier than the bottleneck
    side_a = _closure(net, con.must_a, lambda k: net.weights[k] > value + tol)
    return CutValue(value, Cut.from_side_a(net, side_a), Functional.SINGLE_EDGE)


def _multi_plain(net, con):
    n = len(net.points)
    s, t = n, n + 1
    g = FlowGraph(n + 2)
    idx = net.index
    for e, w in zip(net.edges, net.weights):
        g.add_arc_pair(idx[e.u], idx[e.v], w, w)
    inf = float("inf")
    for p in con.must_a:
        g.add_arc_pair(s, idx[p], inf, 0.0)
    for p in con.must_b:
        g.add_arc_pair(idx[p], t, inf, 0.0)
    value = g.max_flow(s, t)
    seen = g.reachable(s)
    side_a = [p for p in net.points if seen[idx[p]]]
    return CutValue(value, Cut.from_side_a(net, side_a), Functional.MULTI_EDGE)


def single_edge_bound(net, con, tol=TOL):
    """Minimum over admissible cuts of the heaviest cut-set edge."""
    con.check(net, bound=True)
    return _pick(net, [_single_plain(net, c, tol) for c in con.candidates()], tol)


def multi_edge_bound(net, con, tol=TOL):
    """Minimum over admissible cuts of the summed cut-set weight (undirected min cut)."""
    con.check(net, bound=True)
    return _pick(net, [_multi_plain(net, c) for c in con.candidates()], tol)


def bound(net, con, functional, tol=TOL):
    if functional is Functional.SINGLE_EDGE:
        return single_edge_bound(net, con, tol)
    return multi_edge_bound(net, con, tol)


def brute_force_bound(net, con, functional, tol=TOL, max_free=MAX_FREE_POINTS, chunk=1 << 14):
    """Exhaustive minimum of ``functional`` over every admissible cut."""
    con.check(net)
    if not con.must_a:
        raise ConstraintError("must_a is empty")
    free = free_points(net, con)
    if len(free) > max_free:
        raise CapacityError(
            f"{len(free)} free points exceed the brute-force limit of {max_free}"
        )
    n = len(net.points)
    idx = net.index
    ends = np.array(net.endpoints(), dtype=np.intp).reshape(-1, 2)
    w = np.asarray(net.weights, dtype=float)
    free_idx = np.array([idx[p] for p in free], dtype=np.intp)
    base = np.zeros(n, dtype=bool)
    base[[idx[p] for p in con.must_a]] = True
    need = None
    if con.at_least_one_b is not None:
        need = np.array([idx[p] for p in con.at_least_one_b], dtype=np.intp)

    best_val = np.inf
    best_rows = []
    total = 1 << len(free)
    bits = np.arange(len(free), dtype=np.int64)
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        side = np.repeat(base[None, :], len(masks), axis=0)
        if len(free):
            side[:, free_idx] = (masks[:, None] >> bits[None, :]) & 1 == 1
        ok = side.any(axis=1) & ~side.all(axis=1)
        if need is not None:
            ok &= (~side[:, need]).any(axis=1)
        if not ok.any():
            continue
        side = side[ok]
        if len(w):
            cross = side[:, ends[:, 0]] != side[:, ends[:, 1]]
            contrib = np.where(cross, w[None, :], 0.0)
            if functional is Functional.SINGLE_EDGE:
                vals = contrib.max(axis=1)
            else:
                vals = contrib.sum(axis=1)
        else:
            vals = np.zeros(len(side))
        m = vals.min()
        if m < best_val - tol:
            # earlier near-ties may no longer be within tol of the new minimum
            best_rows = [(v, r) for v, r in best_rows if v <= m + tol]
        best_val = min(best_val, m)
        for r in np.nonzero(vals <= best_val + tol)[0]:
            best_rows.append((float(vals[r]), tuple(bool(x) for x in side[r])))
        best_rows = [(v, r) for v, r in best_rows if v <= best_val + tol]
    if not best_rows:
        raise ConstraintError("no admissible cut")
    # membership tuples compare in point order: False < True
    v, row = min(best_rows, key=lambda vr: vr[1])
    side_a = [p for p, inside in zip(net.points, row) if inside]
    return CutValue(float(best_val), Cut.from_side_a(net, side_a), functional)
