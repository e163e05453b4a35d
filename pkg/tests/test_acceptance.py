"""Exit criteria.  Each test carries an ``acceptance`` marker; the session
summary prints one PASS/FAIL line per criterion."""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from corpus import butterfly, constraint_shapes
from qnetcap import (
    ChannelModel,
    CutConstraint,
    EndpointSpec,
    Functional,
    Scenario,
    ScenarioKind,
    brute_force_bound,
    build_region,
    concurrent_flow,
    max_flow_rate,
    max_total_flow,
    multi_edge_bound,
    single_edge_bound,
    weight,
    widest_path_rate,
)
from test_document import BUTTERFLY

TAU = 1e-9
TAU_LP = 1e-7


def pick(net, seed, k):
    rng = np.random.default_rng(20_000 + seed)
    return [net.points[i] for i in rng.permutation(len(net.points))[:k]]


def values(report):
    return {c.subset: c.bound for c in report.constraints}


@pytest.mark.acceptance(1, "PLOB pure-loss weight")
def test_plob():
    assert weight(ChannelModel.pure_loss(0.5)) == 1.0
    assert abs(weight(ChannelModel.pure_loss(0.9)) + math.log2(0.1)) <= 1e-12


@pytest.mark.acceptance(2, "cut solvers match brute force on 100 random graphs (< 10 s)")
def test_oracle_equivalence(random_corpus):
    t0 = time.perf_counter()
    checked = 0
    for seed, net in enumerate(random_corpus):
        assert len(net.points) <= 10 and len(net.edges) <= 20
        for con in constraint_shapes(net, seed):
            for f, fast in ((Functional.SINGLE_EDGE, single_edge_bound), (Functional.MULTI_EDGE, multi_edge_bound)):
                got = fast(net, con).value
                ref = brute_force_bound(net, con, f).value
                assert abs(got - ref) <= TAU, (seed, con, f, got, ref)
                checked += 1
    elapsed = time.perf_counter() - t0
    assert checked >= 1000
    assert elapsed < 10.0, f"took {elapsed:.1f} s"


@pytest.mark.acceptance(3, "widest path = single-edge bound, max flow = multi-edge bound (< 10 s)")
def test_duality(random_corpus):
    t0 = time.perf_counter()
    for seed, net in enumerate(random_corpus):
        a, b = pick(net, seed, 2)
        con = CutConstraint({a}, {b})
        assert abs(widest_path_rate(net, a, b)[0] - single_edge_bound(net, con).value) <= TAU
        sol = max_flow_rate(net, a, b)
        sol.check(net)
        assert abs(sol.rates[0] - multi_edge_bound(net, con).value) <= TAU
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"took {elapsed:.1f} s"


BUTTERFLY_GOLDENS = [
    (ScenarioKind.UNICAST_SINGLE_PATH, (["p0", "p1"], ["p5", "p4"]), {(0,): 1.0, (1,): 1.0, (0, 1): 1.0}, None),
    (ScenarioKind.UNICAST_MULTIPATH, (["p0", "p1"], ["p5", "p4"]), {(0,): 2.0, (1,): 2.0, (0, 1): 3.0}, None),
    (ScenarioKind.MULTICAST, (["p0"], ["p4", "p5"]), {(0,): 2.0, (1,): 2.0, (0, 1): 2.0}, 2.0),
    (ScenarioKind.MULTIPLE_MULTICAST, (["p0", "p1"], ["p4", "p5"]), {(0,): 2.0, (1,): 2.0, (0, 1): 2.0}, None),
]


@pytest.mark.acceptance(4, "butterfly regions (unit weights) match brute-force-verified goldens")
@pytest.mark.parametrize("kind,ends,golden,cap", BUTTERFLY_GOLDENS, ids=lambda x: getattr(x, "value", None))
def test_butterfly_fixtures(kind, ends, golden, cap):
    net = butterfly()
    rep = build_region(net, Scenario(kind, EndpointSpec(*ends)))
    for c in rep.constraints:
        ref = brute_force_bound(net, c.cut_constraint, rep.functional)
        assert abs(ref.value - golden[c.subset]) <= TAU
        assert abs(c.bound - golden[c.subset]) <= TAU
    assert set(values(rep)) == set(golden)
    if cap is None:
        assert rep.scalar_cap_bound is None
    else:
        assert abs(rep.scalar_cap_bound - cap) <= TAU


@pytest.mark.acceptance(5, "theorem ordering, subset/weight monotonicity, scaling covariance")
def test_ordering_properties(random_corpus):
    violations = []
    for seed, net in enumerate(random_corpus):
        a1, b1, a2, b2 = pick(net, seed, 4)
        spec = EndpointSpec([a1, a2], [b1, b2])
        single = values(build_region(net, Scenario(ScenarioKind.UNICAST_SINGLE_PATH, spec)))
        multi = values(build_region(net, Scenario(ScenarioKind.UNICAST_MULTIPATH, spec)))
        for S in single:
            if single[S] > multi[S] + TAU:
                violations.append((seed, "thm1>thm2", S))
        for v in (single, multi):
            for S in v:
                for T in v:
                    if set(S) <= set(T) and v[S] > v[T] + TAU:
                        violations.append((seed, "subset", S, T))
        rng = np.random.default_rng(30_000 + seed)
        w = np.array(net.weights)
        w[rng.integers(len(w))] += rng.uniform(0, 1)
        heavier = net.with_weights(w.tolist())
        lam = float(rng.uniform(0.1, 10))
        scaled = net.scaled(lam)
        for kind, base in ((ScenarioKind.UNICAST_SINGLE_PATH, single), (ScenarioKind.UNICAST_MULTIPATH, multi)):
            up = values(build_region(heavier, Scenario(kind, spec)))
            sc = values(build_region(scaled, Scenario(kind, spec)))
            for S in base:
                if up[S] < base[S] - TAU:
                    violations.append((seed, "weight", kind, S))
                if abs(sc[S] - lam * base[S]) > TAU * max(1.0, lam * base[S]):
                    violations.append((seed, "scaling", kind, S))
    assert violations == []


@pytest.mark.acceptance(6, "weak duality of concurrent flows; Hu two-commodity theorem (< 30 s)")
def test_weak_duality_and_hu(random_corpus):
    t0 = time.perf_counter()
    for seed, net in enumerate(random_corpus):
        a1, b1, a2, b2 = pick(net, seed, 4)
        spec = EndpointSpec([a1, a2], [b1, b2])
        rep = build_region(net, Scenario(ScenarioKind.UNICAST_MULTIPATH, spec))
        sol = concurrent_flow(net, [(a1, b1), (a2, b2)])
        sol.check(net, TAU_LP)
        assert rep.satisfied_by(sol.rates, TAU_LP) == []
        mc = build_region(net, Scenario(ScenarioKind.MULTICAST, EndpointSpec([a1], [b1, b2])), lower=True)
        assert mc.satisfied_by(mc.lower_bounds[0].rates, TAU_LP) == []

        total = max_total_flow(net, [(a1, b1), (a2, b2)])
        total.check(net, TAU_LP)
        both = min(
            multi_edge_bound(net, CutConstraint({a1, a2}, {b1, b2})).value,
            multi_edge_bound(net, CutConstraint({a1, b2}, {b1, a2})).value,
        )
        assert abs(sum(total.rates) - both) <= TAU_LP, (seed, sum(total.rates), both)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, f"took {elapsed:.1f} s"


def _region(*extra):
    proc = subprocess.run(
        [sys.executable, "-m", "qnetcap", "region", str(BUTTERFLY), *extra],
        capture_output=True,
        check=True,
    )
    return proc.stdout


@pytest.mark.acceptance(7, "region report is byte-identical across runs and thread counts")
def test_determinism():
    first = _region()
    assert first == _region()
    assert first == _region("--jobs", "4")
    assert b'"bound": 3.0' in first
