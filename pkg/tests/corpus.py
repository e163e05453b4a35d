"""Seeded random graphs shared by the oracle and acceptance tests."""

import numpy as np

from qnetcap import CutConstraint, Network

BUTTERFLY_EDGES = [
    ("p0", "p2"), ("p0", "p4"), ("p1", "p2"), ("p1", "p5"),
    ("p2", "p3"), ("p3", "p4"), ("p3", "p5"),
]
BUTTERFLY_POINTS = ["p0", "p1", "p2", "p3", "p4", "p5"]
DIAMOND_POINTS = ["a", "p1", "p2", "b"]
DIAMOND_EDGES = [("a", "p1"), ("a", "p2"), ("p1", "b"), ("p2", "b")]


def butterfly(w=1.0):
    return Network.from_weights(BUTTERFLY_POINTS, [(u, v, w) for u, v in BUTTERFLY_EDGES], distillable=True)


def diamond(w=1.0):
    return Network.from_weights(DIAMOND_POINTS, [(u, v, w) for u, v in DIAMOND_EDGES], distillable=True)


def random_network(seed, max_points=10, max_edges=20, wmax=2.0, min_points=4):
    """Connected multigraph: random spanning tree plus extra (possibly parallel) edges."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(min_points, max_points + 1))
    pts = [f"v{i}" for i in range(n)]
    order = rng.permutation(n)
    pairs = []
    for k in range(1, n):
        j = int(rng.integers(0, k))
        pairs.append((int(order[k]), int(order[j])))
    extra = int(rng.integers(0, max_edges - (n - 1) + 1))
    for _ in range(extra):
        u, v = rng.choice(n, size=2, replace=False)
        pairs.append((int(u), int(v)))
    weights = rng.uniform(0.0, wmax, size=len(pairs))
    return Network.from_weights(pts, [(pts[u], pts[v], float(w)) for (u, v), w in zip(pairs, weights)])


def corpus(count=100, **kw):
    return [random_network(seed, **kw) for seed in range(count)]


def constraint_shapes(net, seed):
    """A handful of constraint families over distinct random points of ``net``."""
    rng = np.random.default_rng(10_000 + seed)
    p = [net.points[i] for i in rng.permutation(len(net.points))]
    shapes = [
        CutConstraint({p[0]}, {p[1]}),
        CutConstraint({p[0], p[1]}, {p[2], p[3]}),
        CutConstraint({p[0]}, {p[1], p[2]}),
        CutConstraint({p[0], p[1]}, (), {p[2], p[3]}),
        CutConstraint({p[0]}, (), {p[1], p[2], p[3]}),
    ]
    if len(p) >= 5:
        shapes.append(CutConstraint({p[0]}, {p[1]}, {p[2], p[3], p[4]}))
    return shapes
