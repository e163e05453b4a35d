"""Network data model: points, weighted undirected edges, cuts and endpoint sets."""

from dataclasses import dataclass, field

from .channels import ChannelModel
from .errors import CapacityError, ConstraintError, StructuralError

# Brute-force enumeration cap on unconstrained points (2**22 cut scans).
MAX_FREE_POINTS = 22


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    model: ChannelModel

    @property
    def weight(self):
        return self.model.weight

    def __str__(self):
        return f"{self.u}-{self.v}"


def structural_problems(points, edges):
    """List every structural defect of a raw point list and ``(u, v)`` pairs."""
    problems = []
    seen = set()
    for p in points:
        if p in seen:
            problems.append(f"duplicate point {p}")
        seen.add(p)
    for i, (u, v) in enumerate(edges):
        for end in (u, v):
            if end not in seen:
                problems.append(f"unknown point {end} in edge {i} ({u}-{v})")
        if u == v:
            problems.append(f"self-loop at {u} in edge {i}")
    return problems


class Network:
    """Undirected multigraph with one channel per edge.

    Parallel edges are kept and counted separately.  The network is not
    meant to be mutated after construction.
    """

    def __init__(self, points, edges):
        self.points = tuple(points)
        self.edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        if not self.points:
            raise StructuralError("network has no points")
        problems = structural_problems(self.points, [(e.u, e.v) for e in self.edges])
        if problems:
            raise StructuralError("; ".join(problems))
        self.index = {p: i for i, p in enumerate(self.points)}
        self.weights = tuple(e.weight for e in self.edges)

    @classmethod
    def from_weights(cls, points, weighted_edges, distillable=False):
        """Build a network from ``(u, v, w)`` triples using custom channels."""
        edges = [Edge(u, v, ChannelModel.custom(w, distillable)) for u, v, w in weighted_edges]
        return cls(points, edges)

    def __repr__(self):
        return f"Network({len(self.points)} points, {len(self.edges)} edges)"

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return self.points == other.points and self.edges == other.edges

    def __hash__(self):
        return hash((self.points, self.edges))

    @property
    def distillable(self):
        return all(e.model.distillable for e in self.edges)

    def endpoints(self):
        """Edge endpoints as index pairs, in declaration order."""
        return [(self.index[e.u], self.index[e.v]) for e in self.edges]

    def with_weights(self, weights, distillable=None):
        """Copy of the network with every edge replaced by a custom channel of the given weight."""
        edges = []
        for e, w in zip(self.edges, weights):
            d = e.model.distillable if distillable is None else distillable
            edges.append(Edge(e.u, e.v, ChannelModel.custom(w, d)))
        return Network(self.points, edges)

    def scaled(self, factor):
        return self.with_weights([w * factor for w in self.weights])

    def adjacency(self):
        """Map point -> list of (neighbour, edge index)."""
        adj = {p: [] for p in self.points}
        for i, e in enumerate(self.edges):
            adj[e.u].append((e.v, i))
            adj[e.v].append((e.u, i))
        return adj


@dataclass(frozen=True)
class Cut:
    """Bipartition (A, B) of the points of a network."""

    side_a: frozenset
    side_b: frozenset

    def __init__(self, side_a, side_b):
        object.__setattr__(self, "side_a", frozenset(side_a))
        object.__setattr__(self, "side_b", frozenset(side_b))

    @classmethod
    def from_side_a(cls, net, side_a):
        side_a = frozenset(side_a)
        return cls(side_a, [p for p in net.points if p not in side_a])

    def swapped(self):
        return Cut(self.side_b, self.side_a)

    def check(self, net):
        a, b = self.side_a, self.side_b
        if not a or not b:
            raise StructuralError("both sides of a cut must be nonempty")
        if a & b:
            raise StructuralError(f"cut sides overlap at {sorted(a & b)}")
        pts = set(net.points)
        if a | b != pts:
            missing = sorted(pts - (a | b))
            extra = sorted((a | b) - pts)
            raise StructuralError(f"cut is not a bipartition (missing {missing}, unknown {extra})")

    def sorted_a(self, net):
        return [p for p in net.points if p in self.side_a]

    def key(self, net):
        """Membership vector of side A in point order; lexicographic order ranks witnesses."""
        return tuple(p in self.side_a for p in net.points)

    def edges_within_a(self, net):
        return [e for e in net.edges if e.u in self.side_a and e.v in self.side_a]

    def edges_within_b(self, net):
        return [e for e in net.edges if e.u in self.side_b and e.v in self.side_b]


def cutset(net, cut):
    """Edges crossing ``cut``, in declaration order."""
    cut.check(net)
    a = cut.side_a
    return [e for e in net.edges if (e.u in a) != (e.v in a)]


@dataclass(frozen=True)
class CutConstraint:
    """Admissible-cut family: ``must_a`` in A, ``must_b`` in B and, if given,
    at least one point of ``at_least_one_b`` in B."""

    must_a: frozenset = field(default_factory=frozenset)
    must_b: frozenset = field(default_factory=frozenset)
    at_least_one_b: frozenset = None

    def __init__(self, must_a=(), must_b=(), at_least_one_b=None):
        object.__setattr__(self, "must_a", frozenset(must_a))
        object.__setattr__(self, "must_b", frozenset(must_b))
        object.__setattr__(
            self, "at_least_one_b", None if at_least_one_b is None else frozenset(at_least_one_b)
        )

    def check(self, net, bound=False):
        """Raise if the family is malformed or empty.

        With ``bound=True`` the stricter precondition of the cut functionals
        applies: A-side terminals and some B-side requirement must be given.
        """
        known = set(net.points)
        named = self.must_a | self.must_b | (self.at_least_one_b or frozenset())
        unknown = sorted(named - known)
        if unknown:
            raise ConstraintError(f"unknown point(s) in constraint: {unknown}")
        both = self.must_a & self.must_b
        if both:
            raise ConstraintError(f"point(s) forced to both sides: {sorted(both)}")
        if self.at_least_one_b is not None:
            if not self.at_least_one_b:
                raise ConstraintError("at_least_one_b is empty")
            if self.at_least_one_b & self.must_a:
                raise ConstraintError(
                    f"at_least_one_b overlaps must_a at {sorted(self.at_least_one_b & self.must_a)}"
                )
        if bound:
            if not self.must_a:
                raise ConstraintError("must_a is empty")
            if not self.must_b and self.at_least_one_b is None:
                raise ConstraintError("need must_b or at_least_one_b")

    def admits(self, cut):
        if not self.must_a <= cut.side_a or not self.must_b <= cut.side_b:
            return False
        if self.at_least_one_b is not None and not (self.at_least_one_b & cut.side_b):
            return False
        return True

    def candidates(self):
        """Split into plain constraints, one per at_least_one_b candidate."""
        if self.at_least_one_b is None:
            return [self]
        return [CutConstraint(self.must_a, self.must_b | {b}) for b in sorted(self.at_least_one_b)]


def free_points(net, con):
    fixed = con.must_a | con.must_b
    return [p for p in net.points if p not in fixed]


def enumerate_cuts(net, con=None, max_free=MAX_FREE_POINTS):
    """Yield every admissible cut of ``net``, with free points taken in binary counting order."""
    con = con or CutConstraint()
    con.check(net)
    free = free_points(net, con)
    if len(free) > max_free:
        raise CapacityError(
            f"{len(free)} free points exceed the brute-force limit of {max_free}; "
            "use the algorithmic solvers instead"
        )
    for mask in range(1 << len(free)):
        side_a = set(con.must_a)
        for j, p in enumerate(free):
            if mask >> j & 1:
                side_a.add(p)
        if not side_a or len(side_a) == len(net.points):
            continue
        cut = Cut.from_side_a(net, side_a)
        if con.admits(cut):
            yield cut


@dataclass(frozen=True)
class EndpointSpec:
    """Senders and receivers of a scenario.

    ``pairs`` maps rate index k to ``(i, j)``: sender ``senders[i]`` talks
    to receiver ``receivers[j]``.
    """

    senders: tuple
    receivers: tuple
    pairs: tuple = None

    def __init__(self, senders, receivers, pairs=None):
        object.__setattr__(self, "senders", tuple(senders))
        object.__setattr__(self, "receivers", tuple(receivers))
        object.__setattr__(self, "pairs", None if pairs is None else tuple(tuple(p) for p in pairs))

    def unicast_pairs(self):
        if self.pairs is not None:
            return [(self.senders[i], self.receivers[j]) for i, j in self.pairs]
        return list(zip(self.senders, self.receivers))


def validate(net, spec):
    """Return a list of human-readable problems; empty means valid."""
    problems = structural_problems(net.points, [(e.u, e.v) for e in net.edges])
    known = set(net.points)
    for role, names in (("sender", spec.senders), ("receiver", spec.receivers)):
        for p in names:
            if p not in known:
                problems.append(f"unknown point {p} ({role})")
    for p in spec.senders:
        if p in spec.receivers:
            problems.append(f"disjointness violated at {p}")
    if spec.pairs is not None:
        for k, pair in enumerate(spec.pairs):
            if len(pair) != 2:
                problems.append(f"pair {k} must have two indices")
                continue
            i, j = pair
            if not (0 <= i < len(spec.senders)) or not (0 <= j < len(spec.receivers)):
                problems.append(f"pair {k} index out of range: ({i}, {j})")
    return problems
