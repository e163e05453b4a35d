"""JSON network documents: points, channel-labelled edges and named scenarios.

Example::

    {
      "points": ["a", "p", "b"],
      "edges": [
        {"u": "a", "v": "p", "channel": {"kind": "pure_loss", "param": 0.5}},
        {"u": "p", "v": "b", "channel": {"kind": "custom", "param": 1.2, "distillable": false}}
      ],
      "scenarios": [
        {"name": "ab", "kind": "unicast_multipath", "senders": ["a"], "receivers": ["b"]}
      ]
    }

Parsing is strict: unknown or duplicate keys are rejected and every problem
is reported with its location.
"""

import json

from .channels import ChannelKind, ChannelModel
from .errors import DomainError, ParseError
from .network import Edge, EndpointSpec, Network
from .regions import Scenario, ScenarioKind

TOP_KEYS = {"points", "edges", "scenarios"}
EDGE_KEYS = {"u", "v", "channel"}
CHANNEL_KEYS = {"kind", "param", "distillable"}
SCENARIO_KEYS = {"name", "kind", "senders", "receivers", "pairs"}


class DocumentError(ParseError):
    """One or more diagnostics; ``problems`` holds a ParseError for each."""

    def __init__(self, problems):
        self.problems = list(problems)
        first = self.problems[0]
        super().__init__(first.message, first.location, first.line, first.column)

    def __str__(self):
        return "\n".join(str(p) for p in self.problems)


def _no_dupes(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ValueError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _is_number(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _strings(val, where, problems):
    if not isinstance(val, list) or not all(isinstance(s, str) for s in val):
        problems.append(ParseError("expected a list of strings", where))
        return None
    return val


def _keys(obj, allowed, required, where, problems):
    if not isinstance(obj, dict):
        problems.append(ParseError("expected an object", where))
        return False
    for k in obj:
        if k not in allowed:
            problems.append(ParseError(f"unknown key {k!r}", f"{where}.{k}" if where else k))
    missing = [k for k in required if k not in obj]
    for k in missing:
        problems.append(ParseError(f"missing key {k!r}", where or "<root>"))
    return not missing


def _load_json(text):
    try:
        return json.loads(text, object_pairs_hook=_no_dupes)
    except json.JSONDecodeError as exc:
        raise DocumentError([ParseError(exc.msg, line=exc.lineno, column=exc.colno)]) from None
    except ValueError as exc:
        raise DocumentError([ParseError(str(exc))]) from None


def _parse_channel(ch, where, problems):
    if not _keys(ch, CHANNEL_KEYS, ("kind", "param"), where, problems):
        return None
    kind = ch["kind"]
    if kind not in {k.value for k in ChannelKind}:
        problems.append(ParseError(f"unknown channel kind {kind!r}", f"{where}.kind"))
        return None
    if not _is_number(ch["param"]):
        problems.append(ParseError("param must be a number", f"{where}.param"))
        return None
    distillable = ch.get("distillable", kind != "custom")
    if not isinstance(distillable, bool):
        problems.append(ParseError("distillable must be a boolean", f"{where}.distillable"))
        return None
    if kind != "custom" and not distillable:
        problems.append(ParseError(f"{kind} channels are always distillable", f"{where}.distillable"))
        return None
    try:
        return ChannelModel(ChannelKind(kind), float(ch["param"]), distillable)
    except DomainError as exc:
        problems.append(ParseError(str(exc), f"{where}.{exc.field or 'param'}"))
        return None


def _parse_scenario(sc, where, problems):
    if not _keys(sc, SCENARIO_KEYS, ("name", "kind", "senders", "receivers"), where, problems):
        return None
    ok = True
    if not isinstance(sc["name"], str) or not sc["name"]:
        problems.append(ParseError("name must be a nonempty string", f"{where}.name"))
        ok = False
    try:
        kind = ScenarioKind(sc["kind"])
    except (ValueError, TypeError):
        allowed = ", ".join(k.value for k in ScenarioKind)
        problems.append(ParseError(f"unknown scenario kind {sc['kind']!r} (one of {allowed})", f"{where}.kind"))
        ok = False
    senders = _strings(sc["senders"], f"{where}.senders", problems)
    receivers = _strings(sc["receivers"], f"{where}.receivers", problems)
    pairs = sc.get("pairs")
    if pairs is not None:
        good = isinstance(pairs, list) and all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(i, int) and not isinstance(i, bool) for i in p)
            for p in pairs
        )
        if not good:
            problems.append(ParseError("pairs must be a list of [sender_index, receiver_index]", f"{where}.pairs"))
            ok = False
    if not ok or senders is None or receivers is None:
        return None
    return Scenario(kind, EndpointSpec(senders, receivers, pairs), sc["name"])


def check_document(text):
    """Parse ``text``; return ``(network, scenarios, problems)``.

    ``network`` is None when the document is too broken to build one.
    """
    try:
        doc = _load_json(text)
    except DocumentError as exc:
        return None, [], exc.problems
    problems = []
    if not _keys(doc, TOP_KEYS, ("points", "edges"), "", problems):
        return None, [], problems

    points = _strings(doc["points"], "points", problems)
    if points is not None and not points:
        problems.append(ParseError("points list is empty", "points"))
        points = None
    if points is not None:
        seen = set()
        for i, p in enumerate(points):
            if p in seen:
                problems.append(ParseError(f"duplicate point {p}", f"points[{i}]"))
            seen.add(p)

    edges = []
    if not isinstance(doc["edges"], list):
        problems.append(ParseError("expected a list", "edges"))
    else:
        known = set(points or ())
        for i, e in enumerate(doc["edges"]):
            where = f"edges[{i}]"
            if not _keys(e, EDGE_KEYS, ("u", "v", "channel"), where, problems):
                continue
            bad = False
            for end in ("u", "v"):
                if not isinstance(e[end], str):
                    problems.append(ParseError("expected a point name", f"{where}.{end}"))
                    bad = True
                elif points is not None and e[end] not in known:
                    problems.append(ParseError(f"unknown point {e[end]}", f"{where}.{end}"))
                    bad = True
            if not bad and e["u"] == e["v"]:
                problems.append(ParseError(f"self-loop at {e['u']}", where))
                bad = True
            model = _parse_channel(e["channel"], f"{where}.channel", problems)
            if model is not None and not bad:
                edges.append(Edge(e["u"], e["v"], model))

    scenarios = []
    raw = doc.get("scenarios", [])
    if not isinstance(raw, list):
        problems.append(ParseError("expected a list", "scenarios"))
        raw = []
    names = set()
    for i, sc in enumerate(raw):
        s = _parse_scenario(sc, f"scenarios[{i}]", problems)
        if s is None:
            continue
        if s.name in names:
            problems.append(ParseError(f"duplicate scenario name {s.name}", f"scenarios[{i}].name"))
        names.add(s.name)
        scenarios.append((i, s))

    if problems or points is None:
        return None, [s for _, s in scenarios], problems
    net = Network(points, edges)
    for i, s in scenarios:
        for msg in s.problems(net):
            problems.append(ParseError(msg, f"scenarios[{i}]"))
    return net, [s for _, s in scenarios], problems


def parse_network(text):
    """Strictly parse a network document into ``(Network, [Scenario, ...])``."""
    net, scenarios, problems = check_document(text)
    if problems:
        raise DocumentError(problems)
    return net, scenarios


def load_network(path):
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read())


def dump_network(net, scenarios=()):
    """Serialise back to the document format; inverse of :func:`parse_network`."""
    edges = []
    for e in net.edges:
        ch = {"kind": e.model.kind.value, "param": e.model.param}
        if e.model.kind is ChannelKind.CUSTOM:
            ch["distillable"] = e.model.distillable
        edges.append({"u": e.u, "v": e.v, "channel": ch})
    doc = {"points": list(net.points), "edges": edges}
    out = []
    for s in scenarios:
        d = {
            "name": s.name,
            "kind": s.kind.value,
            "senders": list(s.spec.senders),
            "receivers": list(s.spec.receivers),
        }
        if s.spec.pairs is not None:
            d["pairs"] = [list(p) for p in s.spec.pairs]
        out.append(d)
    doc["scenarios"] = out
    return json.dumps(doc, indent=2) + "\n"
