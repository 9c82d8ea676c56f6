"""Text formats for signed graphs and valuations.

Signed edge list::

    # comment
    @vertices a b c      (optional; fixes vertex order, allows isolated vertices)
    a b +
    b c -

Valuation, plain text::

    @ground 3
    a: 1
    b: 1 2
    c:

Valuation, JSON (authoritative for round trips)::

    {"format": "setsign-valuation", "ground": 3, "vertices": ["a", "b", "c"],
     "labels": {"a": [1], "b": [1, 2], "c": []}}

Vertex names are interned to ids ``0..n-1`` in order of first appearance
(or ``@vertices`` order). Serializers are byte-deterministic.
"""

from __future__ import annotations

import json
from collections.abc import Sequence

from setsign.errors import (
    DuplicateEdgeConflict,
    MissingLabel,
    ParseError,
    SelfLoopRejected,
)
from setsign.graph import Graph, Sign, SignedGraph, edge_key
from setsign.valuation import SetLabel, SetValuation

VALUATION_FORMAT = "setsign-valuation"


def default_names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def _check_name(name: str) -> None:
    if not name or any(c.isspace() for c in name) or name[0] in "#@" or name.endswith(":"):
        raise ValueError(f"vertex name {name!r} cannot be written to a document")


def _content_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield i, line


def parse_signed_graph(
    text: str, *, source: str | None = None, allow_unsigned: bool = False
) -> tuple[SignedGraph, list[str]]:
    """Parse a signed edge list into a graph and its vertex-name table.

    With ``allow_unsigned`` a two-token line ``u v`` is read as a positive edge.
    """
    names: list[str] = []
    ids: dict[str, int] = {}
    signs: dict[tuple[int, int], Sign] = {}

    def intern(name: str) -> int:
        if name not in ids:
            ids[name] = len(names)
            names.append(name)
        return ids[name]

    header_seen = False
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "@vertices":
            if header_seen or signs:
                raise ParseError(lineno, "@vertices must appear once, before any edge", source)
            header_seen = True
            for name in tokens[1:]:
                if name in ids:
                    raise ParseError(lineno, f"vertex {name!r} declared twice", source)
                intern(name)
            continue
        if tokens[0].startswith("@"):
            raise ParseError(lineno, f"unknown directive {tokens[0]}", source)
        if len(tokens) == 2 and allow_unsigned:
            tokens.append("+")
        if len(tokens) != 3:
            raise ParseError(lineno, f"expected 'u v sign', got {len(tokens)} fields", source)
        a, b, s = tokens
        if s not in ("+", "-"):
            raise ParseError(lineno, f"sign must be '+' or '-', got {s!r}", source)
        if a == b:
            raise SelfLoopRejected(f"line {lineno}: self-loop at vertex {a!r}")
        if header_seen and (a not in ids or b not in ids):
            missing = a if a not in ids else b
            raise ParseError(lineno, f"vertex {missing!r} not declared in @vertices", source)
        e = edge_key(intern(a), intern(b))
        sign = Sign.from_char(s)
        if e in signs and signs[e] is not sign:
            raise DuplicateEdgeConflict(f"line {lineno}: edge {a} {b} given both signs")
        signs[e] = sign
    g = Graph(len(names), tuple(sorted(signs)))
    return SignedGraph(g, tuple(signs[e] for e in g.edges)), names


def serialize_signed_graph(sg: SignedGraph, names: Sequence[str] | None = None) -> str:
    names = list(names) if names is not None else default_names(sg.n)
    if len(names) != sg.n:
        raise ValueError(f"{len(names)} names for {sg.n} vertices")
    for name in names:
        _check_name(name)
    lines = ["@vertices " + " ".join(names)] if names else ["@vertices"]
    for u, v, s in sg.signed_edges():
        lines.append(f"{names[u]} {names[v]} {s.char}")
    return "\n".join(lines) + "\n"


def _order_by_names(
    entries: dict[str, list[int]], order: list[str], names: Sequence[str] | None, source
) -> list[str]:
    if names is None:
        return order
    extra = [k for k in order if k not in set(names)]
    if extra:
        raise ParseError(0, f"labels for unknown vertices {extra}", source)
    missing = [k for k in names if k not in entries]
    if missing:
        raise MissingLabel(f"no label for vertices {missing}")
    return list(names)


def _build_valuation(ground: int, entries, order, source) -> SetValuation:
    labels = []
    for name in order:
        elems = entries[name]
        for x in elems:
            if not 1 <= x <= ground:
                raise ParseError(0, f"element {x} of vertex {name!r} outside 1..{ground}", source)
        if len(set(elems)) != len(elems):
            raise ParseError(0, f"repeated element in label of vertex {name!r}", source)
        labels.append(SetLabel.of(elems, ground))
    val = SetValuation(ground, tuple(labels))
    val.check_injective()
    return val


def parse_valuation_text(
    text: str, names: Sequence[str] | None = None, *, source: str | None = None
) -> tuple[SetValuation, list[str]]:
    """Parse the plain-text valuation format.

    When ``names`` (a graph's name table) is given, labels are ordered to
    match it and every name must be labeled.
    """
    ground = None
    entries: dict[str, list[int]] = {}
    order: list[str] = []
    for lineno, line in _content_lines(text):
        if line.startswith("@"):
            tokens = line.split()
            if tokens[0] != "@ground" or len(tokens) != 2:
                raise ParseError(lineno, "expected '@ground <m>'", source)
            if ground is not None:
                raise ParseError(lineno, "@ground given twice", source)
            try:
                ground = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"ground size {tokens[1]!r} is not an integer", source) from None
            if ground < 1:
                raise ParseError(lineno, "ground size must be >= 1", source)
            continue
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep or not name or any(c.isspace() for c in name):
            raise ParseError(lineno, "expected 'name: e1 e2 ...'", source)
        if name in entries:
            raise ParseError(lineno, f"vertex {name!r} labeled twice", source)
        try:
            elems = [int(x) for x in rest.split()]
        except ValueError:
            raise ParseError(lineno, "label elements must be integers", source) from None
        entries[name] = elems
        order.append(name)
        if ground is not None:
            for x in elems:
                if not 1 <= x <= ground:
                    raise ParseError(lineno, f"element {x} outside 1..{ground}", source)
    if ground is None:
        raise ParseError(0, "missing '@ground <m>' line", source)
    order = _order_by_names(entries, order, names, source)
    return _build_valuation(ground, entries, order, source), order


def serialize_valuation_text(val: SetValuation, names: Sequence[str] | None = None) -> str:
    names = list(names) if names is not None else default_names(len(val))
    for name in names:
        _check_name(name)
    lines = [f"@ground {val.ground}"]
    for name, lab in zip(names, val.labels, strict=True):
        elems = " ".join(map(str, lab.elements))
        lines.append(f"{name}: {elems}" if elems else f"{name}:")
    return "\n".join(lines) + "\n"


def parse_valuation_json(
    text: str, names: Sequence[str] | None = None, *, source: str | None = None
) -> tuple[SetValuation, list[str]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg, source) from None
    if not isinstance(doc, dict) or doc.get("format") != VALUATION_FORMAT:
        raise ParseError(0, f"not a {VALUATION_FORMAT} document", source)
    try:
        ground = doc["ground"]
        order = doc["vertices"]
        labels = doc["labels"]
    except KeyError as exc:
        raise ParseError(0, f"missing field {exc.args[0]!r}", source) from None
    if not isinstance(ground, int) or ground < 1:
        raise ParseError(0, "ground must be a positive integer", source)
    if not isinstance(order, list) or not isinstance(labels, dict):
        raise ParseError(0, "vertices must be a list and labels an object", source)
    if sorted(order) != sorted(labels) or len(set(order)) != len(order):
        raise ParseError(0, "vertices and labels disagree", source)
    entries = {}
    for name in order:
        elems = labels[name]
        if not isinstance(elems, list) or not all(isinstance(x, int) for x in elems):
            raise ParseError(0, f"label of {name!r} must be a list of integers", source)
        entries[name] = elems
    order = _order_by_names(entries, list(order), names, source)
    return _build_valuation(ground, entries, order, source), order


def serialize_valuation_json(val: SetValuation, names: Sequence[str] | None = None) -> str:
    names = list(names) if names is not None else default_names(len(val))
    doc = {
        "format": VALUATION_FORMAT,
        "ground": val.ground,
        "vertices": names,
        "labels": {name: list(lab.elements) for name, lab in zip(names, val.labels, strict=True)},
    }
    return json.dumps(doc, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def parse_valuation(
    text: str, names: Sequence[str] | None = None, *, source: str | None = None
) -> tuple[SetValuation, list[str]]:
    """Dispatch on content: JSON documents start with ``{``."""
    if text.lstrip().startswith("{"):
        return parse_valuation_json(text, names, source=source)
    return parse_valuation_text(text, names, source=source)
