"""Simple undirected graphs, signed graphs, cycles and traversal helpers.

Vertices are dense integers ``0..n-1``. Edges are stored once, as ``(u, v)``
with ``u < v``, in lexicographic order; a signed graph keeps one sign per edge
aligned with that order. All objects are immutable.
"""

from __future__ import annotations

import enum
import warnings
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from setsign.errors import (
    CycleBudgetExceeded,
    EdgeNotInGraph,
    InvalidVertex,
    IsolatedVertexWarning,
    SelfLoopRejected,
)

Edge = tuple[int, int]

DEFAULT_CYCLE_BUDGET = 10**6


class Sign(enum.IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    def __mul__(self, other):
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        return NotImplemented

    @property
    def char(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"

    @classmethod
    def from_char(cls, c: str) -> Sign:
        if c == "+":
            return cls.POSITIVE
        if c == "-":
            return cls.NEGATIVE
        raise ValueError(f"not a sign character: {c!r}")

    @classmethod
    def product(cls, signs: Iterable[Sign]) -> Sign:
        out = cls.POSITIVE
        for s in signs:
            out = out * s
        return out


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    duplicates: int = field(default=0, compare=False, repr=False)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_index

    def index_of(self, u: int, v: int) -> int:
        try:
            return self.edge_index[edge_key(u, v)]
        except KeyError:
            raise EdgeNotInGraph(f"({u}, {v}) is not an edge") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adjacency[v]]


def build_graph(n: int, edge_list: Iterable[Sequence[int]], *, warn_isolated: bool = True) -> Graph:
    """Normalize an edge list into a :class:`Graph`.

    Repeated edges (in either orientation) are dropped; the number dropped is
    kept in ``Graph.duplicates``. Isolated vertices only trigger an
    :class:`IsolatedVertexWarning`.
    """
    if n < 0:
        raise InvalidVertex(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    dups = 0
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise InvalidVertex(f"vertex {x} out of range [0, {n})")
        if u == v:
            raise SelfLoopRejected(f"self-loop at vertex {u}")
        e = edge_key(u, v)
        if e in seen:
            dups += 1
        else:
            seen.add(e)
    g = Graph(n, tuple(sorted(seen)), dups)
    if warn_isolated and n > 1:
        iso = g.isolated_vertices()
        if iso:
            warnings.warn(f"isolated vertices: {iso}", IsolatedVertexWarning, stacklevel=2)
    return g


@dataclass(frozen=True)
class SignedGraph:
    graph: Graph
    signs: tuple[Sign, ...]

    def __post_init__(self):
        if len(self.signs) != len(self.graph.edges):
            raise ValueError(
                f"signature has {len(self.signs)} entries for {len(self.graph.edges)} edges"
            )

    @classmethod
    def from_edges(cls, n: int, signed_edges: Iterable[tuple[int, int, Sign | str | int]]) -> SignedGraph:
        """Build from ``(u, v, sign)`` triples; sign may be a Sign, '+'/'-' or +-1."""
        triples = [(u, v, _coerce_sign(s)) for u, v, s in signed_edges]
        g = build_graph(n, [(u, v) for u, v, _ in triples])
        by_edge = {edge_key(u, v): s for u, v, s in triples}
        return cls(g, tuple(by_edge[e] for e in g.edges))

    @classmethod
    def with_signature(cls, graph: Graph, signature: Mapping[Edge, Sign] | Sequence[Sign]) -> SignedGraph:
        if isinstance(signature, Mapping):
            signs = tuple(_coerce_sign(signature[e]) for e in graph.edges)
        else:
            signs = tuple(_coerce_sign(s) for s in signature)
        return cls(graph, signs)

    @classmethod
    def all_positive(cls, graph: Graph) -> SignedGraph:
        return cls(graph, (Sign.POSITIVE,) * graph.m)

    @property
    def n(self) -> int:
        return self.graph.n

    def sign(self, u: int, v: int) -> Sign:
        return self.signs[self.graph.index_of(u, v)]

    def signed_edges(self) -> Iterator[tuple[int, int, Sign]]:
        for (u, v), s in zip(self.graph.edges, self.signs):
            yield u, v, s

    @property
    def positive_edges(self) -> list[Edge]:
        return [e for e, s in zip(self.graph.edges, self.signs) if s is Sign.POSITIVE]

    @property
    def negative_edges(self) -> list[Edge]:
        return [e for e, s in zip(self.graph.edges, self.signs) if s is Sign.NEGATIVE]


def _coerce_sign(s) -> Sign:
    if isinstance(s, Sign):
        return s
    if isinstance(s, str):
        return Sign.from_char(s)
    return Sign(int(s))


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its cyclic vertex sequence.

    Equality and hashing ignore rotation and reflection.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if len(vs) < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {vs}")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def canonical(self) -> tuple[int, ...]:
        vs = self.vertices
        i = vs.index(min(vs))
        rot = vs[i:] + vs[:i]
        if rot[1] > rot[-1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return rot

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())


def validate_cycle(g: Graph, c: Cycle) -> list[int]:
    """Return the edge indices used by ``c``; raise if any step is not an edge."""
    out = []
    for u, v in c.edges():
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise EdgeNotInGraph(f"({u}, {v}) is not an edge")
        out.append(g.index_of(u, v))
    return out


def cycle_sign(sg: SignedGraph, c: Cycle) -> Sign:
    return Sign.product(sg.signs[i] for i in validate_cycle(sg.graph, c))


def enumerate_cycles(g: Graph, budget: int = DEFAULT_CYCLE_BUDGET) -> list[Cycle]:
    """Every simple cycle of ``g`` exactly once.

    Each cycle is rooted at its smallest vertex ``s``; the search only visits
    vertices larger than ``s`` and keeps the orientation whose second vertex
    is smaller than its last.
    """
    adj = g.adjacency
    cycles: list[Cycle] = []
    for s in range(g.n):
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True
        # explicit stack of neighbour iterators avoids recursion limits
        stack = [iter(adj[s])]
        while stack:
            advanced = False
            for w in stack[-1]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(Cycle(tuple(path)))
                        if len(cycles) > budget:
                            raise CycleBudgetExceeded(f"more than {budget} cycles")
                    continue
                if w > s and not on_path[w]:
                    path.append(w)
                    on_path[w] = True
                    stack.append(iter(adj[w]))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path[path.pop()] = False
    return cycles


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        frontier = [root]
        while frontier:
            u = frontier.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    frontier.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1
