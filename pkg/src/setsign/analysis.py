"""Balance, Harary bipartitions, 2-clusterability and Eulerian parity sums."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from setsign.errors import NotEulerian, NotSetIndexer, PreconditionViolated
from setsign.graph import (
    Cycle,
    Graph,
    Sign,
    SignedGraph,
    connected_components,
    edge_key,
    validate_cycle,
)
from setsign.valuation import (
    SetValuation,
    induce_signed_graph,
    is_set_indexer,
    same_parity,
)


@dataclass(frozen=True)
class Bipartition:
    v1: frozenset[int]
    v2: frozenset[int]

    def cut(self, g: Graph) -> set[tuple[int, int]]:
        return {(u, v) for u, v in g.edges if (u in self.v1) != (v in self.v1)}


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    bipartition: Bipartition | None = None
    negative_cycle: Cycle | None = None

    def __bool__(self) -> bool:
        return self.balanced


class NotClusterable(enum.Enum):
    ALL_POSITIVE = "AllPositive"
    UNBALANCED = "Unbalanced"


@dataclass(frozen=True)
class ClusterCertificate:
    clusters: tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class ClusterResult:
    clusterable: bool
    certificate: ClusterCertificate | None = None
    reason: NotClusterable | None = None

    def __bool__(self) -> bool:
        return self.clusterable


def is_balanced(sg: SignedGraph) -> BalanceResult:
    """Harary test by sign propagation over a BFS spanning forest.

    Each component's smallest vertex goes to ``v1``; a tree edge keeps the
    side when positive and flips it when negative. A non-tree edge that
    disagrees with the sides closes a negative cycle through the tree.
    Runs in O(|V| + |E|).
    """
    g = sg.graph
    n = g.n
    side = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    neg = [s is Sign.NEGATIVE for s in sg.signs]
    index = g.edge_index
    for root in range(n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                flip = neg[index[edge_key(u, w)]]
                if side[w] == -1:
                    side[w] = side[u] ^ flip
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif (side[w] != side[u]) != flip:
                    return BalanceResult(False, negative_cycle=_tree_cycle(u, w, parent, depth))
    v1 = frozenset(v for v in range(n) if side[v] == 0)
    return BalanceResult(True, bipartition=Bipartition(v1, frozenset(range(n)) - v1))


def _tree_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> Cycle:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right repeats it
    return Cycle(tuple(left) + tuple(reversed(right[:-1])))


def cycle_negative_count(sg: SignedGraph, c: Cycle) -> int:
    return sum(sg.signs[i] is Sign.NEGATIVE for i in validate_cycle(sg.graph, c))


def _require_connected(g: Graph) -> None:
    k = len(connected_components(g))
    if k != 1:
        raise PreconditionViolated(f"graph must be connected, has {k} components")


def is_two_clusterable(sg: SignedGraph) -> ClusterResult:
    _require_connected(sg.graph)
    bal = is_balanced(sg)
    if not bal:
        return ClusterResult(False, reason=NotClusterable.UNBALANCED)
    if Sign.NEGATIVE not in sg.signs:
        return ClusterResult(False, reason=NotClusterable.ALL_POSITIVE)
    bp = bal.bipartition
    return ClusterResult(True, certificate=ClusterCertificate((bp.v1, bp.v2)))


def two_clusterable_by_parity(g: Graph, val: SetValuation) -> bool:
    """Whether some edge joins labels of opposite parity (connected ``g`` only)."""
    _require_connected(g)
    labels = val.labels
    return any(not same_parity(labels[u], labels[v]) for u, v in g.edges)


def is_eulerian(g: Graph) -> bool:
    if any(g.degree(v) % 2 for v in range(g.n)):
        return False
    nontrivial = [c for c in connected_components(g) if len(c) > 1]
    return len(nontrivial) <= 1


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[Cycle, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def eulerian_cycle_decomposition(g: Graph) -> CycleDecomposition:
    """Split an Eulerian graph into edge-disjoint simple cycles by greedy peeling.

    Walk along unused edges keeping the walk a simple path; when the walk
    hits a vertex already on the path, cut that loop off as a cycle and keep
    walking from the repeated vertex.
    """
    if not is_eulerian(g):
        raise NotEulerian("graph has an odd-degree vertex or more than one non-trivial component")
    remaining = [set(g.adjacency[v]) for v in range(g.n)]
    cycles = []
    for start in range(g.n):
        while remaining[start]:
            path = [start]
            pos = {start: 0}
            while True:
                u = path[-1]
                if not remaining[u]:
                    break
                w = min(remaining[u])
                remaining[u].discard(w)
                remaining[w].discard(u)
                if w in pos:
                    i = pos[w]
                    cycles.append(Cycle(tuple(path[i:])))
                    for x in path[i + 1:]:
                        del pos[x]
                    del path[i + 1:]
                else:
                    pos[w] = len(path)
                    path.append(w)
            if len(path) != 1:
                raise AssertionError("walk stuck away from its start; degrees not even")
    return CycleDecomposition(tuple(cycles))


@dataclass(frozen=True)
class CycleParity:
    cycle: Cycle
    total: int
    positive_sum: int
    negative_sum: int
    positive_count: int
    negative_count: int


@dataclass(frozen=True)
class EulerianParity:
    total: int
    cycles: tuple[CycleParity, ...] = field(default=())

    @property
    def even(self) -> bool:
        return self.total % 2 == 0


def eulerian_label_sum_parity(g: Graph, val: SetValuation, *, strict: bool = True) -> EulerianParity:
    """Sum of induced edge-label sizes, overall and per decomposed cycle.

    Per cycle the sum is split into positive edges (even-size labels) and
    negative edges (odd-size labels). ``strict`` requires ``val`` to be a
    set-indexer; pass ``strict=False`` to accept any injective valuation.
    """
    if not is_eulerian(g):
        raise NotEulerian("graph is not Eulerian")
    if strict:
        check = is_set_indexer(g, val)
        if not check:
            a, b = check.collision
            raise NotSetIndexer(f"edges {a} and {b} receive the same label")
    sg = induce_signed_graph(g, val)
    labels = val.labels
    size = {e: len(labels[e[0]] ^ labels[e[1]]) for e in g.edges}
    total = sum(size.values())
    per_cycle = []
    for c in eulerian_cycle_decomposition(g):
        pos_sum = neg_sum = pos_n = neg_n = 0
        for e in c.edges():
            if sg.sign(*e) is Sign.POSITIVE:
                pos_sum += size[e]
                pos_n += 1
            else:
                neg_sum += size[e]
                neg_n += 1
        per_cycle.append(CycleParity(c, pos_sum + neg_sum, pos_sum, neg_sum, pos_n, neg_n))
    return EulerianParity(total, tuple(per_cycle))
