"""Naive, exhaustive verifiers used as ground truth for the fast algorithms.

Nothing here calls :func:`setsign.analysis.is_balanced` or the spanning-tree
machinery; balance is decided by scanning all ``2**n`` vertex partitions and
cycles are found by trying every vertex ordering of every vertex subset.
The theorem suite then compares those answers with the library's own.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from setsign import _kernels
from setsign.analysis import (
    eulerian_cycle_decomposition,
    is_balanced,
    is_eulerian,
    is_two_clusterable,
    two_clusterable_by_parity,
)
from setsign.constructors import Unbalanced, balance_compatible_labeling, random_masks
from setsign.errors import BudgetExceeded, GroundSetTooSmall, TooLarge
from setsign.graph import (
    Cycle,
    Graph,
    Sign,
    SignedGraph,
    build_graph,
    connected_components,
    cycle_sign,
    enumerate_cycles,
)
from setsign.valuation import (
    SetValuation,
    induce_signed_graph,
    induced_negative_edges,
    same_parity,
)

MAX_SCAN_N = 20
DEFAULT_BUDGET = 10**6


def _edge_arrays(g: Graph):
    us = np.array([u for u, _ in g.edges], dtype=np.int64)
    vs = np.array([v for _, v in g.edges], dtype=np.int64)
    return us, vs


def _neg_vector(sg: SignedGraph) -> np.ndarray:
    return np.array([s is Sign.NEGATIVE for s in sg.signs], dtype=np.bool_)


def _check_size(n: int, max_n: int) -> None:
    if n > max_n:
        raise TooLarge(f"{n} vertices exceeds the partition-scan limit of {max_n}")


def brute_balance(sg: SignedGraph, max_n: int = MAX_SCAN_N) -> bool:
    """True iff some vertex partition has exactly the negative edges crossing it."""
    _check_size(sg.n, max_n)
    us, vs = _edge_arrays(sg.graph)
    return _kernels.cut_scan(sg.n, us, vs, _neg_vector(sg), False) >= 0


def brute_two_cluster(sg: SignedGraph, max_n: int = MAX_SCAN_N) -> bool:
    """Like :func:`brute_balance` but both parts must be non-empty."""
    _check_size(sg.n, max_n)
    us, vs = _edge_arrays(sg.graph)
    return _kernels.cut_scan(sg.n, us, vs, _neg_vector(sg), True) >= 0


def brute_cycles(g: Graph) -> set[Cycle]:
    """All simple cycles, by testing every ordering of every vertex subset."""
    found = set()
    for k in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                order = (first,) + perm
                if all(g.has_edge(order[i], order[(i + 1) % k]) for i in range(k)):
                    found.add(Cycle(order))
    return found


def simple_paths(g: Graph, s: int, t: int) -> list[tuple[int, ...]]:
    """Every simple path from ``s`` to ``t`` as a vertex tuple."""
    out = []

    def walk(path, seen):
        u = path[-1]
        if u == t:
            out.append(tuple(path))
            return
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                path.append(w)
                walk(path, seen)
                path.pop()
                seen.discard(w)

    walk([s], {s})
    return out


def path_sign(sg: SignedGraph, path: tuple[int, ...]) -> Sign:
    return Sign.product(sg.sign(path[i], path[i + 1]) for i in range(len(path) - 1))


def _valuation_count(n: int, m: int) -> int:
    return math.perm(1 << m, n)


def exhaustive_masks(n: int, m: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Every injective labeling of ``n`` vertices by subsets of ``{1..m}``, one row each."""
    if (1 << m) < n:
        raise GroundSetTooSmall(f"2^{m} subsets cannot label {n} vertices injectively")
    count = _valuation_count(n, m)
    if count > budget:
        raise BudgetExceeded(f"{count} valuations exceeds budget {budget}")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    rows = np.fromiter(
        itertools.chain.from_iterable(itertools.permutations(range(1 << m), n)),
        dtype=np.int64,
        count=count * n,
    )
    return rows.reshape(count, n)


def exhaustive_valuations(g: Graph, m: int, budget: int = DEFAULT_BUDGET) -> Iterator[SetValuation]:
    for row in exhaustive_masks(g.n, m, budget):
        yield SetValuation.from_masks(m, row.tolist())


def all_signatures(g: Graph) -> Iterator[SignedGraph]:
    for bits in itertools.product((Sign.POSITIVE, Sign.NEGATIVE), repeat=g.m):
        yield SignedGraph(g, bits)


def signature_census(g: Graph) -> tuple[int, int]:
    """(number of balanced signatures, 2**|E|), counted by partition scan."""
    us, vs = _edge_arrays(g)
    neg = np.array(list(itertools.product((False, True), repeat=g.m)), dtype=np.bool_)
    neg = neg.reshape(-1, g.m)
    counts = _kernels.count_cuts(g.n, us, vs, neg, False)
    return int((counts > 0).sum()), neg.shape[0]


def small_graphs(max_n: int, *, min_n: int = 1, connected: bool = False) -> list[Graph]:
    """All graphs on ``min_n..max_n`` vertices up to isomorphism (``max_n <= 7``)."""
    import networkx as nx

    if max_n > 7:
        raise TooLarge("the graph atlas only covers up to 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if not min_n <= n <= max_n:
            continue
        g = build_graph(n, list(h.edges()), warn_isolated=False)
        if connected and len(connected_components(g)) != 1:
            continue
        out.append(g)
    return out


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return build_graph(n, [e for e, k in zip(pairs, keep) if k], warn_isolated=False)


# -- theorem suite ----------------------------------------------------------

CHECKS = (
    "sign_parity",          # induced sign positive <=> endpoint labels of same parity
    "balanced_brute",       # induced signed graph passes the partition scan
    "balanced_cycles",      # ... and every enumerated cycle is positive
    "balanced_algorithm",   # ... and the linear-time test agrees
    "two_cluster",          # parity-edge criterion <=> clusterable <=> partition scan
    "compatible_roundtrip", # balanced => compatible labeling re-induces the signature
    "signature_census",     # over all signatures: compatible labeling succeeds iff balanced
    "eulerian_parity",      # total and per-cycle label-size sums are even
)


@dataclass(frozen=True)
class Family:
    """Which instances :func:`verify_theorem_suite` covers.

    Exhaustive part: every graph on ``1..max_n`` vertices (up to isomorphism)
    with every injective valuation over ``{1..m}`` for ``m <= max_m``. Random
    part: ``random_instances`` seeded (graph, valuation) pairs.
    """

    max_n: int = 4
    max_m: int = 3
    budget: int = DEFAULT_BUDGET
    connected_only: bool = False
    random_instances: int = 0
    random_max_n: int = 10
    random_max_m: int = 6
    seed: int = 0
    max_examples: int = 5


@dataclass
class SuiteReport:
    family: Family
    instances: int = 0
    checked: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    failed: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    examples: dict[str, list[str]] = field(default_factory=lambda: {c: [] for c in CHECKS})
    elapsed: float = 0.0

    @property
    def counterexamples(self) -> int:
        return sum(self.failed.values())

    @property
    def ok(self) -> bool:
        return self.counterexamples == 0

    def record(self, check: str, ok: bool, describe) -> None:
        self.checked[check] += 1
        if not ok:
            self.failed[check] += 1
            if len(self.examples[check]) < self.family.max_examples:
                self.examples[check].append(describe())

    def merge_counts(self, check: str, total: int, bad: list[str]) -> None:
        self.checked[check] += total
        self.failed[check] += len(bad)
        room = self.family.max_examples - len(self.examples[check])
        self.examples[check].extend(bad[:max(room, 0)])

    def to_dict(self) -> dict:
        return {
            "family": self.family.__dict__,
            "instances": self.instances,
            "checks": {
                c: {"checked": self.checked[c], "failed": self.failed[c], "examples": self.examples[c]}
                for c in CHECKS
            },
            "counterexamples": self.counterexamples,
            "elapsed_sec": round(self.elapsed, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"instances: {self.instances}"]
        width = max(map(len, CHECKS))
        for c in CHECKS:
            status = "ok" if self.failed[c] == 0 else "FAIL"
            lines.append(f"{c:<{width}}  checked={self.checked[c]:<9} failed={self.failed[c]:<5} {status}")
            for ex in self.examples[c]:
                lines.append(f"    counterexample: {ex}")
        lines.append(f"counterexamples: {self.counterexamples}")
        return "\n".join(lines)


class _GraphContext:
    """Per-graph data reused across every valuation of that graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.us, self.vs = _edge_arrays(g)
        self.connected = len(connected_components(g)) == 1
        self.cycles = enumerate_cycles(g)
        inc = np.zeros((len(self.cycles), g.m), dtype=np.int64)
        for r, c in enumerate(self.cycles):
            for e in c.edges():
                inc[r, g.edge_index[e]] = 1
        self.incidence = inc
        self.eulerian = is_eulerian(g) and g.m > 0
        if self.eulerian:
            dec = eulerian_cycle_decomposition(g)
            self.decomposition = [[g.edge_index[e] for e in c.edges()] for c in dec]
        self.by_signature: dict[bytes, dict[str, bool]] = {}


def _describe(g: Graph, row) -> str:
    labels = SetValuation.from_masks(max(int(max(row, default=0)).bit_length(), 1), row)
    return f"n={g.n} edges={list(g.edges)} labels={list(labels.labels)}"


def _signature_checks(ctx: _GraphContext, neg: np.ndarray) -> dict[str, bool]:
    """Checks that depend only on the induced signature, cached per graph."""
    key = neg.tobytes()
    hit = ctx.by_signature.get(key)
    if hit is not None:
        return hit
    sg = SignedGraph(ctx.g, tuple(Sign.NEGATIVE if x else Sign.POSITIVE for x in neg))
    brute = brute_balance(sg)
    cycles_ok = not ctx.cycles or not np.any((ctx.incidence @ neg.astype(np.int64)) % 2)
    algo = bool(is_balanced(sg))
    out = {"brute": brute, "cycles": bool(cycles_ok), "algo": algo}
    if ctx.connected:
        out["cluster_brute"] = brute_two_cluster(sg)
        out["cluster_algo"] = bool(is_two_clusterable(sg))
    lab = balance_compatible_labeling(sg)
    out["roundtrip"] = (
        not isinstance(lab, Unbalanced) and induce_signed_graph(ctx.g, lab).signs == sg.signs
    )
    ctx.by_signature[key] = out
    return out


def _check_instances(report: SuiteReport, ctx: _GraphContext, masks: np.ndarray, ground: int) -> None:
    g = ctx.g
    report.instances += masks.shape[0]
    neg = induced_negative_edges(g, masks)
    for r in range(masks.shape[0]):
        row = masks[r].tolist()
        val = SetValuation.from_masks(ground, row)
        sg = induce_signed_graph(g, val)
        labels = val.labels
        parity_neg = [not same_parity(labels[u], labels[v]) for u, v in g.edges]
        scalar_neg = [s is Sign.NEGATIVE for s in sg.signs]
        report.record(
            "sign_parity",
            scalar_neg == parity_neg and scalar_neg == neg[r].tolist(),
            lambda: _describe(g, row),
        )
        sig = _signature_checks(ctx, np.array(scalar_neg, dtype=np.bool_))
        report.record("balanced_brute", sig["brute"], lambda: _describe(g, row))
        report.record("balanced_cycles", sig["cycles"], lambda: _describe(g, row))
        report.record("balanced_algorithm", sig["algo"], lambda: _describe(g, row))
        report.record("compatible_roundtrip", sig["roundtrip"], lambda: _describe(g, row))
        if ctx.connected:
            by_parity = two_clusterable_by_parity(g, val)
            report.record(
                "two_cluster",
                by_parity == sig["cluster_algo"] == sig["cluster_brute"] and (not by_parity or sig["brute"]),
                lambda: _describe(g, row),
            )
    if ctx.eulerian:
        sizes = _kernels.popcount(masks[:, ctx.us] ^ masks[:, ctx.vs])
        bad = []
        for r in range(masks.shape[0]):
            ok = sizes[r].sum() % 2 == 0 and all(sizes[r, idx].sum() % 2 == 0 for idx in ctx.decomposition)
            if not ok:
                bad.append(_describe(g, masks[r].tolist()))
        report.merge_counts("eulerian_parity", masks.shape[0], bad)


def _census(report: SuiteReport, g: Graph) -> None:
    """Over every signature of ``g``: compatible labeling exists iff the scan finds a cut."""
    for sg in all_signatures(g):
        lab = balance_compatible_labeling(sg)
        brute = brute_balance(sg)
        ok = isinstance(lab, Unbalanced) != brute
        if ok and not brute:
            ok = cycle_sign(sg, lab.cycle) is Sign.NEGATIVE
        if ok and brute:
            ok = induce_signed_graph(g, lab).signs == sg.signs
        report.record(
            "signature_census",
            ok,
            lambda: f"n={g.n} signed edges={[(u, v, s.char) for u, v, s in sg.signed_edges()]}",
        )


def verify_theorem_suite(family: Family = Family()) -> SuiteReport:
    t0 = time.perf_counter()
    report = SuiteReport(family)
    graphs = small_graphs(family.max_n, connected=family.connected_only)
    for g in graphs:
        ctx = _GraphContext(g)
        for m in range(1, family.max_m + 1):
            if (1 << m) < g.n:
                continue
            if _valuation_count(g.n, m) > family.budget:
                raise BudgetExceeded(
                    f"{_valuation_count(g.n, m)} valuations for n={g.n}, m={m} exceeds budget {family.budget}"
                )
            _check_instances(report, ctx, exhaustive_masks(g.n, m, family.budget), m)
        _census(report, g)
    rng = np.random.default_rng(family.seed)
    for _ in range(family.random_instances):
        g, masks, m = random_instance(rng, family.random_max_n, family.random_max_m)
        _check_instances(report, _GraphContext(g), masks[None, :], m)
    report.elapsed = time.perf_counter() - t0
    return report


def random_instance(rng: np.random.Generator, max_n: int, max_m: int, p_range=(0.15, 0.5)):
    """One seeded (graph, label masks, ground size) triple with ``2**m >= n``."""
    n = int(rng.integers(1, max_n + 1))
    min_m = max(1, (n - 1).bit_length())
    m = int(rng.integers(min_m, max(min_m, max_m) + 1))
    g = random_graph(n, float(rng.uniform(*p_range)), rng)
    return g, random_masks(n, m, rng), m
