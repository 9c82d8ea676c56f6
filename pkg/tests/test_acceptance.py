"""Exit criteria for the package, one test per criterion.

Each test records a one-line verdict; ``conftest.pytest_terminal_summary``
prints them after the run. Time limits are wall-clock on the test machine
and exclude one-off numba compilation (kernels are warmed up first).
"""

import itertools
import time

import numpy as np
import pytest

from setsign import _kernels
from setsign.analysis import (
    eulerian_cycle_decomposition,
    eulerian_label_sum_parity,
    is_balanced,
    is_eulerian,
    is_two_clusterable,
    two_clusterable_by_parity,
)
from setsign.constructors import (
    Unbalanced,
    balance_compatible_labeling,
    canonical_set_indexer,
    random_masks,
)
from setsign.graph import (
    Sign,
    SignedGraph,
    build_graph,
    connected_components,
    cycle_sign,
    enumerate_cycles,
)
from setsign.io import (
    parse_signed_graph,
    parse_valuation,
    serialize_signed_graph,
    serialize_valuation_json,
    serialize_valuation_text,
)
from setsign.oracle import (
    all_signatures,
    brute_balance,
    brute_two_cluster,
    exhaustive_masks,
    random_graph,
    random_instance,
    simple_paths,
    small_graphs,
)
from setsign.valuation import (
    SetLabel,
    SetValuation,
    induce_signed_graph,
    induced_sign,
    is_set_indexer,
    same_parity,
)

P, N = Sign.POSITIVE, Sign.NEGATIVE
RESULTS: list[str] = []


def verdict(number, title, ok, detail):
    RESULTS.append(f"criterion {number} {'PASS' if ok else 'FAIL'}  {title}: {detail}")


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    k3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    brute_balance(SignedGraph.all_positive(k3))
    brute_two_cluster(SignedGraph.all_positive(k3))
    _kernels.pair_parity(2)
    _kernels.popcount(np.arange(4))


def _induced_family_n5_m3():
    """Every connected graph on <= 5 vertices with every injective labeling over {1,2,3}."""
    for g in small_graphs(5, connected=True):
        for row in exhaustive_masks(g.n, 3):
            yield g, SetValuation.from_masks(3, row.tolist())


def _random_family(count=10_000, seed=20240601):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        g, masks, m = random_instance(rng, max_n=10, max_m=6)
        yield g, SetValuation.from_masks(m, masks.tolist())


# 1 -------------------------------------------------------------------------

def test_criterion_1_parity_sign_law():
    t0 = time.perf_counter()
    bad = 0
    pairs = 0
    # m <= 5 covers every small ground set; m = 10 gives the full 1024 x 1024 label pairs
    for m in (1, 2, 3, 4, 5, 10):
        labels = [SetLabel(mask, m) for mask in range(1 << m)]
        for a in labels:
            for b in labels:
                pairs += 1
                if (induced_sign(a, b) is P) != same_parity(a, b):
                    bad += 1
        # batch kernel route over the same pairs
        sym_odd, same = _kernels.pair_parity(m)
        bad += int(np.count_nonzero(~sym_odd != same))
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 5.0
    verdict(1, "parity-sign law", ok, f"{pairs} label pairs, {bad} mismatches, {elapsed:.2f}s (limit 5s)")
    assert bad == 0
    assert elapsed < 5.0


# 2 -------------------------------------------------------------------------

def _balanced_three_ways(g, val, cycles):
    sg = induce_signed_graph(g, val)
    algo = bool(is_balanced(sg))
    by_cycles = all(cycle_sign(sg, c) is P for c in cycles)
    brute = brute_balance(sg)
    return algo and by_cycles and brute, sg


def test_criterion_2_universal_balance():
    t0 = time.perf_counter()
    instances = bad = 0
    cycles_of = {}
    for g, val in _induced_family_n5_m3():
        cycles = cycles_of.setdefault(g, enumerate_cycles(g))
        ok, _ = _balanced_three_ways(g, val, cycles)
        instances += 1
        bad += not ok
    exhaustive = instances
    for g, val in _random_family():
        ok, _ = _balanced_three_ways(g, val, enumerate_cycles(g))
        instances += 1
        bad += not ok
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 60.0
    verdict(
        2, "induced signed graphs are balanced", ok,
        f"{exhaustive} exhaustive + {instances - exhaustive} random instances, "
        f"{bad} counterexamples, {elapsed:.1f}s (limit 60s)",
    )
    assert exhaustive > 100_000 and instances - exhaustive == 10_000
    assert bad == 0
    assert elapsed < 60.0


# 3 + 4 ---------------------------------------------------------------------

def _signature_family():
    for g in small_graphs(5, connected=True):
        yield from all_signatures(g)


def test_criterion_3_balance_characterization():
    t0 = time.perf_counter()
    total = mismatches = balanced = 0
    for sg in _signature_family():
        total += 1
        truth = brute_balance(sg)
        lab = balance_compatible_labeling(sg)
        if truth:
            balanced += 1
            ok = not isinstance(lab, Unbalanced) and induce_signed_graph(sg.graph, lab).signs == sg.signs
        else:
            ok = isinstance(lab, Unbalanced)
        mismatches += not ok
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 60.0
    verdict(
        3, "compatible labeling exists iff balanced", ok,
        f"{total} signed graphs ({balanced} balanced), {mismatches} mismatches, {elapsed:.2f}s (limit 60s)",
    )
    assert mismatches == 0
    assert elapsed < 60.0


def test_criterion_4_harary_certificates():
    total = bad = 0
    for sg in _signature_family():
        total += 1
        res = is_balanced(sg)
        if res:
            bp = res.bipartition
            ok = (
                bp.v1 | bp.v2 == set(range(sg.n))
                and not bp.v1 & bp.v2
                and bp.cut(sg.graph) == set(sg.negative_edges)
            )
        else:
            ok = cycle_sign(sg, res.negative_cycle) is N
        bad += not ok
    verdict(4, "Harary certificates", bad == 0, f"{total} signed graphs, {bad} bad certificates")
    assert bad == 0


# 5 -------------------------------------------------------------------------

def test_criterion_5_path_consistency():
    """Every balanced signature of a connected graph is the cut of some (V1, V2);
    enumerating all bipartitions with vertex 0 in V1 covers them all."""
    t0 = time.perf_counter()
    instances = pairs_checked = bad = 0
    for g in small_graphs(7, connected=True):
        if g.n < 2:
            continue
        us = np.array([u for u, _ in g.edges])
        vs = np.array([v for _, v in g.edges])
        path_rows = {}
        for s, t in itertools.combinations(range(g.n), 2):
            rows = []
            for path in simple_paths(g, s, t):
                row = np.zeros(g.m, dtype=np.int64)
                for i in range(len(path) - 1):
                    row[g.index_of(path[i], path[i + 1])] = 1
                rows.append(row)
            path_rows[s, t] = np.array(rows)
        masks = np.arange(1 << (g.n - 1), dtype=np.int64) << 1
        neg = ((masks[:, None] >> us) & 1) != ((masks[:, None] >> vs) & 1)
        for r in range(neg.shape[0]):
            sg = SignedGraph(g, tuple(N if x else P for x in neg[r]))
            if not is_balanced(sg):
                bad += 1
                continue
            instances += 1
            for rows in path_rows.values():
                parities = (rows @ neg[r].astype(np.int64)) % 2
                pairs_checked += 1
                bad += int(parities.min() != parities.max())
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 30.0
    verdict(
        5, "path-sign consistency", ok,
        f"{instances} balanced instances, {pairs_checked} vertex pairs, {bad} violations, {elapsed:.1f}s (limit 30s)",
    )
    assert bad == 0
    assert elapsed < 30.0


# 6 -------------------------------------------------------------------------

def test_criterion_6_two_clusterability():
    total = bad = all_pos = 0

    def check(g, val):
        sg = induce_signed_graph(g, val)
        by_parity = two_clusterable_by_parity(g, val)
        algo = bool(is_two_clusterable(sg))
        brute = brute_two_cluster(sg)
        ok = by_parity == algo == brute
        if algo:
            ok = ok and bool(is_balanced(sg))
        positive = N not in sg.signs
        if positive:
            ok = ok and not algo and not brute
        return ok, positive

    family = itertools.chain(_induced_family_n5_m3(), _random_family())
    for g, val in family:
        if g.n == 0 or len(connected_components(g)) != 1:
            continue
        ok, positive = check(g, val)
        total += 1
        all_pos += positive
        bad += not ok
    verdict(
        6, "2-clusterability three ways", bad == 0,
        f"{total} connected instances ({all_pos} all-positive), {bad} counterexamples",
    )
    assert total > 100_000
    assert bad == 0


# 7 -------------------------------------------------------------------------

def _random_set_indexer(g, rng):
    m = max(3, g.n + 1)
    while True:
        val = SetValuation.from_masks(m, random_masks(g.n, m, rng).tolist())
        if is_set_indexer(g, val):
            return val


def test_criterion_7_eulerian_parity():
    t0 = time.perf_counter()
    graphs = [g for g in small_graphs(7) if g.m > 0 and is_eulerian(g)]
    rng = np.random.default_rng(7)
    runs = bad = 0
    for g in graphs:
        dec = eulerian_cycle_decomposition(g)
        used = sorted(e for c in dec for e in c.edges())
        bad += used != sorted(g.edges)
        vals = [canonical_set_indexer(g)] + [_random_set_indexer(g, rng) for _ in range(100)]
        for val in vals:
            rep = eulerian_label_sum_parity(g, val)
            runs += 1
            ok = rep.total % 2 == 0
            ok &= all(c.total % 2 == 0 and c.negative_count % 2 == 0 for c in rep.cycles)
            ok &= all(c.positive_sum % 2 == 0 and c.negative_sum % 2 == 0 for c in rep.cycles)
            ok &= sum(c.total for c in rep.cycles) == rep.total
            bad += not ok
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 30.0
    verdict(
        7, "Eulerian label-size parity", ok,
        f"{len(graphs)} Eulerian graphs, {runs} set-indexers, {bad} violations, {elapsed:.1f}s (limit 30s)",
    )
    assert len(graphs) > 0
    assert bad == 0
    assert elapsed < 30.0


# 8 -------------------------------------------------------------------------

def test_criterion_8_canonical_indexer():
    t0 = time.perf_counter()
    graphs = list(small_graphs(7))
    rng = np.random.default_rng(8)
    for n in range(8, 101):
        graphs.append(random_graph(n, float(rng.uniform(0.02, 0.5)), rng))
    graphs.append(build_graph(100, list(itertools.combinations(range(100), 2))))
    bad = sum(not is_set_indexer(g, canonical_set_indexer(g)) for g in graphs)
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 5.0
    verdict(8, "canonical labeling is a set-indexer", ok, f"{len(graphs)} graphs (n <= 100), {bad} failures, {elapsed:.2f}s (limit 5s)")
    assert bad == 0
    assert elapsed < 5.0


# 9 -------------------------------------------------------------------------

def test_criterion_9_io_determinism():
    rng = np.random.default_rng(9)
    bad = 0
    for _ in range(1000):
        g, masks, m = random_instance(rng, max_n=12, max_m=6)
        signs = rng.random(g.m) < 0.5
        sg = SignedGraph(g, tuple(N if x else P for x in signs))
        val = SetValuation.from_masks(m, masks.tolist())
        text = serialize_signed_graph(sg)
        back, names = parse_signed_graph(text)
        bad += back != sg or serialize_signed_graph(back, names) != text
        for ser in (serialize_valuation_text, serialize_valuation_json):
            doc = ser(val, names)
            again, order = parse_valuation(doc, names)
            bad += again != val or ser(again, order) != doc
    verdict(9, "I/O round trips", bad == 0, f"1000 instances x 3 documents, {bad} mismatches")
    assert bad == 0
