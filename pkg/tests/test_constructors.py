import numpy as np
import pytest

from setsign.analysis import is_balanced
from setsign.constructors import (
    Unbalanced,
    balance_compatible_labeling,
    canonical_set_indexer,
    random_valuation,
)
from setsign.errors import GroundSetTooSmall
from setsign.graph import Cycle, build_graph, cycle_sign
from setsign.oracle import random_graph
from setsign.valuation import induce_signed_graph, is_set_indexer

from conftest import N, P, signed


def test_canonical_triangle(triangle):
    val = canonical_set_indexer(triangle)
    assert val.ground == 3
    assert [lab.elements for lab in val.labels] == [(1,), (2,), (3,)]
    edge_labels = {(val[u] ^ val[v]).elements for u, v in triangle.edges}
    assert edge_labels == {(1, 2), (2, 3), (1, 3)}
    assert is_set_indexer(triangle, val)
    assert set(induce_signed_graph(triangle, val).signs) == {P}


def test_canonical_single_vertex():
    g = build_graph(1, [])
    val = canonical_set_indexer(g)
    assert [lab.elements for lab in val.labels] == [(1,)]


def test_canonical_star():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    val = canonical_set_indexer(star)
    assert len({lab.mask for lab in val.labels}) == 4
    labels = [(val[u] ^ val[v]).elements for u, v in star.edges]
    assert labels == [(1, 2), (1, 3), (1, 4)]
    assert set(induce_signed_graph(star, val).signs) == {P}


@pytest.mark.parametrize("seed", range(20))
def test_canonical_is_indexer_random(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 101))
    g = random_graph(n, float(rng.uniform(0.05, 0.5)), rng)
    assert is_set_indexer(g, canonical_set_indexer(g))


def test_compatible_all_positive_triangle():
    sg = signed(3, [(0, 1, P), (1, 2, P), (0, 2, P)])
    val = balance_compatible_labeling(sg)
    assert [lab.elements for lab in val.labels] == [(1,), (2,), (3,)]
    assert induce_signed_graph(sg.graph, val).signs == sg.signs


def test_compatible_alternating_square():
    sg = signed(4, [(0, 1, P), (1, 2, N), (2, 3, P), (3, 0, N)])
    val = balance_compatible_labeling(sg)
    assert val.ground == 5
    assert [lab.elements for lab in val.labels] == [(1,), (2,), (3, 5), (4, 5)]
    assert induce_signed_graph(sg.graph, val).signs == sg.signs


def test_compatible_unbalanced_triangle():
    sg = signed(3, [(0, 1, P), (1, 2, P), (0, 2, N)])
    res = balance_compatible_labeling(sg)
    assert isinstance(res, Unbalanced)
    assert res.cycle == Cycle((0, 1, 2))
    assert cycle_sign(sg, res.cycle) is N


def test_compatible_disconnected():
    sg = signed(6, [(0, 1, N), (1, 2, P), (3, 4, N), (4, 5, N), (3, 5, P)])
    val = balance_compatible_labeling(sg)
    assert val.is_injective()
    assert induce_signed_graph(sg.graph, val).signs == sg.signs


def test_random_valuation_injective(triangle):
    val = random_valuation(triangle, 2, seed=3)
    assert val.ground == 2 and val.is_injective() and len(val) == 3


def test_random_valuation_too_small(triangle):
    with pytest.raises(GroundSetTooSmall):
        random_valuation(triangle, 1, seed=0)


def test_random_valuation_deterministic(k4):
    assert random_valuation(k4, 5, seed=42) == random_valuation(k4, 5, seed=42)
    draws = {random_valuation(k4, 5, seed=s) for s in range(10)}
    assert len(draws) > 1


def test_random_valuation_balanced(k4):
    for seed in range(30):
        sg = induce_signed_graph(k4, random_valuation(k4, 4, seed))
        assert is_balanced(sg)
