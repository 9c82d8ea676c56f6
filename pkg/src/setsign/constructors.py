"""Ways to build set-valuations for a graph or a signed graph."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from setsign.analysis import is_balanced
from setsign.errors import GroundSetTooSmall
from setsign.graph import Cycle, Graph, SignedGraph
from setsign.valuation import SetLabel, SetValuation

# random_valuation draws masks as int64
MAX_RANDOM_GROUND = 62


@dataclass(frozen=True)
class Unbalanced:
    """Returned instead of a valuation when the signed graph has a negative cycle."""

    cycle: Cycle


def canonical_set_indexer(g: Graph) -> SetValuation:
    """Label vertex ``v`` with ``{v + 1}`` over ground set ``{1..n}``.

    Edge labels are the pairs ``{u + 1, v + 1}``, all distinct, and every
    induced sign is positive.
    """
    ground = max(g.n, 1)
    return SetValuation(ground, tuple(SetLabel(1 << v, ground) for v in range(g.n)))


def balance_compatible_labeling(sg: SignedGraph) -> SetValuation | Unbalanced:
    """A valuation whose induced signature equals ``sg``'s, or a negative cycle.

    With ground set ``{1..n+1}``: a vertex ``v`` on the first side of the
    Harary bipartition gets ``{v+1}`` (odd), one on the second side gets
    ``{v+1, n+1}`` (even).
    """
    bal = is_balanced(sg)
    if not bal:
        return Unbalanced(bal.negative_cycle)
    n = sg.n
    ground = n + 1
    sentinel = 1 << n
    v2 = bal.bipartition.v2
    return SetValuation(
        ground,
        tuple(SetLabel((1 << v) | (sentinel if v in v2 else 0), ground) for v in range(n)),
    )


def random_masks(n: int, m: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` distinct subsets of ``{1..m}`` as bitmasks, uniform without replacement."""
    if m < 1:
        raise GroundSetTooSmall(f"ground set size must be >= 1, got {m}")
    if m > MAX_RANDOM_GROUND:
        raise ValueError(f"ground set size {m} exceeds {MAX_RANDOM_GROUND}")
    if n > (1 << m):
        raise GroundSetTooSmall(f"2^{m} = {1 << m} subsets cannot label {n} vertices injectively")
    return rng.choice(1 << m, size=n, replace=False).astype(np.int64)


def random_valuation(g: Graph, m: int, seed: int) -> SetValuation:
    """Injective labeling drawn uniformly from subsets of ``{1..m}``.

    Deterministic per ``seed``: uses ``numpy.random.default_rng(seed)``
    (PCG64) and ``Generator.choice(2**m, size=n, replace=False)``.
    """
    rng = np.random.default_rng(seed)
    return SetValuation.from_masks(m, random_masks(g.n, m, rng).tolist())
