"""Subset labels over a ground set ``{1, ..., m}`` and the signatures they induce.

A :class:`SetLabel` packs its elements into an integer bitmask (element ``i``
is bit ``i - 1``), so symmetric difference is ``^`` and cardinality is a
popcount.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from setsign import _kernels
from setsign.errors import (
    EdgeNotInGraph,
    GroundSetMismatch,
    MissingLabel,
    NotInjective,
)
from setsign.graph import Edge, Graph, Sign, SignedGraph, edge_key


@dataclass(frozen=True, slots=True)
class SetLabel:
    mask: int
    ground: int

    def __post_init__(self):
        if self.ground < 1:
            raise ValueError(f"ground set size must be >= 1, got {self.ground}")
        if self.mask < 0 or self.mask >> self.ground:
            raise ValueError(f"mask {self.mask:#x} has elements outside 1..{self.ground}")

    @classmethod
    def of(cls, elements: Iterable[int], ground: int) -> SetLabel:
        mask = 0
        for x in elements:
            x = int(x)
            if not 1 <= x <= ground:
                raise ValueError(f"element {x} outside ground set 1..{ground}")
            mask |= 1 << (x - 1)
        return cls(mask, ground)

    @property
    def elements(self) -> tuple[int, ...]:
        m = self.mask
        out = []
        i = 1
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 1 <= x <= self.ground and bool(self.mask >> (x - 1) & 1)

    def __xor__(self, other: SetLabel) -> SetLabel:
        return symmetric_difference(self, other)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class SetValuation:
    """Vertex ``v`` carries ``labels[v]``; every label lives in ``{1..ground}``."""

    ground: int
    labels: tuple[SetLabel, ...]

    def __post_init__(self):
        for v, lab in enumerate(self.labels):
            if lab.ground != self.ground:
                raise GroundSetMismatch(
                    f"label of vertex {v} is over 1..{lab.ground}, valuation over 1..{self.ground}"
                )

    @classmethod
    def from_sets(cls, ground: int, sets: Sequence[Iterable[int]]) -> SetValuation:
        return cls(ground, tuple(SetLabel.of(s, ground) for s in sets))

    @classmethod
    def from_masks(cls, ground: int, masks: Iterable[int]) -> SetValuation:
        return cls(ground, tuple(SetLabel(int(x), ground) for x in masks))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> SetLabel:
        return self.labels[v]

    @property
    def masks(self) -> np.ndarray:
        return np.array([lab.mask for lab in self.labels], dtype=np.uint64)

    def collision(self) -> tuple[int, int] | None:
        first: dict[int, int] = {}
        for v, lab in enumerate(self.labels):
            if lab.mask in first:
                return first[lab.mask], v
            first[lab.mask] = v
        return None

    def is_injective(self) -> bool:
        return self.collision() is None

    def check_injective(self) -> None:
        pair = self.collision()
        if pair is not None:
            u, v = pair
            raise NotInjective(f"vertices {u} and {v} share label {self.labels[u]!r}", pair)


@dataclass(frozen=True)
class ParityPartition:
    odd: frozenset[int]
    even: frozenset[int]


@dataclass(frozen=True)
class IndexerCheck:
    """Outcome of :func:`is_set_indexer`; truthy when the edge labels are distinct."""

    ok: bool
    collision: tuple[Edge, Edge] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _same_ground(a: SetLabel, b: SetLabel) -> None:
    if a.ground != b.ground:
        raise GroundSetMismatch(f"ground sets differ: 1..{a.ground} vs 1..{b.ground}")


def symmetric_difference(a: SetLabel, b: SetLabel) -> SetLabel:
    _same_ground(a, b)
    return SetLabel(a.mask ^ b.mask, a.ground)


def induced_sign(a: SetLabel, b: SetLabel) -> Sign:
    """Positive iff ``|a ^ b|`` is even. Defined for ``a == b`` too (positive)."""
    _same_ground(a, b)
    return Sign.NEGATIVE if (a.mask ^ b.mask).bit_count() & 1 else Sign.POSITIVE


def same_parity(a: SetLabel, b: SetLabel) -> bool:
    # counts elements directly so it stays independent of induced_sign
    return len(a.elements) % 2 == len(b.elements) % 2


def _require_labels(g: Graph, val: SetValuation) -> None:
    if len(val.labels) < g.n:
        raise MissingLabel(f"valuation labels {len(val.labels)} vertices, graph has {g.n}")


def induced_edge_label(val: SetValuation, g: Graph, e: Sequence[int]) -> SetLabel:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
        raise EdgeNotInGraph(f"({u}, {v}) is not an edge")
    _require_labels(g, val)
    return symmetric_difference(val.labels[u], val.labels[v])


def induce_signed_graph(g: Graph, val: SetValuation) -> SignedGraph:
    _require_labels(g, val)
    if len(val.labels) > g.n:
        val = SetValuation(val.ground, val.labels[: g.n])
    val.check_injective()
    labels = val.labels
    return SignedGraph(g, tuple(induced_sign(labels[u], labels[v]) for u, v in g.edges))


def induced_negative_edges(g: Graph, masks) -> np.ndarray:
    """Batch form of :func:`induce_signed_graph`.

    ``masks`` is a ``(k, n)`` array of label bitmasks (one valuation per
    row). Returns a boolean ``(k, |E|)`` array marking negative edges.
    Injectivity is not checked.
    """
    us = np.array([u for u, _ in g.edges], dtype=np.int64)
    vs = np.array([v for _, v in g.edges], dtype=np.int64)
    return _kernels.negative_edges(masks, us, vs)


def parity_partition(val: SetValuation) -> ParityPartition:
    odd = frozenset(v for v, lab in enumerate(val.labels) if len(lab) % 2)
    even = frozenset(range(len(val.labels))) - odd
    return ParityPartition(odd, even)


def is_set_indexer(g: Graph, val: SetValuation) -> IndexerCheck:
    _require_labels(g, val)
    seen: dict[int, Edge] = {}
    for u, v in g.edges:
        lab = val.labels[u].mask ^ val.labels[v].mask
        if lab in seen:
            return IndexerCheck(False, (seen[lab], edge_key(u, v)))
        seen[lab] = (u, v)
    return IndexerCheck(True)
