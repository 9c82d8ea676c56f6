"""Bitmask kernels with a numba path and a pure-numpy path.

Set labels are packed into integers (element ``i`` is bit ``i - 1``). The
kernels here are the inner loops of batch sign induction and of the
partition scans done by the brute-force oracles.

The numba path is used when numba imports and ``SETSIGN_PURE_NUMPY`` is unset
or ``0``. Both backends are always importable as ``NUMBA`` / ``NUMPY`` so they
can be compared against each other.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

ENV_FLAG = "SETSIGN_PURE_NUMPY"

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


# -- numpy ------------------------------------------------------------------

def _popcount_np(x):
    x = np.asarray(x).astype(np.uint64)
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return ((x * _H01) >> np.uint64(56)).astype(np.int64)


def _negative_edges_np(masks, us, vs):
    masks = np.asarray(masks, dtype=np.uint64)
    if masks.ndim == 1:
        masks = masks[None, :]
    diff = masks[:, us] ^ masks[:, vs]
    return (_popcount_np(diff) & 1).astype(np.bool_)


def _pair_parity_np(m):
    """For all ``a, b < 2**m``: parity of ``|a ^ b|`` and whether ``|a|``, ``|b|`` agree in parity."""
    k = 1 << m
    labels = np.arange(k, dtype=np.uint64)
    card = _popcount_np(labels) & 1
    sym = _popcount_np(labels[:, None] ^ labels[None, :]) & 1
    same = card[:, None] == card[None, :]
    return sym.astype(np.bool_), same


def _cut_scan_np(n, us, vs, neg, nonempty):
    if n == 0:
        return -1 if nonempty else 0
    masks = np.arange(1 << n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1
    ok = np.ones(masks.shape[0], dtype=np.bool_)
    if len(us):
        cross = bits[:, us] != bits[:, vs]
        ok &= np.all(cross == np.asarray(neg, dtype=np.bool_)[None, :], axis=1)
    if nonempty:
        ok &= (masks != 0) & (masks != (1 << n) - 1)
    hits = np.flatnonzero(ok)
    return int(hits[0]) if hits.size else -1


def _count_cuts_np(n, us, vs, neg_batch, nonempty):
    """Number of side-masks satisfying the cut condition, per signature row."""
    neg_batch = np.atleast_2d(np.asarray(neg_batch, dtype=np.bool_))
    if n == 0:
        return np.full(neg_batch.shape[0], 0 if nonempty else 1, dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1
    allowed = np.ones(masks.shape[0], dtype=np.bool_)
    if nonempty:
        allowed &= (masks != 0) & (masks != (1 << n) - 1)
    if len(us) == 0:
        return np.full(neg_batch.shape[0], int(allowed.sum()), dtype=np.int64)
    cross = bits[:, us] != bits[:, vs]
    out = np.empty(neg_batch.shape[0], dtype=np.int64)
    for r in range(neg_batch.shape[0]):
        ok = np.all(cross == neg_batch[r][None, :], axis=1) & allowed
        out[r] = int(ok.sum())
    return out


NUMPY = SimpleNamespace(
    name="numpy",
    popcount=_popcount_np,
    negative_edges=_negative_edges_np,
    pair_parity=_pair_parity_np,
    cut_scan=_cut_scan_np,
    count_cuts=_count_cuts_np,
)


# -- numba ------------------------------------------------------------------

def _build_numba():
    from numba import njit

    @njit(cache=True)
    def popcount1(x):
        x = x - ((x >> np.uint64(1)) & _M1)
        x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
        x = (x + (x >> np.uint64(4))) & _M4
        return np.int64((x * _H01) >> np.uint64(56))

    @njit(cache=True)
    def popcount_arr(x):
        flat = x.ravel()
        out = np.empty(flat.size, dtype=np.int64)
        for i in range(flat.size):
            out[i] = popcount1(flat[i])
        return out.reshape(x.shape)

    @njit(cache=True)
    def negative_edges_2d(masks, us, vs):
        k = masks.shape[0]
        e = us.shape[0]
        out = np.empty((k, e), dtype=np.bool_)
        for r in range(k):
            for j in range(e):
                out[r, j] = (popcount1(masks[r, us[j]] ^ masks[r, vs[j]]) & 1) == 1
        return out

    @njit(cache=True)
    def pair_parity(m):
        k = 1 << m
        sym = np.empty((k, k), dtype=np.bool_)
        same = np.empty((k, k), dtype=np.bool_)
        card = np.empty(k, dtype=np.int64)
        for a in range(k):
            card[a] = popcount1(np.uint64(a)) & 1
        for a in range(k):
            for b in range(k):
                sym[a, b] = (popcount1(np.uint64(a ^ b)) & 1) == 1
                same[a, b] = card[a] == card[b]
        return sym, same

    @njit(cache=True)
    def cut_ok(mask, us, vs, neg):
        for j in range(us.shape[0]):
            cross = ((mask >> us[j]) & 1) != ((mask >> vs[j]) & 1)
            if cross != neg[j]:
                return False
        return True

    @njit(cache=True)
    def cut_scan(n, us, vs, neg, nonempty):
        full = (np.int64(1) << n) - 1
        for mask in range(np.int64(1) << n):
            if nonempty and (mask == 0 or mask == full):
                continue
            if cut_ok(mask, us, vs, neg):
                return mask
        return -1

    @njit(cache=True)
    def count_cuts(n, us, vs, neg_batch, nonempty):
        full = (np.int64(1) << n) - 1
        out = np.zeros(neg_batch.shape[0], dtype=np.int64)
        for r in range(neg_batch.shape[0]):
            neg = neg_batch[r]
            for mask in range(np.int64(1) << n):
                if nonempty and (mask == 0 or mask == full):
                    continue
                if cut_ok(mask, us, vs, neg):
                    out[r] += 1
        return out

    def _popcount(x):
        x = np.asarray(x).astype(np.uint64)
        return popcount_arr(x)

    def _negative_edges(masks, us, vs):
        masks = np.asarray(masks, dtype=np.uint64)
        if masks.ndim == 1:
            masks = masks[None, :]
        return negative_edges_2d(
            np.ascontiguousarray(masks),
            np.asarray(us, dtype=np.int64),
            np.asarray(vs, dtype=np.int64),
        )

    def _cut_scan(n, us, vs, neg, nonempty):
        return int(
            cut_scan(
                np.int64(n),
                np.asarray(us, dtype=np.int64),
                np.asarray(vs, dtype=np.int64),
                np.asarray(neg, dtype=np.bool_),
                bool(nonempty),
            )
        )

    def _count_cuts(n, us, vs, neg_batch, nonempty):
        neg_batch = np.atleast_2d(np.asarray(neg_batch, dtype=np.bool_))
        if neg_batch.shape[1] == 0:
            neg_batch = np.zeros((neg_batch.shape[0], 0), dtype=np.bool_)
        return count_cuts(
            np.int64(n),
            np.asarray(us, dtype=np.int64),
            np.asarray(vs, dtype=np.int64),
            np.ascontiguousarray(neg_batch),
            bool(nonempty),
        )

    return SimpleNamespace(
        name="numba",
        popcount=_popcount,
        negative_edges=_negative_edges,
        pair_parity=lambda m: pair_parity(np.int64(m)),
        cut_scan=_cut_scan,
        count_cuts=_count_cuts,
    )


try:
    NUMBA = _build_numba()
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA = None


def _select():
    if os.environ.get(ENV_FLAG, "0") not in ("", "0") or NUMBA is None:
        return NUMPY
    return NUMBA


ACTIVE = _select()

BACKENDS = {"numpy": NUMPY}
if NUMBA is not None:
    BACKENDS["numba"] = NUMBA


def popcount(x):
    return ACTIVE.popcount(x)


def negative_edges(masks, us, vs):
    """Boolean ``(k, E)`` array: edge ``j`` is negative under label row ``r``."""
    return ACTIVE.negative_edges(masks, us, vs)


def pair_parity(m):
    return ACTIVE.pair_parity(m)


def cut_scan(n, us, vs, neg, nonempty=False):
    """Smallest side-mask whose cut is exactly the negative edge set, or -1."""
    return ACTIVE.cut_scan(n, us, vs, neg, nonempty)


def count_cuts(n, us, vs, neg_batch, nonempty=False):
    return ACTIVE.count_cuts(n, us, vs, neg_batch, nonempty)
