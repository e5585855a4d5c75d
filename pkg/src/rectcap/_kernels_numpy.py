"""Vectorized numpy fallback kernels.

Same contract as rectcap._kernels_numba, selected via the RECTCAP_BACKEND
environment flag.  Words are materialized level by level as an int8 matrix
(one row per word), so alphabet sizes are limited to k <= 127 -- far beyond
the desk scale this package targets.
"""

import numpy as np


def _hist_size(n, k, r, s):
    if n >= s and k >= r:
        return (n - s + 1) * (k - r + 1) + 1
    return 1


def _batch_capacity(words, r, s):
    """Per-row capacity: sum over s-wide windows of max(0, min - r + 1)."""
    m, n = words.shape
    caps = np.zeros(m, dtype=np.int64)
    if n < s:
        return caps
    for j in range(n - s + 1):
        wmin = words[:, j].copy()
        for d in range(1, s):
            np.minimum(wmin, words[:, j + d], out=wmin)
        contrib = wmin.astype(np.int64) - (r - 1)
        np.maximum(contrib, 0, out=contrib)
        caps += contrib
    return caps


def _finish(words, n, k, r, s):
    caps = _batch_capacity(words, r, s)
    return np.bincount(caps, minlength=_hist_size(n, k, r, s)).astype(np.int64)


def nondecreasing_histogram(n, k, lo, r, s):
    """Capacity histogram over nondecreasing words with letters in {lo..k}."""
    if k > 127:
        raise ValueError("numpy backend stores letters as int8; k must be <= 127")
    hist = np.zeros(_hist_size(n, k, r, s), dtype=np.int64)
    if n == 0:
        hist[0] = 1
        return hist
    if lo > k:
        return hist
    words = np.arange(lo, k + 1, dtype=np.int8).reshape(-1, 1)
    for _ in range(n - 1):
        last = words[:, -1].astype(np.int64)
        counts = k - last + 1
        total = int(counts.sum())
        rows = np.repeat(np.arange(len(words)), counts)
        # grouped aranges: position of each new row within its source group
        starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
        within = np.arange(total) - np.repeat(starts, counts)
        nxt = (last[rows] + within).astype(np.int8)
        words = np.concatenate([words[rows], nxt.reshape(-1, 1)], axis=1)
    return _finish(words, n, k, r, s)


def smirnov_histogram(n, k, lo, barred, r, s):
    """Capacity histogram over Smirnov words with letters in {lo..k}.

    barred > 0 forbids that value as the first letter.
    """
    if k > 127:
        raise ValueError("numpy backend stores letters as int8; k must be <= 127")
    hist = np.zeros(_hist_size(n, k, r, s), dtype=np.int64)
    if n == 0:
        hist[0] = 1
        return hist
    first = np.array([v for v in range(lo, k + 1) if v != barred], dtype=np.int8)
    if first.size == 0:
        return hist
    c = k - lo  # extension choices per row: all of {lo..k} minus the last letter
    if n >= 2 and c == 0:
        return hist
    words = first.reshape(-1, 1)
    for _ in range(n - 1):
        m = len(words)
        last = np.repeat(words[:, -1], c)
        cand = np.tile(np.arange(lo, lo + c, dtype=np.int8), m)
        # skip-encode around the previous letter to avoid an equal pair
        nxt = cand + (cand >= last)
        words = np.concatenate([np.repeat(words, c, axis=0), nxt.reshape(-1, 1)], axis=1)
    return _finish(words, n, k, r, s)
