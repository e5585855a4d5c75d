"""JIT-compiled enumeration kernels.

Same contract as rectcap._kernels_numpy: each function enumerates one word
family and returns the histogram of rectangle capacities as an int64 array
(index = capacity, value = word count).  Letters and capacities are
machine-width here; callers convert counts to arbitrary precision.
"""

import numpy as np
from numba import njit

_OPTS = dict(cache=True, nogil=True)


@njit(**_OPTS)
def _window_capacity(w, n, r, s, q):
    """Sum over s-wide windows of max(0, min height - r + 1).

    q is a caller-provided int64 scratch array of length >= n; it holds a
    monotonic queue of indices whose heights increase toward the back.
    """
    if n < s:
        return 0
    total = 0
    head = 0
    tail = 0
    for i in range(n):
        while tail > head and w[q[tail - 1]] >= w[i]:
            tail -= 1
        q[tail] = i
        tail += 1
        if q[head] <= i - s:
            head += 1
        if i >= s - 1:
            m = w[q[head]]
            if m >= r:
                total += m - r + 1
    return total


@njit(**_OPTS)
def nondecreasing_histogram(n, k, lo, r, s):
    """Capacity histogram over nondecreasing words with letters in {lo..k}."""
    maxcap = 0
    if n >= s and k >= r:
        maxcap = (n - s + 1) * (k - r + 1)
    hist = np.zeros(maxcap + 1, dtype=np.int64)
    if n == 0:
        hist[0] = 1
        return hist
    if lo > k:
        return hist
    w = np.empty(n, dtype=np.int64)
    q = np.empty(n, dtype=np.int64)
    for j in range(n):
        w[j] = lo
    while True:
        hist[_window_capacity(w, n, r, s, q)] += 1
        i = n - 1
        while i >= 0 and w[i] == k:
            i -= 1
        if i < 0:
            return hist
        v = w[i] + 1
        for j in range(i, n):
            w[j] = v


@njit(**_OPTS)
def smirnov_histogram(n, k, lo, barred, r, s):
    """Capacity histogram over Smirnov words with letters in {lo..k}.

    barred > 0 forbids that value as the first letter.
    """
    maxcap = 0
    if n >= s and k >= r:
        maxcap = (n - s + 1) * (k - r + 1)
    hist = np.zeros(maxcap + 1, dtype=np.int64)
    if n == 0:
        hist[0] = 1
        return hist
    if lo > k or (n >= 2 and k - lo < 1):
        return hist
    w = np.empty(n, dtype=np.int64)
    q = np.empty(n, dtype=np.int64)
    v = lo
    if v == barred:
        v += 1
    if v > k:
        return hist
    w[0] = v
    for j in range(1, n):
        w[j] = lo if w[j - 1] != lo else lo + 1
    while True:
        hist[_window_capacity(w, n, r, s, q)] += 1
        i = n - 1
        while i >= 0:
            v = w[i] + 1
            while v <= k and ((i > 0 and v == w[i - 1]) or (i == 0 and v == barred)):
                v += 1
            if v <= k:
                w[i] = v
                for j in range(i + 1, n):
                    w[j] = lo if w[j - 1] != lo else lo + 1
                break
            i -= 1
        if i < 0:
            return hist
