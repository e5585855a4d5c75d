"""The rectangle-capacity statistic and the brute-force counting oracle.

For a word drawn as a bargraph (column i has height w_i), the capacity for
fixed (r, s) is the number of axis-aligned r-tall, s-wide cell rectangles
that fit inside the bargraph:

    sum over windows of s consecutive columns of max(0, min(window) - r + 1)

The oracle sums t**capacity over a whole word family.  It deliberately
shares no code with the generating-function builders in rectcap.genfun --
coefficientwise agreement between the two is the package's core check.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from . import backend, words
from .errors import BudgetExceededError, ParameterDomainError
from .series import LaurentPoly
from .words import FamilySpec

DEFAULT_BUDGET = 10**6


def _check_rect(r: int, s: int) -> None:
    if r < 1 or s < 1:
        raise ParameterDomainError(f"rectangle sides r={r}, s={s} must be >= 1")


def rect_capacity(word, r: int, s: int) -> int:
    """Number of r x s rectangles inside the bargraph of `word`.

    Runs in O(n) per word via a monotonic queue of column indices whose
    heights increase toward the back; the front is the window minimum.
    """
    _check_rect(r, s)
    n = len(word)
    if n < s:
        return 0
    total = 0
    q: deque[int] = deque()
    for i, h in enumerate(word):
        while q and word[q[-1]] >= h:
            q.pop()
        q.append(i)
        if q[0] <= i - s:
            q.popleft()
        if i >= s - 1:
            m = word[q[0]]
            if m >= r:
                total += m - r + 1
    return total


@dataclass(frozen=True)
class DistPoly:
    """Distribution of capacities over one family cell: sum of t**capacity."""

    poly: LaurentPoly
    spec: FamilySpec
    n: int
    k: int
    r: int
    s: int

    def count(self) -> int:
        """Number of words (the distribution at t = 1)."""
        return self.poly.eval_at_one()

    def total(self) -> int:
        """Sum of capacities (the t-derivative at t = 1)."""
        return self.poly.derivative_at_one()


def _check_budget(spec, n, k, budget):
    if budget is not None and words.size_bound(spec, n, k) > budget:
        raise BudgetExceededError(
            f"family bound {words.size_bound(spec, n, k)} exceeds budget {budget}"
            f" for {spec} n={n} k={k}"
        )


def _kernel_histogram(spec, n, k, r, s):
    """Map the family spec onto a kernel call, or return None if unsupported."""
    kern = backend.kernels()
    rest = spec.restriction
    lo, barred = 1, 0
    if rest is not None:
        if rest.kind == words.MIN_LETTER:
            lo = rest.param
        elif rest.kind == words.MIN_LETTER_BARRED_FIRST:
            lo, barred = rest.param, rest.param
        elif rest.kind == words.BARRED_FIRST:
            barred = rest.param
        else:
            return None  # positional restrictions go through the slow path
    if spec.family == words.NONDECREASING:
        if barred:
            return None
        return kern.nondecreasing_histogram(n, k, lo, r, s)
    return kern.smirnov_histogram(n, k, lo, barred, r, s)


def oracle_distribution(
    spec: FamilySpec,
    n: int,
    k: int,
    r: int,
    s: int,
    budget: int | None = DEFAULT_BUDGET,
) -> DistPoly:
    """Exact capacity distribution over the family, by full enumeration."""
    words.validate(spec, n, k)
    _check_rect(r, s)
    _check_budget(spec, n, k, budget)
    hist = _kernel_histogram(spec, n, k, r, s)
    if hist is not None:
        poly = LaurentPoly({c: int(v) for c, v in enumerate(hist) if v})
    else:
        counts = Counter(
            rect_capacity(w, r, s) for w in words.enumerate_words(spec, n, k)
        )
        poly = LaurentPoly.from_counts(counts)
    return DistPoly(poly, spec, n, k, r, s)


def oracle_total(
    spec: FamilySpec,
    n: int,
    k: int,
    r: int,
    s: int,
    budget: int | None = DEFAULT_BUDGET,
) -> int:
    """Sum of rect_capacity over the family (total rectangle count)."""
    words.validate(spec, n, k)
    _check_rect(r, s)
    _check_budget(spec, n, k, budget)
    hist = _kernel_histogram(spec, n, k, r, s)
    if hist is not None:
        return sum(c * int(v) for c, v in enumerate(hist) if v)
    return sum(rect_capacity(w, r, s) for w in words.enumerate_words(spec, n, k))
