"""Word families on the alphabet [k] and their exact enumeration.

Two base families: nondecreasing words (w_i <= w_{i+1}) and Smirnov words
(no two equal adjacent letters).  Restrictions narrow a family to the
subsets used by the recurrence decompositions: a minimum letter, the
position of the distinguished letter 1, or a forbidden first letter.

Enumeration order is lexicographic so golden tests are deterministic.
A word is a plain tuple of ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterDomainError

NONDECREASING = "nondecreasing"
SMIRNOV = "smirnov"

# restriction kinds
FIRST_ONE_AT = "first-one-at"
MIN_LETTER = "geq"
MIN_LETTER_BARRED_FIRST = "geq-barred-first"
BARRED_FIRST = "barred-first"

_KINDS = (FIRST_ONE_AT, MIN_LETTER, MIN_LETTER_BARRED_FIRST, BARRED_FIRST)


@dataclass(frozen=True)
class Restriction:
    kind: str
    param: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ParameterDomainError(f"unknown restriction kind {self.kind!r}")


def first_one_at(i: int) -> Restriction:
    """Words whose letter 1 sits exactly at position i (1-based); i = 0 bans it.

    Nondecreasing: w_i = 1 and w_j > 1 for i < j <= n (the ones form a prefix).
    Smirnov: w_i = 1 and w_j > 1 for j < i (first occurrence of 1 is at i).
    """
    return Restriction(FIRST_ONE_AT, i)


def min_letter(m: int) -> Restriction:
    """Words with every letter >= m."""
    return Restriction(MIN_LETTER, m)


def min_letter_barred_first(m: int) -> Restriction:
    """Words with every letter >= m and first letter != m."""
    return Restriction(MIN_LETTER_BARRED_FIRST, m)


def barred_first(m: int) -> Restriction:
    """Words whose first letter differs from m."""
    return Restriction(BARRED_FIRST, m)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    restriction: Restriction | None = None

    def __post_init__(self):
        if self.family not in (NONDECREASING, SMIRNOV):
            raise ParameterDomainError(f"unknown family {self.family!r}")


def validate(spec: FamilySpec, n: int, k: int) -> None:
    """Check (spec, n, k) against the documented parameter domains."""
    if n < 0:
        raise ParameterDomainError(f"word length n={n} must be >= 0")
    if k < 1:
        raise ParameterDomainError(f"alphabet size k={k} must be >= 1")
    r = spec.restriction
    if r is None:
        return
    if r.kind == FIRST_ONE_AT:
        if not 0 <= r.param <= n:
            raise ParameterDomainError(f"position i={r.param} outside 0..n={n}")
    elif r.kind in (MIN_LETTER, MIN_LETTER_BARRED_FIRST):
        if not 1 <= r.param <= k:
            raise ParameterDomainError(f"minimum letter m={r.param} outside 1..k={k}")
    elif r.kind == BARRED_FIRST:
        if not 1 <= r.param <= k:
            raise ParameterDomainError(f"barred letter m={r.param} outside 1..k={k}")


def _nondecreasing(n, k, lo):
    """Nondecreasing words over {lo..k}, lexicographic."""
    if n == 0:
        yield ()
        return
    if lo > k:
        return
    word = [lo] * n
    while True:
        yield tuple(word)
        i = n - 1
        while i >= 0 and word[i] == k:
            i -= 1
        if i < 0:
            return
        v = word[i] + 1
        for j in range(i, n):
            word[j] = v


def _smirnov(n, k, lo, barred=0, prev=0):
    """Smirnov words over {lo..k}, lexicographic.

    barred: forbidden first letter (0 for none); prev: virtual letter before
    position 1 (0 for none) so suffixes after a fixed letter reuse this path.
    """
    if n == 0:
        yield ()
        return
    word = [0] * n

    def descend(pos):
        before = word[pos - 1] if pos else prev
        for v in range(lo, k + 1):
            if v == before or (pos == 0 and v == barred):
                continue
            word[pos] = v
            if pos == n - 1:
                yield tuple(word)
            else:
                yield from descend(pos + 1)

    yield from descend(0)


def enumerate_words(spec: FamilySpec, n: int, k: int):
    """Yield the words of the family exactly once, in lexicographic order."""
    validate(spec, n, k)
    r = spec.restriction
    nd = spec.family == NONDECREASING
    if r is None:
        yield from (_nondecreasing(n, k, 1) if nd else _smirnov(n, k, 1))
    elif r.kind == MIN_LETTER:
        yield from (_nondecreasing(n, k, r.param) if nd else _smirnov(n, k, r.param))
    elif r.kind == MIN_LETTER_BARRED_FIRST:
        if nd:
            # the first letter of a nondecreasing word is its minimum, so
            # "letters >= m, first != m" collapses to "letters >= m+1"
            yield from _nondecreasing(n, k, r.param + 1)
        else:
            yield from _smirnov(n, k, r.param, barred=r.param)
    elif r.kind == BARRED_FIRST:
        if nd:
            yield from _nd_barred_first(n, k, r.param)
        else:
            yield from _smirnov(n, k, 1, barred=r.param)
    elif r.kind == FIRST_ONE_AT:
        i = r.param
        if nd:
            if i == 0:
                yield from _nondecreasing(n, k, 2)
            else:
                prefix = (1,) * i
                for tail in _nondecreasing(n - i, k, 2):
                    yield prefix + tail
        else:
            if i == 0:
                yield from _smirnov(n, k, 2)
            else:
                for head in _smirnov(i - 1, k, 2):
                    for tail in _smirnov(n - i, k, 1, prev=1):
                        yield head + (1,) + tail


def _nd_barred_first(n, k, m):
    if n == 0:
        yield ()
        return
    for w in _nondecreasing(n, k, 1):
        if w[0] != m:
            yield w


def is_member(spec: FamilySpec, word, k: int) -> bool:
    """Membership predicate used to cross-check the enumerators."""
    n = len(word)
    if any(not 1 <= c <= k for c in word):
        return False
    if spec.family == NONDECREASING:
        if any(word[i] > word[i + 1] for i in range(n - 1)):
            return False
    else:
        if any(word[i] == word[i + 1] for i in range(n - 1)):
            return False
    r = spec.restriction
    if r is None:
        return True
    if r.kind == MIN_LETTER:
        return all(c >= r.param for c in word)
    if r.kind == MIN_LETTER_BARRED_FIRST:
        return all(c >= r.param for c in word) and (n == 0 or word[0] != r.param)
    if r.kind == BARRED_FIRST:
        return n == 0 or word[0] != r.param
    if r.kind == FIRST_ONE_AT:
        i = r.param
        if i == 0:
            return all(c > 1 for c in word)
        if n < i or word[i - 1] != 1:
            return False
        if spec.family == NONDECREASING:
            return all(word[j] > 1 for j in range(i, n))
        return all(word[j] > 1 for j in range(i - 1))
    raise ParameterDomainError(f"unknown restriction kind {r.kind!r}")


def cardinality(spec: FamilySpec, n: int, k: int) -> int:
    """Exact size of the family; closed form where known, else by enumeration."""
    validate(spec, n, k)
    r = spec.restriction
    if spec.family == NONDECREASING:
        if r is None:
            return math.comb(n + k - 1, k - 1)
        return sum(1 for _ in enumerate_words(spec, n, k))
    if r is None:
        return 1 if n == 0 else k * (k - 1) ** (n - 1)
    if r.kind == MIN_LETTER:
        m = r.param
        return 1 if n == 0 else (k - m + 1) * (k - m) ** (n - 1)
    if r.kind == MIN_LETTER_BARRED_FIRST:
        return (k - r.param) ** n
    if r.kind == FIRST_ONE_AT and r.param == 1:
        return 0 if n == 0 else (k - 1) ** (n - 1)
    return sum(1 for _ in enumerate_words(spec, n, k))


def size_bound(spec: FamilySpec, n: int, k: int) -> int:
    """Cheap upper bound on the family size, for enumeration budgets."""
    if spec.family == NONDECREASING:
        return math.comb(n + k - 1, k - 1)
    return 1 if n == 0 else k * (k - 1) ** (n - 1)
