"""Generating functions and closed forms for rectangle counts.

Bivariate series live in XSeries form: x marks word length, t marks the
number of r x s rectangles.  Six distribution series are built from their
closed/recursive displays (never from the enumeration oracle, which stays
an independent arbiter):

  nondecreasing words, 1 x s rectangles            (gf_nondecreasing_1xs)
  nondecreasing words with letters >= r-1, r x s   (gf_nondecreasing_geq)
  nondecreasing words, r x s with r >= 2           (gf_nondecreasing)
  Smirnov words, 1 x s                             (gf_smirnov_1xs)
  Smirnov words with letters >= r-1, r x s         (gf_smirnov_geq)
  Smirnov words, r x s with r >= 2                 (gf_smirnov)

plus t-free total-count series (gf_total), closed-form totals
(closed_total) and the small worked displays (special_formula) that the
crosscheck harness compares against each other and the oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterDomainError, UnsupportedRegimeError
from .series import LaurentPoly, XSeries

NONDECREASING = "nondecreasing"
SMIRNOV = "smirnov"


def binom(a: int, b: int) -> int:
    """Binomial with the conventions the displays rely on.

    C(a, b) = 0 for b < 0 and for 0 <= a < b; C(a, 0) = 1 for every integer
    a (the case C(-1, 0) = 1 occurs in the s = 1 totals).  A negative top
    with positive bottom never arises in a valid call and is rejected.
    """
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < 0:
        raise ParameterDomainError(f"binomial C({a},{b}) with negative top")
    if b > a:
        return 0
    return math.comb(a, b)


def _t(e: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly.term(c, e)


def _xp(pairs, order: int) -> XSeries:
    return XSeries.x_poly(pairs, order)


def _inv_one_minus(p, order: int) -> XSeries:
    """Series for 1 / (1 - p*x) with p an int or LaurentPoly."""
    return _xp([(0, 1), (1, -p if isinstance(p, LaurentPoly) else -_t(0, p))], order).invert()


def _inv_one_minus_x_pow(e: int, order: int) -> XSeries:
    """Series for 1 / (1 - x)**e."""
    return (_xp([(0, 1), (1, -1)], order) ** e).invert()


# ---------------------------------------------------------------------------
# recurrence kernels
# ---------------------------------------------------------------------------

def level_kernel_1xs(m: int, s: int, order: int) -> XSeries:
    """Per-level kernel of the nondecreasing 1 x s series (alphabet size m)."""
    if m < 1 or s < 1:
        raise ParameterDomainError(f"kernel needs m>=1, s>=1, got m={m}, s={s}")
    head = _xp([(j, binom(j + m - 1, m - 1)) for j in range(s - 1)], order)
    geom = _inv_one_minus(_t(1), order)  # 1/(1-tx)
    mid = _xp([(s - 1, binom(s + m - 3, m - 1))], order) * geom
    tail = geom * _xp(
        [(j, _t(j, binom(j + m - 2, m - 2))) for j in range(s - 1)], order
    ) * _t(-(s - 1))
    return head + mid - tail


def level_kernel_geq(m: int, r: int, s: int, order: int) -> XSeries:
    """Per-level kernel of the min-letter r x s series (alphabet size m >= r-1)."""
    if m < r - 1 or r < 2 or s < 1:
        raise ParameterDomainError(f"kernel needs m>=r-1>=1, s>=1, got m={m}, r={r}, s={s}")
    head = _xp([(j, binom(j + m - r + 1, m - r + 1)) for j in range(s)], order)
    geom = _inv_one_minus(1, order)  # 1/(1-x)
    mid = _xp([(s, binom(s + m - r, s - 1))], order) * geom
    tail = geom * _xp(
        [(j, _t(j, binom(j + m - r, m - r))) for j in range(s)], order
    ) * _t(-(s - 1))
    return head + mid - tail


def boundary_poly(k: int, r: int, s: int, order: int) -> XSeries:
    """Additive boundary correction of the nondecreasing r x s series."""
    if k < r or r < 2:
        raise ParameterDomainError(f"boundary needs k>=r>=2, got k={k}, r={r}")
    inv_r1 = _inv_one_minus_x_pow(r - 1, order)
    t1 = _xp([(i, binom(i + k - 1, k - 1)) for i in range(s)], order)
    t2 = inv_r1 * _xp([(i, binom(i + k - r, k - r)) for i in range(s)], order)
    t3 = _xp(
        [
            (i + j, binom(i + k - r, k - r) * binom(j + r - 2, r - 2))
            for i in range(s)
            for j in range(s - i)
        ],
        order,
    )
    t4 = inv_r1 * _xp(
        [(i, _t(i, binom(i + k - r, k - r))) for i in range(s)], order
    ) * _t(-(s - 1))
    return t1 + t2 - t3 - t4


def smirnov_step_kernels(k: int, s: int, order: int):
    """(additive, multiplicative) kernels of the Smirnov 1 x s recurrence."""
    a = k - 1
    c = k * a ** (s - 1)
    add = (
        _xp([(0, 1), (1, 1), (s, -c)], order) * _inv_one_minus(a, order)
        - _xp([(0, 1), (1, _t(1)), (s, _t(s, -c))], order)
        * _inv_one_minus(_t(1, a), order)
        * _t(-(s - 1))
    )
    mul = (
        _xp([(0, 1), (1, _t(1, -(k - 2))), (s, _t(s, -a ** (s - 1)))], order)
        * _inv_one_minus(_t(1, a), order)
        * _t(-(s - 1))
        - _xp([(1, _t(1))], order)
        * _xp([(0, 1), (1, 1)], order)
        * _xp([(0, 1), (s - 1, -(a ** (s - 1)))], order)
        * _xp([(0, 1), (1, _t(1))], order).invert()
        * _inv_one_minus(a, order)
    )
    return add, mul


def smirnov_tall_kernels(k: int, r: int, s: int, order: int):
    """(additive, denominator-base) kernels of the Smirnov r x s recurrence."""
    a = k - r
    c = (a + 1) * a ** (s - 1)
    add = (
        _xp([(0, 1), (1, 1), (s, -c)], order) * _inv_one_minus(a, order)
        - _xp([(0, 1), (1, _t(1)), (s, _t(s, -c))], order)
        * _inv_one_minus(_t(1, a), order)
        * _t(-(s - 1))
    )
    den_base = (
        XSeries.one(order)
        - (a + 1)
        * _xp([(2, 1)], order)
        * _xp([(0, 1), (s - 1, -(a ** (s - 1)))], order)
        * _inv_one_minus(a, order)
        + _xp([(1, 1)], order)
        * _xp([(0, 1), (1, _t(1)), (s, _t(s, -c))], order)
        * _inv_one_minus(_t(1, a), order)
        * _t(-(s - 1))
    )
    return add, den_base


def build_kernels(which: str, k: int, r: int, s: int, order: int) -> dict[str, XSeries]:
    """Auxiliary kernels used by the requested series, by descriptive name."""
    if which == "A":
        return {f"level{m}": level_kernel_1xs(m, s, order) for m in range(1, k + 1)}
    if which == "Bgeq":
        return {
            f"level{m}": level_kernel_geq(m, r, s, order)
            for m in range(r - 1, k + 1)
        }
    if which == "B":
        kernels = {
            f"level{m}": level_kernel_geq(m, r, s, order)
            for m in range(r - 1, k + 1)
        }
        kernels["boundary"] = boundary_poly(k, r, s, order)
        return kernels
    if which == "C":
        add, mul = smirnov_step_kernels(k, s, order)
        return {"shift_add": add, "shift_mul": mul}
    if which in ("Dgeq", "D"):
        add, den = smirnov_tall_kernels(k, r, s, order)
        return {"shift_add": add, "denom_base": den}
    raise ParameterDomainError(f"unknown series kind {which!r}")


# ---------------------------------------------------------------------------
# distribution series
# ---------------------------------------------------------------------------

def gf_nondecreasing_1xs(k: int, s: int, order: int) -> XSeries:
    """Series over nondecreasing words on [k] marking 1 x s rectangles."""
    if k < 1 or s < 1:
        raise ParameterDomainError(f"need k>=1, s>=1, got k={k}, s={s}")
    total = XSeries.zero(order)
    for i in range(k):
        num = level_kernel_1xs(k - i, s, order).scale_x(i)
        den = XSeries.one(order)
        for j in range(1, i + 1):
            den = den * _xp([(0, 1), (1, _t(j, -1))], order)
        total = total + num * den.invert() * _t(-i * (s - 1))
    return total


def gf_nondecreasing_geq(k: int, r: int, s: int, order: int) -> XSeries:
    """Series over nondecreasing words on [k] with letters >= r-1, marking r x s."""
    if r < 2 or s < 1:
        raise ParameterDomainError(f"need r>=2, s>=1, got r={r}, s={s}")
    if k < r - 1:
        raise ParameterDomainError(f"need k>=r-1, got k={k}, r={r}")
    total = XSeries.zero(order)
    for i in range(k - r + 2):
        num = level_kernel_geq(k - i, r, s, order).scale_x(i)
        den = XSeries.one(order)
        for j in range(0, i):
            den = den * _xp([(0, 1), (1, _t(j, -1))], order)
        total = total + num * den.invert() * _t(-i * (s - 1))
    return total


def gf_nondecreasing(k: int, r: int, s: int, order: int) -> XSeries:
    """Series over nondecreasing words on [k] marking r x s rectangles, r >= 2.

    For k < r no rectangle fits under the height bound, so the series is the
    plain cardinality series.
    """
    if r < 2 or s < 1 or k < 1:
        raise ParameterDomainError(f"need k>=1, r>=2, s>=1, got k={k}, r={r}, s={s}")
    if k < r:
        return _xp([(n, math.comb(n + k - 1, k - 1)) for n in range(order + 1)], order)
    main = XSeries.zero(order)
    for i in range(1, k - r + 2):
        num = level_kernel_geq(k - i, r, s, order).scale_x(i)
        den = XSeries.one(order)
        for j in range(1, i):
            den = den * _xp([(0, 1), (1, _t(j, -1))], order)
        main = main + num * den.invert() * _t(-i * (s - 1))
    return _inv_one_minus_x_pow(r - 1, order) * main + boundary_poly(k, r, s, order)


def gf_smirnov_1xs(k: int, s: int, order: int) -> XSeries:
    """Series over Smirnov words on [k] marking 1 x s rectangles, k >= 2."""
    if k < 2:
        raise ParameterDomainError(f"Smirnov series need k>=2, got k={k}")
    if s < 1:
        raise ParameterDomainError(f"need s>=1, got s={s}")
    if s == 1:
        # Base case for the two-letter alphabet.  A 1x1 count is the total
        # cell count, so the alternating words of length n carry
        # n + floor(n/2) and n + ceil(n/2) cells; as a closed form
        # (1 + (t+t^2)x + t^3 x^2) / (1 - t^3 x^2).  The printed two-letter
        # closed form assumes each length-n word holds n-s+1 rectangles,
        # which fails at s = 1 (see notes/decisions ledger).
        series = _xp([(0, 1), (1, _t(1) + _t(2)), (2, _t(3))], order) * _xp(
            [(0, 1), (2, _t(3, -1))], order
        ).invert()
    else:
        inv_x = _inv_one_minus(1, order)
        series = (
            _xp([(s, _t(1, 2) + _t(0, -2))], order)
            * _inv_one_minus(_t(1), order)
            * inv_x
            + _xp([(0, 1), (1, 1)], order) * inv_x
        )
    one_plus_tx = _xp([(0, 1), (1, _t(1))], order)
    for kk in range(3, k + 1):
        add, mul = smirnov_step_kernels(kk, s, order)
        prev_tx = series.scale_x(1)
        num = one_plus_tx * (add + mul * prev_tx)
        den = one_plus_tx - _xp([(1, _t(1))], order) * prev_tx
        series = num * den.invert()
    return series


def gf_smirnov_geq(k: int, r: int, s: int, order: int) -> XSeries:
    """Series over Smirnov words on [k] with letters >= r-1, marking r x s.

    Valid for s >= 2 only: the two-letter base relies on the alternating
    words containing no rectangle, which fails for single-column windows.
    """
    if r < 2 or k < r:
        raise ParameterDomainError(f"need k>=r>=2, got k={k}, r={r}")
    if s < 2:
        raise UnsupportedRegimeError(
            "min-letter Smirnov series is only valid for s >= 2; use the oracle"
        )
    one_plus_x = _xp([(0, 1), (1, 1)], order)
    series = one_plus_x * _inv_one_minus(1, order)
    ts = _t(-(s - 1))
    for kk in range(r + 1, k + 1):
        add, den_base = smirnov_tall_kernels(kk, r, s, order)
        prev_tx = series.scale_x(1)
        num = prev_tx * ts + add
        den = den_base - _xp([(1, 1)], order) * prev_tx * ts
        series = one_plus_x * num * den.invert()
    return series


def gf_smirnov(k: int, r: int, s: int, order: int) -> XSeries:
    """Series over Smirnov words on [k] marking r x s rectangles, r >= 2.

    The k = r base is the cardinality series (1+x)/(1-(r-1)x): over [r] no
    s >= 2 consecutive columns can all reach height r without equal
    neighbors.  The printed base (1+x)/(1-x) matches only at r = 2; the
    crosscheck harness flags the difference for r >= 3.
    """
    if r < 2 or k < r:
        raise ParameterDomainError(f"need k>=r>=2, got k={k}, r={r}")
    if s < 2:
        raise UnsupportedRegimeError(
            "Smirnov r>=2 series is only valid for s >= 2; use the oracle"
        )
    one_plus_x = _xp([(0, 1), (1, 1)], order)
    if k == r:
        return one_plus_x * _inv_one_minus(r - 1, order)
    prev_tx = gf_smirnov_geq(k - 1, r, s, order).scale_x(1)
    add, den_base = smirnov_tall_kernels(k, r, s, order)
    ts = _t(-(s - 1))
    num = prev_tx * ts + add
    den = (
        den_base * (r - 1)
        - _xp([(1, r - 1)], order) * prev_tx * ts
        - one_plus_x * (r - 2)
    )
    return one_plus_x * num * den.invert()


# ---------------------------------------------------------------------------
# totals
# ---------------------------------------------------------------------------

def _smirnov_total_weight(k: int, r: int, s: int) -> int:
    return sum(i ** (s - 1) * (i + 1) for i in range(1, k - r + 1))


def _check_total_params(family, k, r, s):
    if family not in (NONDECREASING, SMIRNOV):
        raise ParameterDomainError(f"unknown family {family!r}")
    if k < 1 or r < 1 or s < 1:
        raise ParameterDomainError(f"need k,r,s >= 1, got k={k}, r={r}, s={s}")
    if family == SMIRNOV:
        if k < 2:
            raise ParameterDomainError(f"Smirnov totals need k>=2, got k={k}")
        if r >= 2 and s == 1:
            raise UnsupportedRegimeError(
                "Smirnov totals with r>=2 are only valid for s >= 2; use the oracle"
            )


def gf_total(family: str, k: int, r: int, s: int, order: int) -> XSeries:
    """t-free series whose x^n coefficient is the total rectangle count."""
    _check_total_params(family, k, r, s)
    if family == NONDECREASING:
        num = _xp(
            [
                (s + i, (-1) ** i * binom(i + s - 2, i) * binom(k - r + 1 + s, s + i + 1))
                for i in range(max(0, k - r + 1) + 1)
            ],
            order,
        )
        return num * _inv_one_minus_x_pow(k + 1, order)
    if r == 1 and s == 1:
        # 1x1 totals count cells: n letters averaging (k+1)/2 over the
        # (k-1)^(n-1)-fold symmetric family; the printed s-window weight
        # undercounts here (see notes/decisions ledger).
        weight = k * (k + 1) // 2
        return _xp([(1, weight)], order) * _inv_one_minus(k - 1, order) ** 2
    weight = _smirnov_total_weight(k, r, s)
    return _xp([(s, weight)], order) * _inv_one_minus(k - 1, order) ** 2


def closed_total(family: str, n: int, k: int, r: int, s: int) -> int:
    """Total number of r x s rectangles over the length-n family, in closed form."""
    _check_total_params(family, k, r, s)
    if n < 0:
        raise ParameterDomainError(f"need n>=0, got n={n}")
    if n < s:
        return 0
    if family == NONDECREASING:
        return sum(
            (-1) ** i
            * binom(i + s - 2, i)
            * binom(k - r + 1 + s, s + i + 1)
            * binom(n - s - i + k, k)
            for i in range(0, min(k - r + 1, n - s) + 1)
        )
    if r == 1 and s == 1:
        return n * (k - 1) ** (n - 1) * (k * (k + 1) // 2)
    return (k - 1) ** (n - s) * (n - s + 1) * _smirnov_total_weight(k, r, s)


# ---------------------------------------------------------------------------
# worked example displays
# ---------------------------------------------------------------------------

def _half(num: int) -> int:
    q, rem = divmod(num, 2)
    if rem:
        raise ParameterDomainError(f"display value {num}/2 is not an integer")
    return q


def _table1_row(s_row: int, quad: tuple[int, int, int]):
    b, c = quad[1], quad[2]

    def value(n, k, r, s):
        return _half(3 * n * n + b * n + c)

    return {
        "value": value,
        "params": (),
        "regime": lambda n, k, r, s: n >= s_row,
        "fixed": {"k": 2, "r": 1, "s": s_row},
    }


_TABLE1 = {
    1: (3, -3, 0),
    2: (3, -1, -2),
    3: (3, -5, -2),
    4: (3, -9, 0),
    5: (3, -13, 4),
    6: (3, -17, 10),
    7: (3, -21, 18),
    8: (3, -25, 28),
    9: (3, -29, 40),
    10: (3, -33, 54),
    11: (3, -37, 70),
}


def _registry() -> dict[str, dict]:
    reg = {
        "f2-general": {
            "value": lambda n, k, r, s: _half(3 * n * n + (7 - 4 * s) * n + (s - 1) * (s - 4)),
            "params": ("s",),
            "regime": lambda n, k, r, s: n >= s,
            "fixed": {"k": 2, "r": 1},
        },
        "f3": {
            "value": lambda n, k, r, s: _half(
                2 * n**3 - 3 * (s - 3) * n * n + (s * s - 10 * s + 13) * n + 2 * (s - 1) * (s - 3)
            ),
            "params": ("s",),
            "regime": lambda n, k, r, s: n >= s,
            "fixed": {"k": 3, "r": 1},
        },
        "g2": {
            "value": lambda n, k, r, s: binom(n - s + 2, 2),
            "params": ("s",),
            "regime": lambda n, k, r, s: n >= s,
            "fixed": {"k": 2, "r": 2},
        },
        "g-rs2": {
            "value": lambda n, k, r, s: _exact_int(
                Fraction(n - 1, n + 1) * binom(k, 2) * binom(n - 1 + k, k)
            ),
            "params": ("k",),
            "regime": lambda n, k, r, s: n >= 2,
            "fixed": {"r": 2, "s": 2},
        },
        "g-s1": {
            "value": lambda n, k, r, s: binom(k - r + 2, 2) * binom(n - 1 + k, k),
            "params": ("k", "r"),
            "regime": lambda n, k, r, s: n >= 1 and k >= r - 2,
            "fixed": {"s": 1},
        },
        "h2": {
            "value": lambda n, k, r, s: 2 * (n - s + 1),
            "params": ("s",),
            "regime": lambda n, k, r, s: n >= s >= 2,
            "fixed": {"k": 2, "r": 1},
        },
        "h3": {
            "value": lambda n, k, r, s: 2 ** (n - s) * (n - s + 1) * (2 + 3 * 2 ** (s - 1)),
            "params": ("s",),
            "regime": lambda n, k, r, s: n >= s >= 2,
            "fixed": {"k": 3, "r": 1},
        },
    }
    for s_row, quad in _TABLE1.items():
        reg[f"table1-s{s_row}"] = _table1_row(s_row, quad)
    return reg


def _exact_int(f: Fraction) -> int:
    if f.denominator != 1:
        raise ParameterDomainError(f"display value {f} is not an integer")
    return int(f)


SPECIAL_FORMULAS = _registry()


def special_formula(formula_id: str, n: int, k: int | None = None,
                    r: int | None = None, s: int | None = None) -> int:
    """Evaluate one worked display exactly; exists for crosschecking only."""
    try:
        entry = SPECIAL_FORMULAS[formula_id]
    except KeyError:
        raise ParameterDomainError(f"unknown display id {formula_id!r}") from None
    fixed = entry["fixed"]
    k = fixed.get("k", k)
    r = fixed.get("r", r)
    s = fixed.get("s", s)
    for name, val in (("k", k), ("r", r), ("s", s)):
        if name in entry["params"] and val is None:
            raise ParameterDomainError(f"display {formula_id!r} needs parameter {name}")
    return entry["value"](n, k, r, s)


def special_formula_fixed(formula_id: str) -> dict:
    """The (k, r, s) values a display pins down."""
    return dict(SPECIAL_FORMULAS[formula_id]["fixed"])


def special_formula_in_regime(formula_id: str, n: int, k: int, r: int, s: int) -> bool:
    entry = SPECIAL_FORMULAS[formula_id]
    for name, val in entry["fixed"].items():
        if {"k": k, "r": r, "s": s}[name] != val:
            return False
    return entry["regime"](n, k, r, s)


# ---------------------------------------------------------------------------
# request dispatch (used by the CLI)
# ---------------------------------------------------------------------------

GF_KINDS = ("A", "Bgeq", "B", "C", "Dgeq", "D", "totalND", "totalSM")


@dataclass(frozen=True)
class GFRequest:
    which: str
    k: int
    r: int = 1
    s: int = 1
    order: int = 0


def build_series(req: GFRequest) -> XSeries:
    """Build the series a request names, enforcing its validity hypotheses."""
    which, k, r, s, order = req.which, req.k, req.r, req.s, req.order
    if order < 0:
        raise ParameterDomainError(f"need order >= 0, got {order}")
    if which == "A":
        if r != 1:
            raise ParameterDomainError("series A is the r = 1 case; pass r = 1")
        return gf_nondecreasing_1xs(k, s, order)
    if which == "Bgeq":
        return gf_nondecreasing_geq(k, r, s, order)
    if which == "B":
        return gf_nondecreasing(k, r, s, order)
    if which == "C":
        if r != 1:
            raise ParameterDomainError("series C is the r = 1 case; pass r = 1")
        return gf_smirnov_1xs(k, s, order)
    if which == "Dgeq":
        return gf_smirnov_geq(k, r, s, order)
    if which == "D":
        return gf_smirnov(k, r, s, order)
    if which == "totalND":
        return gf_total(NONDECREASING, k, r, s, order)
    if which == "totalSM":
        return gf_total(SMIRNOV, k, r, s, order)
    raise ParameterDomainError(f"unknown series kind {which!r}; expected one of {GF_KINDS}")
