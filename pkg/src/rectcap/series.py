"""Exact Laurent polynomials in t and truncated power series in x.

Every generating function in the package is carried as an ``XSeries``: a
truncated series in x whose coefficients are ``LaurentPoly`` values in the
marking variable t.  All arithmetic is exact over arbitrary-precision
integers; there is no floating point anywhere in this module.
"""

from __future__ import annotations

from .errors import NonInvertibleSeriesError


class LaurentPoly:
    """Sparse Laurent polynomial in t with integer coefficients.

    Exponents may be negative (intermediate kernels carry powers of 1/t that
    only cancel in final sums).  Canonical form: no stored zero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {e: c for e, c in terms.items() if c != 0}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        """The monomial coeff * t**exp."""
        return cls({exp: coeff})

    @classmethod
    def from_counts(cls, counts) -> "LaurentPoly":
        """Build from a mapping/iterable of (exponent, count) pairs."""
        if hasattr(counts, "items"):
            counts = counts.items()
        out = {}
        for e, c in counts:
            out[e] = out.get(e, 0) + c
        return cls(out)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            res = LaurentPoly.__new__(LaurentPoly)
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def shift(self, delta: int) -> "LaurentPoly":
        """Multiply by t**delta."""
        if delta == 0:
            return self
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {e + delta: c for e, c in self.terms.items()}
        return res

    def coefficient(self, exp: int) -> int:
        return self.terms.get(exp, 0)

    @property
    def min_exponent(self):
        """Smallest stored exponent, or None for the zero polynomial."""
        return min(self.terms) if self.terms else None

    @property
    def max_exponent(self):
        return max(self.terms) if self.terms else None

    def eval_at_one(self) -> int:
        """Value at t = 1 (the sum of all coefficients)."""
        return sum(self.terms.values())

    def derivative_at_one(self) -> int:
        """Formal d/dt evaluated at t = 1."""
        return sum(e * c for e, c in self.terms.items())

    def is_unit(self) -> bool:
        """True when the polynomial is a single term with coefficient +-1."""
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return c in (1, -1)

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NonInvertibleSeriesError(
                f"constant term {self} is not a signed power of t"
            )
        ((e, c),) = self.terms.items()
        return LaurentPoly.term(c, -e)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
            else:
                base = "t" if e == 1 else f"t^{e}"
                if c == 1:
                    parts.append(base)
                elif c == -1:
                    parts.append(f"-{base}")
                else:
                    parts.append(f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self.terms.items()))!r})"


class XSeries:
    """Truncated power series in x with LaurentPoly coefficients.

    Exact modulo x**(order+1).  Values are immutable after construction;
    arithmetic requires equal truncation orders and never reads beyond them.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [c if isinstance(c, LaurentPoly) else LaurentPoly.term(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [LaurentPoly.zero()] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs[: order + 1])

    @classmethod
    def zero(cls, order: int) -> "XSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "XSeries":
        return cls([LaurentPoly.one()], order)

    @classmethod
    def x_poly(cls, pairs, order: int) -> "XSeries":
        """Polynomial in x from (x-power, coefficient) pairs; duplicates add.

        Pairs beyond the truncation order are dropped.
        """
        coeffs = [LaurentPoly.zero()] * (order + 1)
        for n, c in pairs:
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly.term(c)
            if 0 <= n <= order:
                coeffs[n] = coeffs[n] + c
        return cls(coeffs, order)

    def coefficient(self, n: int) -> LaurentPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def _check_order(self, other: "XSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} != {other.order}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other) -> "XSeries":
        if isinstance(other, (int, LaurentPoly)):
            other = XSeries.x_poly([(0, other)], self.order)
        self._check_order(other)
        return XSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> "XSeries":
        return XSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "XSeries":
        if isinstance(other, (int, LaurentPoly)):
            other = XSeries.x_poly([(0, other)], self.order)
        return self + (-other)

    def __rsub__(self, other) -> "XSeries":
        return (-self) + other

    def __mul__(self, other) -> "XSeries":
        if isinstance(other, (int, LaurentPoly)):
            if isinstance(other, int):
                other = LaurentPoly.term(other)
            return XSeries([c * other for c in self.coeffs], self.order)
        self._check_order(other)
        n = self.order
        out = [LaurentPoly.zero()] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(0, n - i + 1):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return XSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "XSeries":
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = XSeries.one(self.order)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    def invert(self) -> "XSeries":
        """Multiplicative inverse up to the truncation order.

        Requires the x-constant term to be a single signed power of t;
        uses b_n = -c0^{-1} * sum_{j=1..n} a_j b_{n-j}.
        """
        c0inv = self.coeffs[0].unit_inverse()
        n = self.order
        out = [LaurentPoly.zero()] * (n + 1)
        out[0] = c0inv
        for m in range(1, n + 1):
            acc = LaurentPoly.zero()
            for j in range(1, m + 1):
                a = self.coeffs[j]
                if a:
                    acc = acc + a * out[m - j]
            out[m] = -(c0inv * acc)
        return XSeries(out, n)

    def scale_x(self, m: int) -> "XSeries":
        """Substitute x -> t**m * x, i.e. multiply the x**n coefficient by t**(m*n)."""
        if m == 0:
            return self
        return XSeries(
            [c.shift(m * n) for n, c in enumerate(self.coeffs)], self.order
        )

    def eval_t1(self) -> "XSeries":
        """Substitute t = 1 coefficientwise; coefficients become constants."""
        return XSeries(
            [LaurentPoly.term(c.eval_at_one()) for c in self.coeffs], self.order
        )

    def dt_at_1(self) -> "XSeries":
        """Coefficientwise formal d/dt at t = 1; turns distributions into totals."""
        return XSeries(
            [LaurentPoly.term(c.derivative_at_one()) for c in self.coeffs], self.order
        )

    def int_coeffs(self) -> list[int]:
        """Coefficients of a t-free series as plain integers."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.terms and set(c.terms) != {0}:
                raise ValueError(f"coefficient of x^{n} is not t-free: {c}")
            out.append(c.coefficient(0))
        return out

    def __str__(self) -> str:
        return " ; ".join(f"x^{n}: {c}" for n, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"XSeries(order={self.order}, [{', '.join(map(str, self.coeffs))}])"


def poly_to_json(p: LaurentPoly) -> dict[str, str]:
    """JSON form: decimal exponent strings -> decimal coefficient strings."""
    return {str(e): str(p.terms[e]) for e in sorted(p.terms)}


def poly_from_json(obj: dict[str, str]) -> LaurentPoly:
    return LaurentPoly({int(e): int(c) for e, c in obj.items()})


def series_to_json(a: XSeries) -> list[dict[str, str]]:
    """JSON form: array of LaurentPoly objects indexed by x-power."""
    return [poly_to_json(c) for c in a.coeffs]


def series_from_json(items: list[dict[str, str]]) -> XSeries:
    if not items:
        raise ValueError("series JSON must contain at least the x^0 coefficient")
    return XSeries([poly_from_json(o) for o in items], len(items) - 1)
