"""Exact arithmetic substrate.

Python ``int`` is the big integer and ``fractions.Fraction`` the normalized
rational.  On top of those this module provides dense integer polynomials in
one variable ``x`` and truncated formal power series in ``t``:

* :class:`PowerSeries` stores the literal coefficient of ``t**n`` as a
  ``Fraction`` (so an exponential generating function keeps its ``1/n!``).
* :class:`PolySeries` stores ``n!``-scaled integer polynomials, i.e. the series
  ``sum p_n(x) t**n / n!`` with the factorial kept implicit.

Every value is immutable; every operation returns a new object.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """Exact ``C(n, k)``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Dense integer polynomials
# ---------------------------------------------------------------------------


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients, ascending order.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"IntPolynomial coefficients must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial; reporting only
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_polynomial(self)

    def __add__(self, other) -> "IntPolynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPolynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial(c * other for c in self.coeffs)
        if isinstance(other, IntPolynomial):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def derivative(self) -> "IntPolynomial":
        return poly_derivative(self)

    def __call__(self, v: int) -> int:
        return poly_eval_int(self, v)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def _as_poly(value) -> IntPolynomial | None:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return IntPolynomial.constant(value)
    return None


ZERO_POLY = IntPolynomial()
ONE_POLY = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Schoolbook product."""
    if p.is_zero() or q.is_zero():
        return ZERO_POLY
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPolynomial(out)


def poly_derivative(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_eval_int(p: IntPolynomial, v: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def format_polynomial(p: IntPolynomial, var: str = "x") -> str:
    """Human-readable form, lowest power first: ``x + 6x^2 + 6x^3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Truncated power series with rational coefficients
# ---------------------------------------------------------------------------


class PowerSeries:
    """Truncated formal power series ``sum c_n t**n`` for ``n <= order``.

    Comparing two series of different orders raises ``ValueError``: a silent
    truncation would hide exactly the bugs these objects are meant to expose.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("PowerSeries needs an order or at least one coefficient")
            order = len(cs) - 1
        if order < 0:
            raise ValueError(f"truncation order must be nonnegative, got {order}")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls((1,), order)

    @classmethod
    def t(cls, order: int) -> "PowerSeries":
        return cls((0, 1), order)

    @classmethod
    def exp_t(cls, order: int, scale: Number = 1) -> "PowerSeries":
        """``exp(scale * t)``."""
        s = Fraction(scale)
        return cls((s**n / math.factorial(n) for n in range(order + 1)), order)

    @classmethod
    def geometric(cls, order: int, ratio: Number = 1) -> "PowerSeries":
        """``1 / (1 - ratio * t)``."""
        r = Fraction(ratio)
        return cls((r**n for n in range(order + 1)), order)

    @classmethod
    def from_egf(cls, values: Sequence[Number], order: int) -> "PowerSeries":
        """Series whose ``n!``-scaled coefficients are ``values``."""
        return cls((Fraction(v) / math.factorial(n) for n, v in enumerate(values[: order + 1])), order)

    def egf_values(self) -> list[Fraction]:
        """The ``n!``-scaled coefficients ``n! [t**n]``."""
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]

    # protocol -----------------------------------------------------------
    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def _check_order(self, other: "PowerSeries", what: str) -> None:
        if self.order != other.order:
            raise ValueError(f"{what}: truncation orders differ ({self.order} vs {other.order})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_order(other, "series comparison")
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_order(other, "series addition")
        return PowerSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return PowerSeries((c * f for c in self.coeffs), self.order)
        return NotImplemented

    def __rmul__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], order)

    def first_mismatch(self, other: "PowerSeries") -> int | None:
        self._check_order(other, "series comparison")
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Truncated Cauchy product."""
    a._check_order(b, "series_mul")
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(a.order + 1):
        out.append(sum((ac[k] * bc[n - k] for k in range(n + 1) if ac[k]), Fraction(0)))
    return PowerSeries(out, a.order)


def series_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """``outer(inner(t))`` truncated; ``inner`` must have zero constant term."""
    outer._check_order(inner, "series_compose")
    if inner.coeffs[0] != 0:
        raise ValueError("series_compose: inner series must have zero constant term")
    # Horner: (((c_N) inner + c_{N-1}) inner + ...) + c_0
    acc = PowerSeries.zero(outer.order)
    one = PowerSeries.one(outer.order)
    for c in reversed(outer.coeffs):
        acc = series_mul(acc, inner) + one * c
    return acc


def series_exp(a: PowerSeries) -> PowerSeries:
    """``exp(a)`` via ``E' = a' E``; ``a`` must have zero constant term."""
    if a.coeffs[0] != 0:
        raise ValueError("series_exp: argument must have zero constant term")
    ac = a.coeffs
    e = [Fraction(1)]
    for n in range(1, a.order + 1):
        s = sum((k * ac[k] * e[n - k] for k in range(1, n + 1) if ac[k]), Fraction(0))
        e.append(s / n)
    return PowerSeries(e, a.order)


def series_recip(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; ``a`` must have nonzero constant term."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ValueError("series_recip: constant term must be nonzero")
    ac = a.coeffs
    b = [1 / a0]
    for n in range(1, a.order + 1):
        s = sum((ac[k] * b[n - k] for k in range(1, n + 1) if ac[k]), Fraction(0))
        b.append(-s / a0)
    return PowerSeries(b, a.order)


def series_derivative(a: PowerSeries) -> PowerSeries:
    """``d/dt``; the result is one order lower (order 0 stays order 0, zero)."""
    if a.order == 0:
        return PowerSeries.zero(0)
    return PowerSeries(((i + 1) * a.coeffs[i + 1] for i in range(a.order)), a.order - 1)


def series_pow(a: PowerSeries, k: int) -> PowerSeries:
    if k < 0:
        raise ValueError("series_pow: negative exponent")
    result = PowerSeries.one(a.order)
    for _ in range(k):
        result = series_mul(result, a)
    return result


# ---------------------------------------------------------------------------
# n!-scaled polynomial-valued series
# ---------------------------------------------------------------------------


class PolySeries:
    """Exponential series ``sum p_n(x) t**n / n!`` truncated at ``order``.

    Slot ``n`` holds ``p_n`` itself, so products are binomial convolutions and
    everything stays in integer polynomials.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[IntPolynomial | int], order: int | None = None):
        cs = [_as_poly(c) for c in coeffs]
        if any(c is None for c in cs):
            raise TypeError("PolySeries slots must be IntPolynomial or int")
        if order is None:
            if not cs:
                raise ValueError("PolySeries needs an order or at least one slot")
            order = len(cs) - 1
        if order < 0:
            raise ValueError(f"truncation order must be nonnegative, got {order}")
        cs = cs[: order + 1] + [ZERO_POLY] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PolySeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "PolySeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "PolySeries":
        return cls((ONE_POLY,), order)

    @classmethod
    def exp_t(cls, order: int) -> "PolySeries":
        """``e**t``: every slot is 1."""
        return cls([ONE_POLY] * (order + 1), order)

    def __getitem__(self, n: int) -> IntPolynomial:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"PolySeries({[list(c.coeffs) for c in self.coeffs]}, order={self.order})"

    def _check_order(self, other: "PolySeries", what: str) -> None:
        if self.order != other.order:
            raise ValueError(f"{what}: truncation orders differ ({self.order} vs {other.order})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        self._check_order(other, "series comparison")
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: "PolySeries") -> "PolySeries":
        if not isinstance(other, PolySeries):
            return NotImplemented
        self._check_order(other, "series addition")
        return PolySeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __neg__(self) -> "PolySeries":
        return PolySeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other: "PolySeries") -> "PolySeries":
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self + (-other)

    def scale(self, p: IntPolynomial | int) -> "PolySeries":
        """Multiply every slot by a polynomial in ``x`` (constant in ``t``)."""
        return PolySeries((c * p for c in self.coeffs), self.order)

    def truncate(self, order: int) -> "PolySeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PolySeries(self.coeffs[: order + 1], order)


def polyseries_mul(a: PolySeries, b: PolySeries) -> PolySeries:
    """Product of exponential series: ``c_n = sum C(n,k) a_k b_{n-k}``."""
    a._check_order(b, "polyseries_mul")
    out = []
    for n in range(a.order + 1):
        acc = ZERO_POLY
        for k in range(n + 1):
            if a.coeffs[k].is_zero() or b.coeffs[n - k].is_zero():
                continue
            acc = acc + binomial(n, k) * poly_mul(a.coeffs[k], b.coeffs[n - k])
        out.append(acc)
    return PolySeries(out, a.order)


def polyseries_derivative(a: PolySeries) -> PolySeries:
    """``d/dt`` of an exponential series shifts the slots down by one."""
    if a.order == 0:
        return PolySeries.zero(0)
    return PolySeries(a.coeffs[1:], a.order - 1)


def polyseries_exp(a: PolySeries) -> PolySeries:
    """``exp(a)`` for zero constant slot, via ``E_{n+1} = sum C(n,k) a_{k+1} E_{n-k}``."""
    if not a.coeffs[0].is_zero():
        raise ValueError("polyseries_exp: argument must have zero constant term")
    e = [ONE_POLY]
    for n in range(a.order):
        acc = ZERO_POLY
        for k in range(n + 1):
            if a.coeffs[k + 1].is_zero():
                continue
            acc = acc + binomial(n, k) * poly_mul(a.coeffs[k + 1], e[n - k])
        e.append(acc)
    return PolySeries(e, a.order)


def polyseries_recip(a: PolySeries) -> PolySeries:
    """Inverse of a series whose constant slot is the unit ``1`` or ``-1``."""
    a0 = a.coeffs[0]
    if a0 not in (ONE_POLY, -ONE_POLY):
        raise ValueError("polyseries_recip: constant slot must be 1 or -1")
    sign = a0.coeffs[0]
    b = [IntPolynomial.constant(sign)]
    for n in range(1, a.order + 1):
        acc = ZERO_POLY
        for k in range(1, n + 1):
            if a.coeffs[k].is_zero():
                continue
            acc = acc + binomial(n, k) * poly_mul(a.coeffs[k], b[n - k])
        b.append(acc * (-sign))
    return PolySeries(b, a.order)
