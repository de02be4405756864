"""Generating-function side of the Euler-Seidel method.

``ogf_dual`` maps the ordinary generating function of a matrix's first row to
that of its first column, ``1/(1-t) a(t/(1-t))``; ``egf_dual`` does the same
for exponential generating functions, ``e^t A(t)``.  ``run_series_checks``
verifies the named generating-function manipulations for the Stirling, Bell
and Fubini families as exact coefficient identities at a truncation order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .euler_seidel import binomial_transform
from .exact_core import (
    X,
    IntPolynomial,
    PolySeries,
    PowerSeries,
    binomial,
    polyseries_derivative,
    polyseries_exp,
    polyseries_mul,
    polyseries_recip,
    series_compose,
    series_derivative,
    series_exp,
    series_mul,
    series_pow,
)
from .sequences import bell_number, bell_polynomial, fubini_number, fubini_polynomial, stirling2

DEFAULT_ORDER = 32
STIRLING_COLUMNS = 6


@dataclass(frozen=True)
class SeriesCheckResult:
    name: str
    order: int
    first_mismatch: int | None = None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "order": self.order, "status": self.status}
        if self.first_mismatch is not None:
            out["first_mismatch"] = self.first_mismatch
        return out


def ogf_dual(a: PowerSeries) -> PowerSeries:
    """``1/(1-t) * a(t/(1-t))`` truncated at ``a.order``."""
    order = a.order
    geom = PowerSeries.geometric(order)
    inner = geom - PowerSeries.one(order)  # t/(1-t)
    return series_mul(geom, series_compose(a, inner))


def egf_dual(a: PowerSeries) -> PowerSeries:
    return series_mul(PowerSeries.exp_t(a.order), a)


def egf_dual_poly(a: PolySeries) -> PolySeries:
    """``e^t A(t,x)`` on ``n!``-scaled slots: slot ``n`` is ``sum C(n,k) a_k``."""
    out = []
    for n in range(a.order + 1):
        acc = IntPolynomial()
        for k in range(n + 1):
            acc = acc + binomial(n, k) * a[k]
        out.append(acc)
    return PolySeries(out, a.order)


# building blocks ---------------------------------------------------------


def exp_minus_one(order: int) -> PowerSeries:
    """``e^t - 1``."""
    return PowerSeries.exp_t(order) - PowerSeries.one(order)


def stirling_column_series(m: int, order: int) -> PowerSeries:
    """``(e^t - 1)^m / m!``."""
    return series_pow(exp_minus_one(order), m) * Fraction(1, math.factorial(m))


def poly_exp_minus_one(order: int) -> PolySeries:
    """``x (e^t - 1)`` as an exponential polynomial series."""
    return PolySeries([IntPolynomial()] + [X] * order, order)


def bell_poly_series(order: int) -> PolySeries:
    """``exp(x (e^t - 1))``."""
    return polyseries_exp(poly_exp_minus_one(order))


def fubini_poly_series(order: int) -> PolySeries:
    """``1 / (1 - x (e^t - 1))``."""
    denom = PolySeries.one(order) - poly_exp_minus_one(order)
    return polyseries_recip(denom)


def _first_mismatch(lhs: Sequence, rhs: Sequence) -> int | None:
    if len(lhs) != len(rhs):
        raise ValueError(f"cannot compare sequences of length {len(lhs)} and {len(rhs)}")
    for n, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return n
    return None


def _earliest(*indices: int | None) -> int | None:
    found = [i for i in indices if i is not None]
    return min(found) if found else None


# named checks ------------------------------------------------------------


def _check_S5(order: int) -> int | None:
    worst = []
    for m in range(STIRLING_COLUMNS + 1):
        series = stirling_column_series(m, order)
        expected = [stirling2(n, m) for n in range(order + 1)]
        worst.append(_first_mismatch(series.egf_values(), expected))
    return _earliest(*worst)


def _check_S7(order: int) -> int | None:
    series = bell_poly_series(order)
    return _first_mismatch(list(series), [bell_polynomial(n) for n in range(order + 1)])


def _check_S15(order: int) -> int | None:
    series = fubini_poly_series(order)
    return _first_mismatch(list(series), [fubini_polynomial(n) for n in range(order + 1)])


def _check_S17pp(order: int) -> int | None:
    worst = []
    low = order - 1
    for m in range(STIRLING_COLUMNS + 1):
        lhs = egf_dual(stirling_column_series(m, order)).truncate(low)
        rhs = series_derivative(stirling_column_series(m + 1, order))
        expected = [stirling2(n + 1, m + 1) for n in range(low + 1)]
        worst.append(lhs.first_mismatch(rhs))
        worst.append(_first_mismatch(lhs.egf_values(), expected))
    return _earliest(*worst)


def _check_S20p(order: int) -> int | None:
    bell = series_exp(exp_minus_one(order))
    low = order - 1
    lhs = egf_dual(bell).truncate(low)
    rhs = series_derivative(bell)
    expected = [bell_number(n + 1) for n in range(low + 1)]
    return _earliest(lhs.first_mismatch(rhs), _first_mismatch(lhs.egf_values(), expected))


def _check_S22p(order: int) -> int | None:
    base = bell_poly_series(order)
    low = order - 1
    dual = egf_dual_poly(base).truncate(low)
    lhs = [slot.shift(1) for slot in dual]
    deriv = list(polyseries_derivative(base))
    expected = [bell_polynomial(n + 1) for n in range(low + 1)]
    return _earliest(_first_mismatch(lhs, deriv), _first_mismatch(lhs, expected))


def _check_S28p(order: int) -> int | None:
    base = fubini_poly_series(order)
    dual = egf_dual_poly(base)
    # second construction of e^t A(t,x): generic exponential-series product
    via_product = polyseries_mul(PolySeries.exp_t(order), base)
    low = order - 1
    lhs = [slot.shift(1) for slot in dual.truncate(low)]
    expected = []
    for n in range(low + 1):
        acc = IntPolynomial()
        for k in range(1, n + 1):
            acc = acc + binomial(n, k - 1) * fubini_polynomial(k)
        expected.append(fubini_polynomial(n + 1) - acc.shift(1))
    return _earliest(_first_mismatch(list(dual), list(via_product)), _first_mismatch(lhs, expected))


def _euler_samples(order: int) -> list[list[int]]:
    n = order + 1
    return [
        [1] * n,
        [bell_number(i) for i in range(n)],
        [fubini_number(i) for i in range(n)],
    ]


def _check_SEuler(order: int) -> int | None:
    worst = []
    for seq in _euler_samples(order):
        dual = ogf_dual(PowerSeries(seq, order))
        worst.append(_first_mismatch(list(dual), binomial_transform(seq)))
    return _earliest(*worst)


def _check_SSeidel(order: int) -> int | None:
    worst = []
    for seq in _euler_samples(order):
        dual = egf_dual(PowerSeries.from_egf(seq, order))
        worst.append(_first_mismatch(dual.egf_values(), binomial_transform(seq)))
    return _earliest(*worst)


SERIES_CHECKS: dict[str, Callable[[int], int | None]] = {
    "S5": _check_S5,
    "S7": _check_S7,
    "S15": _check_S15,
    "S17pp": _check_S17pp,
    "S20p": _check_S20p,
    "S22p": _check_S22p,
    "S28p": _check_S28p,
    "SEuler": _check_SEuler,
    "SSeidel": _check_SSeidel,
}

MIN_ORDER = 4


def run_series_checks(order: int = DEFAULT_ORDER, names: Sequence[str] | None = None) -> list[SeriesCheckResult]:
    if order < MIN_ORDER:
        raise ValueError(f"series checks need order >= {MIN_ORDER}, got {order}")
    selected = list(SERIES_CHECKS) if names is None else list(names)
    unknown = [n for n in selected if n not in SERIES_CHECKS]
    if unknown:
        raise KeyError(f"unknown series check(s) {unknown}; registered: {', '.join(SERIES_CHECKS)}")
    return [SeriesCheckResult(name, order, SERIES_CHECKS[name](order)) for name in selected]
