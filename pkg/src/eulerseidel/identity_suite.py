"""Registry of Stirling, Bell and Fubini identities, checked exactly over a
range of ``n``.

Each entry evaluates a left and a right side from a :class:`SequenceTables`
snapshot.  Identities that divide by ``x`` or ``1 + x`` are checked after
multiplying through, so everything stays in integer polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .exact_core import IntPolynomial, X, binomial, poly_derivative
from .sequences import SequenceTables

STIRLING_MAX_M = 8
NUMBER_MAX_N = 100
POLY_MAX_N = 40


@dataclass(frozen=True)
class Identity:
    name: str
    eq_label: str
    kind: str  # "number" or "polynomial"
    start: int
    # Stirling-family sides take (tables, n, m); the others take (tables, n)
    sides: Callable
    per_column: bool = False
    # largest index read from the tables for a given n
    reach: int = 1


@dataclass(frozen=True)
class Counterexample:
    n: int
    lhs: object
    rhs: object
    m: int | None = None

    def to_json(self) -> dict:
        out: dict = {"n": self.n}
        if self.m is not None:
            out["m"] = self.m
        out["lhs"] = serialize(self.lhs)
        out["rhs"] = serialize(self.rhs)
        return out


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    eq_label: str
    max_n: int
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "eq": self.eq_label, "max_n": self.max_n, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        return out


def serialize(value):
    """Decimal string for numbers, ascending coefficient strings for polynomials."""
    if isinstance(value, IntPolynomial):
        return value.to_json()
    return str(value)


def _zero_like(sample):
    return IntPolynomial() if isinstance(sample, IntPolynomial) else 0


def _bsum(terms, sample=0):
    acc = _zero_like(sample)
    for t in terms:
        acc = acc + t
    return acc


# Stirling numbers of the second kind ---------------------------------------


def _stirling_shift(T: SequenceTables, n: int, m: int):
    lhs = sum(binomial(n, k) * T.S(k, m) for k in range(n + 1))
    return lhs, T.S(n + 1, m + 1)


def _stirling_inverse(T: SequenceTables, n: int, m: int):
    lhs = sum(binomial(n, k) * (-1) ** (n - k) * T.S(k + 1, m + 1) for k in range(n + 1))
    return lhs, T.S(n, m)


# exponential numbers and polynomials ---------------------------------------


def _bell_shift(T: SequenceTables, n: int):
    phi = T.bell_numbers
    return phi[n + 1], sum(binomial(n, k) * phi[k] for k in range(n + 1))


def _bell_inverse(T: SequenceTables, n: int):
    phi = T.bell_numbers
    return phi[n], sum(binomial(n, k) * (-1) ** (n - k) * phi[k + 1] for k in range(n + 1))


def _bellpoly_shift(T: SequenceTables, n: int):
    phi = T.bell_polys
    rhs = _bsum((binomial(n, k) * phi[k] for k in range(n + 1)), phi[0]).shift(1)
    return phi[n + 1], rhs


def _bellpoly_inverse(T: SequenceTables, n: int):
    phi = T.bell_polys
    rhs = _bsum((binomial(n, k) * (-1) ** (n - k) * phi[k + 1] for k in range(n + 1)), phi[0])
    return phi[n].shift(1), rhs


def _bellpoly_derivative(T: SequenceTables, n: int):
    phi = T.bell_polys
    return phi[n + 1], (phi[n] + poly_derivative(phi[n])).shift(1)


def _bellpoly_symmetric(T: SequenceTables, n: int):
    phi = T.bell_polys
    lhs = _bsum((binomial(n, k) * (-1) ** k * phi[k] for k in range(n)), phi[0])
    rhs = _bsum((binomial(n, k) * (-1) ** (k - 1) * poly_derivative(phi[k]) for k in range(1, n + 1)), phi[0])
    return lhs, rhs


# geometric numbers and polynomials -----------------------------------------


def _fubini_double(T: SequenceTables, n: int):
    F = T.fubini_numbers
    return 2 * F[n], sum(binomial(n, k) * F[k] for k in range(n + 1))


def _fubini_inverse(T: SequenceTables, n: int):
    # The first column is (F_0, 2F_1, 2F_2, ...), so inverting it picks up a
    # correction (-1)^n F_0 on top of the doubled alternating sum.
    F = T.fubini_numbers
    return F[n], 2 * sum(binomial(n, k) * (-1) ** (n - k) * F[k] for k in range(n + 1)) - (-1) ** n * F[0]


def fubini_inverse_as_printed(F, n: int):
    """Sides of ``F_n = 2 sum C(n,k) (-1)^(n-k) F_k`` without the ``F_0`` term.

    Kept for documentation: this form fails for every ``n``.
    """
    return F[n], 2 * sum(binomial(n, k) * (-1) ** (n - k) * F[k] for k in range(n + 1))


def _fubini_column(T: SequenceTables, n: int) -> IntPolynomial:
    """First-column entry ``a_0^n`` of the geometric-polynomial matrix."""
    F = T.fubini_polys
    return _bsum((binomial(n, k) * F[k] for k in range(n + 1)), F[0])


def _fubinipoly_column(T: SequenceTables, n: int):
    F = T.fubini_polys
    tail = _bsum((binomial(n, k - 1) * F[k] for k in range(1, n + 1)), F[0])
    return _fubini_column(T, n).shift(1), F[n + 1] - tail.shift(1)


def _fubinipoly_recurrence(T: SequenceTables, n: int):
    F = T.fubini_polys
    return F[n], _bsum((binomial(n, k) * F[k] for k in range(n)), F[0]).shift(1)


def _fubinipoly_sum(T: SequenceTables, n: int):
    F = T.fubini_polys
    rhs = _bsum((binomial(n, k) * (F[k] + F[k + 1]) for k in range(n + 1)), F[0]).shift(1)
    return (1 + X) * F[n + 1], rhs


def _fubinipoly_derivative_rec(T: SequenceTables, n: int):
    F = T.fubini_polys
    rhs = _bsum((binomial(n, k) * (F[k] + poly_derivative(F[k]).shift(1)) for k in range(n + 1)), F[0])
    return F[n + 1], rhs.shift(1)


def _fubinipoly_symmetric(T: SequenceTables, n: int):
    F = T.fubini_polys
    lhs = _bsum((binomial(n, k) * poly_derivative(F[k]).shift(1) for k in range(n + 1)), F[0])
    rhs = _bsum((binomial(n, k - 1) * F[k] for k in range(1, n + 1)), F[0])
    return lhs, rhs


REGISTRY: dict[str, Identity] = {
    ident.name: ident
    for ident in [
        Identity("stirling_shift", "19", "number", 0, _stirling_shift, per_column=True, reach=1),
        Identity("stirling_inverse", "20", "number", 0, _stirling_inverse, per_column=True, reach=1),
        Identity("bell_shift", "21", "number", 0, _bell_shift),
        Identity("bell_inverse", "22", "number", 0, _bell_inverse),
        Identity("bellpoly_shift", "23'", "polynomial", 0, _bellpoly_shift),
        Identity("bellpoly_inverse", "24", "polynomial", 0, _bellpoly_inverse),
        Identity("bellpoly_derivative", "25'", "polynomial", 0, _bellpoly_derivative),
        Identity("bellpoly_symmetric", "26", "polynomial", 0, _bellpoly_symmetric, reach=0),
        # n = 0 reads 2F_0 = F_0, which is false
        Identity("fubini_double", "27", "number", 1, _fubini_double, reach=0),
        Identity("fubini_inverse", "28", "number", 1, _fubini_inverse, reach=0),
        Identity("fubinipoly_column", "29", "polynomial", 0, _fubinipoly_column),
        # n = 0 would give F_0 = 0
        Identity("fubinipoly_recurrence", "30", "polynomial", 1, _fubinipoly_recurrence, reach=0),
        Identity("fubinipoly_sum", "31", "polynomial", 0, _fubinipoly_sum),
        Identity("fubinipoly_derivative_rec", "32", "polynomial", 0, _fubinipoly_derivative_rec),
        Identity("fubinipoly_symmetric", "33", "polynomial", 0, _fubinipoly_symmetric, reach=0),
    ]
}


def registered_names() -> list[str]:
    return list(REGISTRY)


_TABLES_CACHE: dict[int, SequenceTables] = {}


def default_tables(size: int) -> SequenceTables:
    tables = _TABLES_CACHE.get(size)
    if tables is None:
        tables = _TABLES_CACHE.setdefault(size, SequenceTables.build(size))
    return tables


def check(name: str, max_n: int, tables: SequenceTables | None = None,
          max_m: int = STIRLING_MAX_M) -> IdentityCheck:
    """Verify identity ``name`` for every ``n`` from its start up to ``max_n``."""
    try:
        ident = REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; registered: {', '.join(REGISTRY)}") from None
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    if tables is None:
        tables = default_tables(max_n + 2)
    elif tables.size < max_n + 1 + ident.reach:
        raise ValueError(f"{name}: tables of size {tables.size} too small for max_n={max_n}")

    columns = range(max_m + 1) if ident.per_column else [None]
    for n in range(ident.start, max_n + 1):
        for m in columns:
            lhs, rhs = ident.sides(tables, n) if m is None else ident.sides(tables, n, m)
            if lhs != rhs:
                return IdentityCheck(name, ident.eq_label, max_n, Counterexample(n, lhs, rhs, m))
    return IdentityCheck(name, ident.eq_label, max_n)


def check_all(max_n: int, poly_max_n: int | None = None,
              tables: SequenceTables | None = None) -> list[IdentityCheck]:
    """Run the whole registry; polynomial identities use ``poly_max_n`` if given."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    poly_max_n = max_n if poly_max_n is None else poly_max_n
    if tables is None:
        tables = default_tables(max(max_n, poly_max_n) + 2)
    results = []
    for name, ident in REGISTRY.items():
        bound = poly_max_n if ident.kind == "polynomial" else max_n
        results.append(check(name, bound, tables))
    return results
