"""Exact arithmetic for chromatic generating functions.

A chromatic generating function stores a sequence a_0 .. a_N against the
basis x^n / (n! * 2^C(n,2)).  On that basis the product of two series has
the integer-friendly convolution

    c_n = sum_{k=0..n} C(n,k) * 2^(k(n-k)) * a_k * b_{n-k},

because C(n,2) = C(k,2) + C(n-k,2) + k(n-k).  Working in this basis keeps
every identity below in small exact rationals instead of the astronomically
scaled plain power-series coefficients.

Notation used throughout this module:

    E(x) = series with every coefficient 1   (the deformed exponential,
           sum_n x^n / (n! 2^C(n,2)), as an entire function)
    D(x) = series of the DAG counts D(n)
    V(x) = series of the orientable counts, with constant term 0

Two exact identities tie them together at every order:

    E(-x) * D(x) = 1
    D(x/2) * E(-x) + V(x) = D(x/2)

and eliminating D gives V(x) = (1 - E(-x)) / E(-x/2), which
:func:`orientable_from_quotient` solves coefficient by coefficient.

Note on the constant term: both identities, and the quotient, force
V_0 = 0, while the combinatorial count of zero-vertex digraphs is 1 (the
empty digraph, see :func:`cubecovers.counting.count_orientable_dags`).
The constant coefficient is the single index where the series
normalization and the combinatorial count differ; every coefficient with
n >= 1 agrees exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from cubecovers.counting import binomial, count_dags, count_orientable_dags


__all__ = [
    "ChromaticSeries",
    "IdentityCheck",
    "chrom_mul",
    "dag_series",
    "deformed_exp_series",
    "derivative_identity_first_failure",
    "orientable_from_quotient",
    "orientable_series",
    "unit_series",
    "verify_identities",
]


@dataclass(frozen=True)
class ChromaticSeries:
    """Coefficients a_0 .. a_N on the basis x^n / (n! * 2^C(n,2)).

    The truncation order N is ``len(coeffs) - 1`` and is part of the value:
    equality compares both the order and every coefficient.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        return self.coeffs[n]

    def plain_coefficient(self, n: int) -> Fraction:
        """The ordinary power-series coefficient of x^n."""
        return self.coeffs[n] / (math.factorial(n) * (1 << (n * (n - 1) // 2)))

    def truncate(self, order: int) -> ChromaticSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series from order {self.order} to {order}")
        return ChromaticSeries(self.coeffs[: order + 1])

    def scale_argument(self, s) -> ChromaticSeries:
        """Substitute x -> s*x, which scales the n-th coefficient by s^n."""
        s = Fraction(s)
        return ChromaticSeries(
            tuple(c * s**n for n, c in enumerate(self.coeffs))
        )

    def __mul__(self, other: ChromaticSeries) -> ChromaticSeries:
        return chrom_mul(self, other)

    def __add__(self, other: ChromaticSeries) -> ChromaticSeries:
        order = min(self.order, other.order)
        return ChromaticSeries(
            tuple(self.coeffs[n] + other.coeffs[n] for n in range(order + 1))
        )

    def __sub__(self, other: ChromaticSeries) -> ChromaticSeries:
        order = min(self.order, other.order)
        return ChromaticSeries(
            tuple(self.coeffs[n] - other.coeffs[n] for n in range(order + 1))
        )

    def __neg__(self) -> ChromaticSeries:
        return ChromaticSeries(tuple(-c for c in self.coeffs))


def chrom_mul(a: ChromaticSeries, b: ChromaticSeries) -> ChromaticSeries:
    """Product on the chromatic basis, truncated to the smaller order."""
    order = min(a.order, b.order)
    coeffs = []
    for n in range(order + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += binomial(n, k) * (1 << (k * (n - k))) * a.coeffs[k] * b.coeffs[n - k]
        coeffs.append(acc)
    return ChromaticSeries(tuple(coeffs))


def unit_series(order: int) -> ChromaticSeries:
    """The multiplicative identity: constant coefficient 1, rest 0."""
    return ChromaticSeries((Fraction(1),) + (Fraction(0),) * order)


def deformed_exp_series(order: int) -> ChromaticSeries:
    """E(x): every chromatic coefficient is 1."""
    return ChromaticSeries((Fraction(1),) * (order + 1))


def dag_series(order: int) -> ChromaticSeries:
    """D(x): chromatic coefficients are the exact DAG counts."""
    return ChromaticSeries(tuple(Fraction(count_dags(n)) for n in range(order + 1)))


def orientable_series(order: int) -> ChromaticSeries:
    """V(x): orientable counts for n >= 1, constant term 0.

    The zero constant term is what the identities in the module docstring
    require; the combinatorial count at n = 0 is 1.
    """
    coeffs = [Fraction(0)]
    coeffs.extend(Fraction(count_orientable_dags(n)) for n in range(1, order + 1))
    return ChromaticSeries(tuple(coeffs))


def orientable_from_quotient(order: int) -> ChromaticSeries:
    """Solve V(x) * E(-x/2) = 1 - E(-x) for V, coefficient by coefficient.

    The divisor has constant term 1, so forward substitution needs no
    division at all; the solution is produced without consulting the
    orientable counting formula, which makes it an independent route to the
    same integers.
    """
    divisor = deformed_exp_series(order).scale_argument(Fraction(-1, 2))
    numerator = unit_series(order) - deformed_exp_series(order).scale_argument(-1)
    coeffs: list[Fraction] = []
    for n in range(order + 1):
        acc = numerator.coeffs[n]
        for k in range(n):
            acc -= binomial(n, k) * (1 << (k * (n - k))) * coeffs[k] * divisor.coeffs[n - k]
        coeffs.append(acc)
    return ChromaticSeries(tuple(coeffs))


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one coefficientwise identity comparison."""

    name: str
    order: int
    passed: bool
    first_failure: int | None


def _first_mismatch(a: ChromaticSeries, b: ChromaticSeries) -> int | None:
    for n in range(min(a.order, b.order) + 1):
        if a.coeffs[n] != b.coeffs[n]:
            return n
    return None


def verify_identities(order: int) -> list[IdentityCheck]:
    """Check both product identities exactly up to the given order.

    The DAG and orientable coefficients come from the closed-form counters
    in :mod:`cubecovers.counting`, so a failure here indicts either those
    formulas or the convolution rule.  Failures are reported, not raised.
    """
    alternating = deformed_exp_series(order).scale_argument(-1)
    dags = dag_series(order)
    results = []

    lhs = chrom_mul(alternating, dags)
    miss = _first_mismatch(lhs, unit_series(order))
    results.append(
        IdentityCheck("alternating-inverse", order, miss is None, miss)
    )

    halved = dags.scale_argument(Fraction(1, 2))
    lhs = chrom_mul(halved, alternating) + orientable_series(order)
    miss = _first_mismatch(lhs, halved)
    results.append(
        IdentityCheck("half-argument-decomposition", order, miss is None, miss)
    )
    return results


def derivative_identity_first_failure(max_n: int) -> int | None:
    """Termwise check that E'(x) = E(x/2), in exact rationals.

    Differentiating the n-th basis term of E gives the coefficient
    1 / ((n-1)! * 2^C(n,2)) on x^(n-1); halving the argument of the
    (n-1)-th term gives (1/2)^(n-1) / ((n-1)! * 2^C(n-1,2)).  These are
    equal because C(n,2) - C(n-1,2) = n - 1.  Returns the first n in
    ``1 .. max_n`` where the rationals differ, or None.
    """
    for n in range(1, max_n + 1):
        derived = Fraction(1, math.factorial(n - 1) * (1 << (n * (n - 1) // 2)))
        halved = Fraction(1, 1 << (n - 1)) * Fraction(
            1, math.factorial(n - 1) * (1 << ((n - 1) * (n - 2) // 2))
        )
        if derived != halved:
            return n
    return None
