#!/usr/bin/env python3
"""Generating-function identities, verified coefficient by coefficient.

Both counting sequences live naturally in series with the basis
x^n / (n! * 2^C(n,2)).  Writing E for the all-ones series, D for the
series of DAG counts, and V for the orientable series, two exact
identities hold:

    E(-x) * D(x) = 1
    D(x/2) * E(-x) + V(x) = D(x/2)

Eliminating D expresses V as the quotient (1 - E(-x)) / E(-x/2), which is
solved below by forward substitution.  Everything is exact rational
arithmetic, so "verified to order N" means exactly that.
"""

from fractions import Fraction

from cubecovers import (
    chrom_mul,
    count_orientable_dags,
    dag_series,
    deformed_exp_series,
    orientable_from_quotient,
    unit_series,
    verify_identities,
)

ORDER = 16

print(f"checking both identities to order {ORDER}")
for check in verify_identities(ORDER):
    print(f"  {check.name}: {'pass' if check.passed else 'FAIL'}")

# The first identity, spelled out: multiplying the alternating all-ones
# series by the DAG series kills every coefficient above the constant.
product = chrom_mul(
    deformed_exp_series(ORDER).scale_argument(-1), dag_series(ORDER)
)
print("\nE(-x) * D(x) coefficients:", [str(c) for c in product.coeffs[:6]], "...")
assert product == unit_series(ORDER)

# The quotient route never consults the orientable counting formula, yet
# it reproduces the same integers.
quotient = orientable_from_quotient(ORDER)
print("\nquotient coefficients (note the forced 0 at n = 0):")
print("  ", [str(c) for c in quotient.coeffs[:9]], "...")
for n in range(1, ORDER + 1):
    assert quotient.coefficient(n) == count_orientable_dags(n)
print("all agree with the inclusion-exclusion formula for n = 1 ..", ORDER)

# The convolution on this basis is exact and integer-friendly; compare a
# single coefficient by hand:
e = deformed_exp_series(2)
print("\n(E * E) coefficient at n = 2:", chrom_mul(e, e).coefficient(2), "= 1 + 2*2 + 1")

# Scaling the argument by 1/2 divides the n-th coefficient by 2^n.
d_half = dag_series(4).scale_argument(Fraction(1, 2))
print("D(x/2) coefficients:", [str(c) for c in d_half.coeffs])
