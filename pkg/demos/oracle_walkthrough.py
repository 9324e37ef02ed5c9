"""
The brute-force cross-check, in the open
========================================

Everything the invariant pipeline consumes is a closed-form product over
the cells of a Young diagram.  None of those products are trusted on
faith: an independent oracle builds the underlying symmetric polynomials
in explicit variables by Gram-Schmidt and re-derives each ingredient the
slow way.  This script shows what that looks like at small degree.
"""

from torus_super.oracle import (
    macdonald_P_mbasis,
    principal_value,
    verify_cauchy,
    verify_dimension,
    verify_orthogonality,
    verify_power_sum_expansion,
)
from torus_super.partitions import enumerate_partitions

# Degree 2: the first interesting case.  The row partition picks up a
# genuine (q,t) mixing coefficient; the column partition stays pure.
for y in enumerate_partitions(2):
    print(f"P_{y} in the monomial basis:")
    for mu, c in sorted(macdonald_P_mbasis(y).items(), reverse=True):
        print(f"   m_{mu}: {c}")
print()

# Principal specialization x_i = t^(i-1): the quantum dimension.
print("dim of the single box on 4 variables:", principal_value((1,), 4))
print()

# The checks the test suite leans on, degree by degree.
for n in range(1, 5):
    flags = [
        verify_orthogonality(n),
        verify_power_sum_expansion(n),
        all(verify_dimension(y, nv) for y in enumerate_partitions(n) for nv in (3, 4, 5)),
    ]
    print(f"degree {n}: orthogonality {flags[0]}, "
          f"expansion coefficients {flags[1]}, dimensions {flags[2]}")

print()
for order in (1, 2, 3):
    print(f"kernel identity to order {order}:", verify_cauchy(order, order, order))
