"""
Exploratory: swapping the windings, and the classical shadow
============================================================

Topologically the (n,m) and (m,n) torus knots are the same knot, but the
formula implemented here is not claimed to be symmetric in n and m.
This script reports what actually happens, without asserting anything:
first on the full three-variable invariants, then after the t = -1
reduction, where classical HOMFLY invariance is expected to reappear.
"""

from torus_super import NonPolynomial, compute, specialize
from torus_super.algebra import format_polynomial

SWAPS = [((2, 3), (3, 2)), ((2, 5), (5, 2)), ((2, 7), (7, 2)), ((3, 4), (4, 3))]

print("full (a, q, t) invariants under n <-> m")
for (n1, m1), (n2, m2) in SWAPS:
    first = compute(n1, m1)
    second = compute(n2, m2)
    if isinstance(first, NonPolynomial) or isinstance(second, NonPolynomial):
        print(f"  ({n1},{m1}) vs ({n2},{m2}): not both polynomial")
        continue
    same = first.terms == second.terms
    print(f"  ({n1},{m1}) vs ({n2},{m2}): {'equal' if same else 'DIFFERENT'} "
          f"({first.terms.term_count} vs {second.terms.term_count} terms)")
print()

print("the same pairs after t = -1")
for (n1, m1), (n2, m2) in SWAPS:
    first = compute(n1, m1)
    second = compute(n2, m2)
    if isinstance(first, NonPolynomial) or isinstance(second, NonPolynomial):
        continue
    h1 = specialize(first, "homfly")
    h2 = specialize(second, "homfly")
    same = h1 == h2
    print(f"  ({n1},{m1}) vs ({n2},{m2}): {'equal' if same else 'DIFFERENT'}")
    if not same:
        print(f"    ({n1},{m1}): {format_polynomial(h1)}")
        print(f"    ({n2},{m2}): {format_polynomial(h2)}")
print()

# The reductions pick up negative coefficients even though the
# three-variable invariant is positive; the trefoil is the known anchor.
print("t = -1 reductions across small knots")
for n, m in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)]:
    homfly = specialize(compute(n, m), "homfly")
    signs = {1 if c > 0 else -1 for c in homfly.terms.values()}
    mixed = "mixed signs" if len(signs) == 2 else "one sign"
    print(f"  ({n},{m}): {format_polynomial(homfly)}   [{mixed}]")
