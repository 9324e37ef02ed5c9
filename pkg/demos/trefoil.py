"""
The trefoil knot, start to finish
=================================

The (2,3) torus knot is the smallest knot there is, which makes it the
right place to watch the whole pipeline work: compute the three-variable
invariant, group it the way the tables are usually printed, then walk it
down the classical ladder.
"""

from torus_super import compute, specialize
from torus_super.cli import emit_grouped, emit_latex

trefoil = compute(2, 3)

# Three terms, constant term 1, only even powers of a.
print("P(2,3) =", trefoil.terms)
print()

# Grouped by a-degree, the shape used in printed tables.
print(emit_grouped(trefoil.terms))
print()

# All verification flags are set on the result itself.
print("flags:", trefoil.flags)
print()

# t = -1 collapses the homological grading: the HOMFLY polynomial.
print("HOMFLY  (t = -1):  ", specialize(trefoil, "homfly"))

# a = q^2 on top of that gives the Jones polynomial.
print("Jones   (a = q^2): ", specialize(trefoil, "jones"))

# a = 1 instead gives the Alexander polynomial.
print("Alexander (a = 1): ", specialize(trefoil, "alexander"))
print()

# The same table, typeset.
print(emit_latex(trefoil.terms))
