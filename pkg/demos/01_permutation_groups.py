"""
Permutation basics and stabilizer chains
========================================

Permutations act on 0-indexed points; composition is left-to-right, so
(p * q)(i) == q(p(i)). Cycle notation at the text boundary is 1-indexed.
"""

from symclass import Permutation, PermutationGroup, format_generator_file
from symclass.families import octahedral, sym, two_homog_frobenius

# compose two transpositions: apply (1 2) first, then (2 3)
p = Permutation.parse("(1 2)", 3)
q = Permutation.parse("(2 3)", 3)
print("p * q =", (p * q).cycle_string())

# the symmetric group on 4 points, with its order computed from the chain
s4 = sym(4)
print("|S4| =", s4.order())
print("orbit of 0:", s4.orbit(0))
print("|stabilizer of 0| =", s4.point_stabilizer(0).order())

# membership testing: even permutations of S4 form A4
rotation = Permutation.parse("(1 2 3)", 4)
swap = Permutation.parse("(1 2)", 4)
a4 = PermutationGroup(4, [rotation, Permutation.parse("(2 3 4)", 4)])
print("|A4| =", a4.order(), "| contains (1 2 3):", rotation in a4,
      "| contains (1 2):", swap in a4)

# the order-21 Frobenius group x -> x+1, x -> 2x mod 7: transitive on points
# and on unordered pairs, but splits the ordered pairs into two orbits
f21 = two_homog_frobenius(7)
print("|F21| =", f21.order())

# the octahedron symmetry group, serialized as a generator file
print()
print(format_generator_file(octahedral()))
