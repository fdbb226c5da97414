"""
Automorphism groups, canonical forms, isomorphism witnesses
===========================================================
"""

from symclass import automorphism_group, canonical_form, is_isomorphic, line_graph
from symclass.families import (
    complete,
    grid_complement,
    hamming,
    icosahedron,
    octahedron,
    petersen,
)

for fam in (octahedron(), icosahedron(), petersen(), hamming(2, 3)):
    group = automorphism_group(fam.graph)
    print(f"|Aut({fam.name})| = {group.order()}")

# the 3-cube in two guises: binary tuples vs the 2 x 4 grid complement
cube = hamming(3, 2).graph
crown = grid_complement(4).graph
print("canonical forms equal:", canonical_form(cube)[0] == canonical_form(crown)[0])

result = is_isomorphic(crown, cube)
print("isomorphic:", result.isomorphic, "witness:", result.mapping)

# the octahedron is the line graph of K4
lk4, _ = line_graph(complete(4).graph)
print("octahedron == L(K4):", bool(is_isomorphic(octahedron().graph, lk4)))
