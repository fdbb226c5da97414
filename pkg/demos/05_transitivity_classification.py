"""
Classifying (graph, group) pairs
================================

A pair is 2-distance transitive when the group is vertex-transitive and a
vertex stabilizer is transitive on both the neighborhood and the second
layer; 2-arc transitivity asks for a single orbit on non-backtracking paths
of length 2. Pairs that are 2-distance but not 2-arc transitive with valency
at most 5 land in one of seven catalog rows.
"""

from symclass import classify_pair, edge_action, line_graph
from symclass.families import (
    agl1,
    alt,
    complete,
    complete_bipartite,
    direct_product,
    grid_complement,
    icosahedral_rotations,
    icosahedron,
    octahedral,
    octahedron,
    petersen,
    petersen_sym5,
    sym,
    wreath_bipartite,
)


def show(name, graph, group):
    report = classify_pair(graph, group)
    dt2 = report.distance_transitive[2]
    at2 = report.arc_transitive[2]
    row = report.matched_row or "-"
    print(f"{name:34} valency {report.valency}  girth {report.girth}  "
          f"2-DT {str(dt2):5}  2-AT {str(at2):5}  row: {row}")


show("octahedron + full wreath", octahedron().graph, octahedral())
show("icosahedron + rotations", icosahedron().graph, icosahedral_rotations())
show("grid_complement(4) + S2 x A4", grid_complement(4).graph,
     direct_product(sym(2), alt(4)))
show("grid_complement(5) + S2 x AGL(1,5)", grid_complement(5).graph,
     direct_product(sym(2), agl1(5)))

lp, _ = line_graph(petersen().graph)
show("L(Petersen) + lifted S5", lp, edge_action(petersen_sym5(), petersen().graph))

# near-misses: 2-arc transitive or not even 2-distance transitive
show("K(4,4) + full wreath", complete_bipartite(4, 4).graph, wreath_bipartite(4))
show("K5 + S5", complete(5).graph, sym(5))
