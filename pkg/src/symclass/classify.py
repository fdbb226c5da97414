"""Decision procedures for (graph, group) pairs: distance/arc/geodesic
transitivity, the grid condition, arithmetic conditions on 2-homogeneous
stabilizers, and classification against the built-in catalog rows."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations as _permutations

from .actions import induced_action, kernel_of_action, transitivity_degree_tests
from .autgroup import is_isomorphic
from .errors import (
    CompleteGraphError,
    DegreeMismatch,
    DisconnectedGraph,
    InvalidGraph,
    InvariantCellError,
    NotAnAutomorphismGroup,
    ParameterError,
)
from .families import (
    grid_complement,
    hamming,
    icosahedron,
    octahedron,
    preserves_graph,
)
from .graphs import (
    Graph,
    diameter,
    distance_partition,
    enumerate_s_arcs,
    girth,
    intersection_numbers,
    is_complete,
)
from .group import PermutationGroup
from .numtheory import prime_power
from .perm import Permutation


@dataclass
class TransitivityCheck:
    """A boolean verdict with the orbit evidence that produced it."""

    ok: bool
    reason: str | None = None
    evidence: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def _validate_pair(g: Graph, group: PermutationGroup, require_regular: bool = False) -> None:
    if g.n < 1:
        raise InvalidGraph("classification needs at least one vertex")
    if group.degree != g.n:
        raise DegreeMismatch(
            f"group degree {group.degree} does not match vertex count {g.n}")
    if not g.is_connected():
        raise DisconnectedGraph("classification is defined for connected graphs")
    for p in group.generators:
        if not preserves_graph(p, g):
            raise NotAnAutomorphismGroup(
                f"generator {p.cycle_string()} does not preserve the graph")
    if require_regular:
        g.valency()


def _orbit_counts_within(stab: PermutationGroup, subset) -> int:
    remaining = set(subset)
    count = 0
    while remaining:
        x = min(remaining)
        orbit = stab.orbit(x)
        if not set(orbit) <= set(subset):  # pragma: no cover - distance preserved
            raise AssertionError("stabilizer orbit left a distance layer")
        remaining.difference_update(orbit)
        count += 1
    return count


def is_s_distance_transitive(g: Graph, group: PermutationGroup, s: int) -> TransitivityCheck:
    """Vertex transitivity plus a single stabilizer orbit on each distance
    layer up to s (checked at base vertex 0; conjugacy covers the rest)."""
    _validate_pair(g, group)
    if s < 1:
        raise ParameterError("s must be at least 1")
    if not group.is_transitive():
        return TransitivityCheck(False, "not vertex-transitive",
                                 {"vertex_orbit_size": len(group.orbit(0))})
    dp = distance_partition(g, 0)
    if s > dp.eccentricity:
        return TransitivityCheck(
            False, f"s={s} exceeds the diameter {dp.eccentricity}",
            {"diameter": dp.eccentricity})
    stab = group.point_stabilizer(0)
    layer_orbits = {}
    ok = True
    for i in range(1, s + 1):
        layer_orbits[i] = _orbit_counts_within(stab, dp.layers[i])
        if layer_orbits[i] != 1:
            ok = False
    return TransitivityCheck(
        ok, None if ok else "stabilizer is intransitive on a layer",
        {"layer_orbit_counts": layer_orbits,
         "layer_sizes": {i: len(dp.layers[i]) for i in range(1, s + 1)}})


def _tuple_orbit_size(gens, start: tuple) -> int:
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for p in gens:
            image = tuple(p.images[x] for x in current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return len(seen)


def neighborhood_action(g: Graph, group: PermutationGroup, v: int) -> PermutationGroup:
    """The stabilizer of v restricted to the neighborhood of v."""
    stab = group.point_stabilizer(v)
    restricted, _ = induced_action(stab, [{w} for w in g.adjacency[v]])
    return restricted


def is_s_arc_transitive(g: Graph, group: PermutationGroup, s: int) -> TransitivityCheck:
    """Vertex transitivity plus a single orbit on s-arcs.

    For s = 2 the equivalent neighborhood criterion (stabilizer 2-transitive
    on the neighbors) is computed as well; the two answers must agree.
    """
    _validate_pair(g, group)
    if s not in (1, 2, 3):
        raise ParameterError("s must be 1, 2 or 3")
    if not group.is_transitive():
        return TransitivityCheck(False, "not vertex-transitive")
    arcs = enumerate_s_arcs(g, s)
    if not arcs:
        return TransitivityCheck(False, f"the graph has no {s}-arcs")
    orbit_size = _tuple_orbit_size(group.generators, arcs[0])
    ok = orbit_size == len(arcs)
    evidence = {"arc_count": len(arcs), "orbit_size": orbit_size}
    if s == 2 and g.degree(0) >= 2:
        flags = transitivity_degree_tests(neighborhood_action(g, group, 0))
        evidence["stabilizer_two_transitive_on_neighbors"] = flags.two_transitive
        assert flags.two_transitive == ok, "2-arc criteria disagree"
    return TransitivityCheck(ok, None if ok else "multiple orbits on arcs", evidence)


def is_2_geodesic_transitive(g: Graph, group: PermutationGroup) -> TransitivityCheck:
    """Arc transitivity plus a single orbit on 2-arcs with non-adjacent ends."""
    _validate_pair(g, group)
    if is_complete(g):
        raise CompleteGraphError("complete graphs have no 2-geodesics")
    at1 = is_s_arc_transitive(g, group, 1)
    if not at1:
        return TransitivityCheck(False, "not arc-transitive", at1.evidence)
    geodesics = [t for t in enumerate_s_arcs(g, 2) if not g.has_edge(t[0], t[2])]
    orbit_size = _tuple_orbit_size(group.generators, geodesics[0])
    ok = orbit_size == len(geodesics)
    return TransitivityCheck(
        ok, None if ok else "multiple orbits on 2-geodesics",
        {"geodesic_count": len(geodesics), "orbit_size": orbit_size})


@dataclass
class ConditionCheck:
    """Verdict of the grid condition, with the projection/kernel sub-flags."""

    satisfied: bool
    projects_onto_swap: bool
    kernel_order: int
    kernel_two_transitive: bool
    kernel_three_transitive: bool | None

    def __bool__(self) -> bool:
        return self.satisfied


def check_condition_3_1(group: PermutationGroup, m: int) -> ConditionCheck:
    """For a subgroup of the 2 x m grid symmetry group: does it project onto
    the row swap while its column kernel is 2- but not 3-transitive?"""
    if m < 3:
        raise ParameterError("the grid condition needs m >= 3")
    if group.degree != 2 * m:
        raise DegreeMismatch(f"expected degree {2 * m}, got {group.degree}")
    rows = [frozenset(range(m)), frozenset(range(m, 2 * m))]
    for gen in group.generators:
        image0 = frozenset(gen.images[p] for p in rows[0])
        if image0 == rows[0]:
            col_from_row1 = [gen.images[j] for j in range(m)]
            col_from_row2 = [gen.images[m + j] - m for j in range(m)]
        elif image0 == rows[1]:
            col_from_row1 = [gen.images[j] - m for j in range(m)]
            col_from_row2 = [gen.images[m + j] for j in range(m)]
        else:
            raise InvariantCellError("the two row cells are not invariant")
        if col_from_row1 != col_from_row2:
            raise InvariantCellError(
                "generator applies different column permutations to the two rows")
    projection, _ = induced_action(group, rows)
    kernel = kernel_of_action(group, rows)
    restricted, _ = induced_action(kernel, [{j} for j in range(m)])
    flags = transitivity_degree_tests(restricted)
    projects = projection.order() == 2
    satisfied = projects and flags.two_transitive and flags.three_transitive is False
    return ConditionCheck(
        satisfied=satisfied,
        projects_onto_swap=projects,
        kernel_order=kernel.order() if kernel.generators else 1,
        kernel_two_transitive=flags.two_transitive,
        kernel_three_transitive=flags.three_transitive,
    )


@dataclass
class ClaimVerdict:
    """Outcome of one catalog-claim verification."""

    claim: str
    status: str  # "verified" | "refuted" | "skipped"
    evidence: dict = field(default_factory=dict)
    reason: str | None = None

    def to_dict(self) -> dict:
        out = {"claim": self.claim, "status": self.status, "evidence": self.evidence}
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def check_kantor_conditions(group: PermutationGroup) -> ClaimVerdict:
    """Arithmetic constraints on a 2-homogeneous, not 2-transitive group:
    degree a prime power congruent to 3 mod 4, odd order divisible by
    n(n-1)/2. Skipped unless the precondition holds."""
    flags = transitivity_degree_tests(group)
    if not flags.two_homogeneous or flags.two_transitive:
        return ClaimVerdict(
            "kantor-conditions", "skipped",
            {"two_homogeneous": flags.two_homogeneous,
             "two_transitive": flags.two_transitive},
            reason="group is not 2-homogeneous-but-not-2-transitive")
    n = group.degree
    order = group.order()
    pp = prime_power(n)
    checks = {
        "degree": n,
        "order": order,
        "degree_is_prime_power": pp is not None,
        "degree_3_mod_4": n % 4 == 3,
        "order_odd": order % 2 == 1,
        "order_divisible_by_half_pairs": order % (n * (n - 1) // 2) == 0,
    }
    ok = (checks["degree_is_prime_power"] and checks["degree_3_mod_4"]
          and checks["order_odd"] and checks["order_divisible_by_half_pairs"])
    return ClaimVerdict("kantor-conditions", "verified" if ok else "refuted", checks)


# -- catalog rows -------------------------------------------------------------

ROW_GRID_COMPLEMENT_4 = "grid_complement(4)"
ROW_OCTAHEDRON = "octahedron"
ROW_HAMMING_2_3 = "hamming(2,3)"
ROW_LINE_GRAPH = "line_graph_of_cubic_3_arc_transitive"
ROW_GRID_COMPLEMENT_5 = "grid_complement(5)"
ROW_ICOSAHEDRON = "icosahedron"
ROW_GRID_COMPLEMENT_6 = "grid_complement(6)"

TABLE_ROWS = (
    ROW_GRID_COMPLEMENT_4,
    ROW_OCTAHEDRON,
    ROW_HAMMING_2_3,
    ROW_LINE_GRAPH,
    ROW_GRID_COMPLEMENT_5,
    ROW_ICOSAHEDRON,
    ROW_GRID_COMPLEMENT_6,
)


def _transport(group: PermutationGroup, mapping: tuple) -> PermutationGroup:
    return group.relabeled(Permutation(mapping))


def _match_grid_row(g: Graph, group: PermutationGroup, m: int) -> str | None:
    reference = grid_complement(m)
    iso = is_isomorphic(g, reference.graph)
    if not iso:
        return None
    if check_condition_3_1(_transport(group, iso.mapping), m).satisfied:
        return f"grid_complement({m})"
    return None


def _match_octahedron(g: Graph, group: PermutationGroup) -> str | None:
    reference = octahedron()
    iso = is_isomorphic(g, reference.graph)
    if not iso:
        return None
    transported = _transport(group, iso.mapping)
    if transported.order() not in (24, 48):
        return None
    blocks = [{0, 3}, {1, 4}, {2, 5}]
    projection, _ = induced_action(transported, blocks)
    return ROW_OCTAHEDRON if projection.order() == 6 else None


def _match_hamming23(g: Graph, group: PermutationGroup) -> str | None:
    reference = hamming(2, 3)
    iso = is_isomorphic(g, reference.graph)
    if not iso:
        return None
    transported = _transport(group, iso.mapping)
    if transported.order() not in (36, 72):
        return None
    # the six triangles split into the two parallel classes (rows / columns);
    # the row condition asks for an element swapping the classes
    rows = [frozenset({3 * i + j for j in range(3)}) for i in range(3)]
    cols = [frozenset({j, j + 3, j + 6}) for j in range(3)]
    for gen in transported.generators:
        image = frozenset(gen.images[v] for v in rows[0])
        if image in cols:
            return ROW_HAMMING_2_3
        if image not in rows:  # pragma: no cover - automorphisms permute triangles
            raise AssertionError("triangle image is neither a row nor a column")
    return None


def _match_line_graph_row(g: Graph, group: PermutationGroup) -> str | None:
    dp = distance_partition(g, 0)
    if len(dp.layer(2)) != 8:
        return None
    if is_2_geodesic_transitive(g, group):
        return ROW_LINE_GRAPH
    return None


def _match_icosahedron(g: Graph, group: PermutationGroup) -> str | None:
    reference = icosahedron()
    iso = is_isomorphic(g, reference.graph)
    if not iso:
        return None
    return ROW_ICOSAHEDRON if group.order() in (60, 120) else None


def _match_table_row(g: Graph, group: PermutationGroup, valency: int, girth_value) -> str | None:
    if (valency, girth_value) == (3, 4):
        return _match_grid_row(g, group, 4)
    if (valency, girth_value) == (4, 4):
        return _match_grid_row(g, group, 5)
    if (valency, girth_value) == (5, 4):
        return _match_grid_row(g, group, 6)
    if (valency, girth_value) == (4, 3):
        return (_match_octahedron(g, group)
                or _match_hamming23(g, group)
                or _match_line_graph_row(g, group))
    if (valency, girth_value) == (5, 3):
        return _match_icosahedron(g, group)
    return None


@dataclass
class TransitivityReport:
    """Full verdict for one (graph, group) pair."""

    vertex_count: int
    valency: int
    girth: object
    diameter: int
    group_order: int
    vertex_transitive: bool
    distance_transitive: dict
    arc_transitive: dict
    two_geodesic_transitive: bool | None
    intersection_triples: tuple
    layer_regular: tuple
    neighborhood: dict
    shortcuts: dict
    matched_row: str | None

    def to_dict(self) -> dict:
        return {
            "graph": {
                "vertices": self.vertex_count,
                "valency": self.valency,
                "girth": None if self.girth == math.inf else self.girth,
                "diameter": self.diameter,
            },
            "group": {"order": self.group_order},
            "vertex_transitive": self.vertex_transitive,
            "distance_transitive": {str(s): v for s, v in self.distance_transitive.items()},
            "arc_transitive": {str(s): v for s, v in self.arc_transitive.items()},
            "two_geodesic_transitive": self.two_geodesic_transitive,
            "intersection_numbers": [list(t) if t is not None else None
                                     for t in self.intersection_triples],
            "layer_regular": list(self.layer_regular),
            "neighborhood": self.neighborhood,
            "shortcuts": self.shortcuts,
            "matched_row": self.matched_row,
        }


def classify_pair(g: Graph, group: PermutationGroup) -> TransitivityReport:
    """Fill the whole report: transitivity flags, intersection numbers,
    neighborhood orbit counts, girth shortcuts, and the catalog row (with
    "VIOLATION" when a qualifying pair matches no row)."""
    _validate_pair(g, group, require_regular=True)
    valency = g.valency()
    girth_value = girth(g)
    complete_graph = is_complete(g)
    dt = {s: is_s_distance_transitive(g, group, s) for s in (1, 2)}
    at = {s: is_s_arc_transitive(g, group, s) for s in (1, 2)}
    gt2 = None if complete_graph else bool(is_2_geodesic_transitive(g, group))
    inter = intersection_numbers(g, 0)
    dp = distance_partition(g, 0)

    neighborhood: dict = {"neighborhood_size": valency,
                          "second_layer_size": len(dp.layer(2))}
    if group.is_transitive() and valency >= 1:
        stab = group.point_stabilizer(0)
        neighborhood["orbits_on_neighbors"] = _orbit_counts_within(stab, dp.layer(1))
        if dp.layer(2):
            neighborhood["orbits_on_second_layer"] = _orbit_counts_within(stab, dp.layer(2))
        if valency >= 2:
            restricted = neighborhood_action(g, group, 0)
            pair_orbits = 0
            seen: set = set()
            for pair in _permutations(range(valency), 2):
                if pair in seen:
                    continue
                pair_orbits += 1
                queue = deque([pair])
                seen.add(pair)
                while queue:
                    current = queue.popleft()
                    for p in restricted.generators:
                        image = (p.images[current[0]], p.images[current[1]])
                        if image not in seen:
                            seen.add(image)
                            queue.append(image)
            neighborhood["orbits_on_ordered_neighbor_pairs"] = pair_orbits

    girth5_applicable = girth_value >= 5 and bool(dt[2])
    girth3_applicable = girth_value == 3 and not complete_graph
    shortcuts = {
        "girth_ge_5_forces_2at": {
            "applicable": girth5_applicable,
            "agrees": (not girth5_applicable) or bool(at[2]),
        },
        "girth_3_blocks_2at": {
            "applicable": girth3_applicable,
            "agrees": (not girth3_applicable) or not bool(at[2]),
        },
    }

    matched = None
    if bool(dt[2]) and not bool(at[2]) and valency <= 5 and not complete_graph:
        matched = _match_table_row(g, group, valency, girth_value) or "VIOLATION"

    return TransitivityReport(
        vertex_count=g.n,
        valency=valency,
        girth=girth_value,
        diameter=diameter(g),
        group_order=group.order(),
        vertex_transitive=group.is_transitive(),
        distance_transitive={s: bool(v) for s, v in dt.items()},
        arc_transitive={s: bool(v) for s, v in at.items()},
        two_geodesic_transitive=gt2,
        intersection_triples=inter.triples,
        layer_regular=inter.well_defined,
        neighborhood=neighborhood,
        shortcuts=shortcuts,
        matched_row=matched,
    )
