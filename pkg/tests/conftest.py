"""Shared brute-force oracles, kept independent of the library's fast paths."""

from __future__ import annotations

from itertools import permutations

from symclass import Graph, Permutation


def brute_closure(gens):
    """Multiplicative closure by breadth-first products; no stabilizer chain."""
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return set()
    identity = Permutation.identity(gens[0].degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in elements:
                    elements.add(b)
                    fresh.append(b)
        frontier = fresh
    return elements


def brute_order(gens) -> int:
    closure = brute_closure(gens)
    return len(closure) if closure else 1


def brute_aut_order(g: Graph) -> int:
    """All n! bijections, filtered by adjacency preservation."""
    count = 0
    edges = g.edges()
    for images in permutations(range(g.n)):
        if all(g.has_edge(images[u], images[v]) for u, v in edges):
            count += 1
    return count


def brute_layer_orbits(elements, base: int, layer) -> int:
    """Stabilizer orbits inside one distance layer, from an explicit element list."""
    stabilizer = [e for e in elements if e.images[base] == base]
    remaining = set(layer)
    orbits = 0
    while remaining:
        x = min(remaining)
        orbit = {e.images[x] for e in stabilizer}
        assert orbit <= set(layer)
        remaining -= orbit
        orbits += 1
    return orbits


def brute_is_2dt(g: Graph, elements) -> bool:
    """2-distance transitivity decided from the full element list."""
    if {e.images[0] for e in elements} != set(range(g.n)):
        return False
    from symclass import distance_partition

    dp = distance_partition(g, 0)
    if dp.eccentricity < 2:
        return False
    return all(brute_layer_orbits(elements, 0, dp.layers[i]) == 1 for i in (1, 2))


def index2_subgroup_count(elements) -> int:
    """Index-2 subgroups counted through the exponent-2 abelianization:
    closure of squares and commutators, then 2^rank - 1."""
    elements = list(elements)
    seeds = {a * a for a in elements}
    seeds |= {a.inverse() * b.inverse() * a * b for a in elements for b in elements}
    norm = brute_closure(seeds) or {Permutation.identity(elements[0].degree)}
    quotient = len(elements) // len(norm)
    rank = quotient.bit_length() - 1
    assert 1 << rank == quotient, "quotient by squares+commutators must be a 2-group"
    return (1 << rank) - 1
