"""Exhaustive subgroup enumeration for small groups.

Brute-force closure over a precomputed multiplication table, built up from
cyclic subgroups by adjoining one cyclic generator at a time. Every subgroup
is reachable this way, and deduplication by element set keeps the lattice walk
finite.
"""

from __future__ import annotations

from collections import deque

from .errors import BudgetExceeded
from .group import PermutationGroup
from .perm import Permutation

SUBGROUP_ORDER_CAP = 400


def enumerate_subgroups(group: PermutationGroup,
                        max_order: int = SUBGROUP_ORDER_CAP) -> list[PermutationGroup]:
    """All subgroups, deduplicated by element set, in a deterministic order
    (by order, then by sorted element list).

    Groups larger than ``max_order`` are refused: the enumeration is
    exponential, so restrict to a smaller group or use a targeted low-index
    search instead.
    """
    order = group.order()
    if order > max_order:
        raise BudgetExceeded(
            f"|G| = {order} exceeds the exhaustive-enumeration cap {max_order}; "
            "enumerate a smaller group or search for low-index subgroups directly")

    elements = group.elements()
    index = {p: i for i, p in enumerate(elements)}
    identity = index[Permutation.identity(group.degree)]
    table = [[index[a * b] for b in elements] for a in elements]

    def close(gen_ids):
        members = {identity}
        members.update(gen_ids)
        frontier = list(members)
        while frontier:
            fresh = []
            for a in frontier:
                row = table[a]
                for g in gen_ids:
                    c = row[g]
                    if c not in members:
                        members.add(c)
                        fresh.append(c)
            frontier = fresh
        return frozenset(members)

    # one representative generator per cyclic subgroup; adjoining any other
    # generator of the same cyclic group closes to the same subgroup
    cyclic: dict[frozenset, int] = {}
    for i in range(len(elements)):
        powers = {identity}
        x = i
        while x != identity:
            powers.add(x)
            x = table[x][i]
        cyclic.setdefault(frozenset(powers), i)
    reps = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    trivial = frozenset({identity})
    found: dict[frozenset, list[int]] = {trivial: []}
    queue = deque([trivial])
    for cyc, rep in reps:
        if cyc not in found:
            found[cyc] = [rep]
            queue.append(cyc)
    while queue:
        current = queue.popleft()
        gens = found[current]
        for cyc, rep in reps:
            if rep in current:
                continue
            bigger = close(gens + [rep])
            if bigger not in found:
                found[bigger] = gens + [rep]
                queue.append(bigger)

    ordered = sorted(
        found.items(),
        key=lambda kv: (len(kv[0]), tuple(sorted(elements[i].images for i in kv[0]))))
    return [
        PermutationGroup(group.degree, tuple(elements[i] for i in gens))
        for _, gens in ordered
    ]
