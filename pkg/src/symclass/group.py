"""Permutation groups backed by deterministic Schreier-Sims stabilizer chains.

The chain fixes base points in a reproducible way (any caller-supplied prefix
first, then the smallest point moved at each level), so orders, element
enumerations and stabilizer generators are byte-for-byte stable across runs.
"""

from __future__ import annotations

from collections import deque

from .errors import DegreeMismatch, ParameterError, ParseError, SizeCapExceeded
from .perm import Permutation

_ELEMENTS_CAP = 2_000_000


class StabilizerChain:
    """Base and strong generating set for a permutation group.

    Per level ``i`` the chain stores the generators introduced there (they fix
    ``base[:i]`` and move ``base[i]``) and a transversal mapping each point of
    the basic orbit to a coset representative ``t`` with ``t(base[i]) ==
    point``.
    """

    def __init__(self, degree: int, generators, base_prefix=()):
        self.degree = degree
        self.base: list[int] = []
        self._gens: list[list[Permutation]] = []
        self._trans: list[dict[int, Permutation]] = []
        self._inv: list[dict[int, Permutation]] = []
        self._done: list[set] = []
        seen_prefix = set()
        for beta in base_prefix:
            if not 0 <= beta < degree:
                raise ParameterError(f"base point {beta} out of range for degree {degree}")
            if beta not in seen_prefix:
                seen_prefix.add(beta)
                self._new_level(beta)
        self.prefix_length = len(self.base)
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} does not match group degree {degree}")
            if not g.is_identity():
                self._place(g)
        self._close()

    # -- construction ------------------------------------------------------

    def _new_level(self, beta: int) -> None:
        ident = Permutation.identity(self.degree)
        self.base.append(beta)
        self._gens.append([])
        self._trans.append({beta: ident})
        self._inv.append({beta: ident})
        self._done.append(set())

    def _place(self, g: Permutation) -> None:
        for i, beta in enumerate(self.base):
            if g.images[beta] != beta:
                self._gens[i].append(g)
                return
        self._new_level(min(g.support()))
        self._gens[-1].append(g)

    def _gens_from(self, i: int) -> list[Permutation]:
        out = []
        for level in self._gens[i:]:
            out.extend(level)
        return out

    def _extend_orbit(self, i: int) -> None:
        gens = self._gens_from(i)
        trans, inv = self._trans[i], self._inv[i]
        queue = deque(sorted(trans))
        while queue:
            b = queue.popleft()
            tb = trans[b]
            for s in gens:
                c = s.images[b]
                if c not in trans:
                    rep = tb * s
                    trans[c] = rep
                    inv[c] = rep.inverse()
                    queue.append(c)

    def _close(self) -> None:
        # Standard bottom-up Schreier-Sims: a level is complete once all its
        # Schreier generators sift to the identity through the levels below.
        i = len(self.base) - 1
        while i >= 0:
            j = self._check_level(i)
            i = i - 1 if j is None else j

    def _check_level(self, i: int):
        self._extend_orbit(i)
        gens = self._gens_from(i)
        trans = self._trans[i]
        inv = self._inv[i]
        done = self._done[i]
        for b in sorted(trans):
            tb = trans[b]
            for s in gens:
                key = (b, s)
                if key in done:
                    continue
                # membership in the subgroup below only ever grows, so a pair
                # that sifted to the identity once never needs rechecking
                done.add(key)
                schreier = tb * s * inv[s.images[b]]
                if schreier.is_identity():
                    continue
                h, j = self._strip(schreier, i + 1)
                if h.is_identity():
                    continue
                if j == len(self.base):
                    self._new_level(min(h.support()))
                self._gens[j].append(h)
                return j
        return None

    # -- queries -----------------------------------------------------------

    def _strip(self, g: Permutation, start: int = 0):
        i = start
        while i < len(self.base):
            inv = self._inv[i].get(g.images[self.base[i]])
            if inv is None:
                return g, i
            g = g * inv
            i += 1
        return g, i

    def order(self) -> int:
        result = 1
        for trans in self._trans:
            result *= len(trans)
        return result

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        residue, i = self._strip(p)
        return i == len(self.base) and residue.is_identity()

    def basic_orbit(self, i: int) -> tuple:
        return tuple(sorted(self._trans[i]))

    def strong_generators(self, from_level: int = 0) -> list[Permutation]:
        """Strong generators fixing ``base[:from_level]`` pointwise."""
        out = []
        seen = set()
        for g in self._gens_from(from_level):
            if g not in seen:
                seen.add(g)
                out.append(g)
        return out

    def elements(self) -> list[Permutation]:
        """All elements, sorted by image tuple. Refuses to materialize huge groups."""
        if self.order() > _ELEMENTS_CAP:
            raise SizeCapExceeded(
                f"refusing to enumerate {self.order()} elements (cap {_ELEMENTS_CAP})")
        elems = [Permutation.identity(self.degree)]
        for i in range(len(self.base) - 1, -1, -1):
            reps = [self._trans[i][b] for b in sorted(self._trans[i])]
            elems = [e * t for e in elems for t in reps]
        return sorted(elems)


class PermutationGroup:
    """A group of permutations of {0..degree-1} given by generators.

    The stabilizer chain is built lazily on first use and cached; instances
    are immutable afterwards and safe to share between threads.
    """

    __slots__ = ("degree", "generators", "_chain")

    def __init__(self, degree: int, generators=()):
        if degree < 1:
            raise ParameterError("group degree must be at least 1")
        generators = tuple(generators)
        for g in generators:
            if not isinstance(g, Permutation):
                raise ParameterError(f"generator {g!r} is not a Permutation")
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} does not match group degree {degree}")
        self.degree = degree
        self.generators = generators
        self._chain = None

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, p: Permutation) -> bool:
        return self.chain.contains(p)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def orbit(self, x: int) -> tuple:
        """The orbit of ``x``, in ascending point order."""
        if not 0 <= x < self.degree:
            raise ParameterError(f"point {x} out of range for degree {self.degree}")
        seen = {x}
        queue = deque([x])
        while queue:
            a = queue.popleft()
            for g in self.generators:
                b = g.images[a]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return tuple(sorted(seen))

    def orbits(self) -> list[tuple]:
        out = []
        remaining = set(range(self.degree))
        while remaining:
            orb = self.orbit(min(remaining))
            out.append(orb)
            remaining.difference_update(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def point_stabilizer(self, x: int) -> "PermutationGroup":
        """The stabilizer of ``x``, from a chain whose base starts at ``x``."""
        chain = StabilizerChain(self.degree, self.generators, base_prefix=(x,))
        return PermutationGroup(self.degree, chain.strong_generators(chain.prefix_length))

    def pointwise_stabilizer(self, points) -> "PermutationGroup":
        chain = StabilizerChain(self.degree, self.generators, base_prefix=tuple(points))
        return PermutationGroup(self.degree, chain.strong_generators(chain.prefix_length))

    def elements(self) -> list[Permutation]:
        return self.chain.elements()

    def relabeled(self, phi: Permutation) -> "PermutationGroup":
        """The same group acting through the relabeling ``phi`` (old -> new points)."""
        if phi.degree != self.degree:
            raise DegreeMismatch("relabeling degree does not match group degree")
        phi_inv = phi.inverse()
        return PermutationGroup(
            self.degree, tuple(phi_inv * g * phi for g in self.generators))

    def same_group(self, other: "PermutationGroup") -> bool:
        if self.degree != other.degree or self.order() != other.order():
            return False
        return all(g in self for g in other.generators)

    def __repr__(self):
        return f"PermutationGroup(degree={self.degree}, generators={len(self.generators)})"


# -- generator files --------------------------------------------------------
#
# Format: a mandatory header line ``degree N`` followed by one permutation per
# line in 1-indexed disjoint-cycle notation. Blank lines and ``#`` comments
# are ignored.


def parse_generator_file(text: str) -> PermutationGroup:
    degree = None
    generators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise ParseError(
                    f"line {lineno}: expected header 'degree N', got {raw!r}")
            degree = int(parts[1])
            if degree < 1:
                raise ParseError(f"line {lineno}: degree must be at least 1")
            continue
        try:
            generators.append(Permutation.parse(line, degree))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise ParseError("missing mandatory 'degree N' header line")
    return PermutationGroup(degree, generators)


def format_generator_file(group: PermutationGroup) -> str:
    lines = [f"degree {group.degree}"]
    lines.extend(g.cycle_string() for g in group.generators)
    return "\n".join(lines) + "\n"
