import pytest

from conftest import brute_closure, brute_order

from symclass import (
    Permutation,
    PermutationGroup,
    format_generator_file,
    parse_generator_file,
)
from symclass.errors import DegreeMismatch, ParseError, SizeCapExceeded
from symclass.families import (
    agl1,
    alt,
    cyclic,
    dihedral,
    icosahedral_rotations,
    octahedral,
    psl25,
    sym,
    two_homog_frobenius,
    wreath_bipartite,
    wreath_hamming,
)

CHAIN_BATTERY = [
    (lambda: sym(3), 6),
    (lambda: sym(4), 24),
    (lambda: sym(5), 120),
    (lambda: alt(4), 12),
    (lambda: alt(5), 60),
    (lambda: cyclic(6), 6),
    (lambda: dihedral(5), 10),
    (lambda: dihedral(6), 12),
    (lambda: octahedral(), 48),
    (lambda: agl1(5), 20),
    (lambda: agl1(7), 42),
    (lambda: two_homog_frobenius(7), 21),
    (lambda: two_homog_frobenius(11), 55),
    (lambda: psl25(), 60),
    (lambda: wreath_bipartite(2), 8),
    (lambda: wreath_bipartite(3), 72),
    (lambda: icosahedral_rotations(), 60),
]


@pytest.mark.parametrize("factory,expected", CHAIN_BATTERY)
def test_chain_order_matches_brute_closure(factory, expected):
    group = factory()
    closure = brute_closure(group.generators)
    assert group.order() == expected
    assert len(closure) == expected if closure else expected == 1


@pytest.mark.parametrize("factory,expected", CHAIN_BATTERY[:8])
def test_membership_accepts_exactly_the_closure(factory, expected):
    group = factory()
    closure = brute_closure(group.generators) or {Permutation.identity(group.degree)}
    for element in closure:
        assert element in group
    # an element outside: some transposition or cycle not in the closure
    n = group.degree
    for candidate in (Permutation.from_cycles(n, [(0, 1)]),
                      Permutation.from_cycles(n, [tuple(range(n))])):
        assert (candidate in group) == (candidate in closure)


def test_f21_from_explicit_generators():
    # x -> x+1 and x -> 2x mod 7
    shift = Permutation(tuple((x + 1) % 7 for x in range(7)))
    double = Permutation(tuple(2 * x % 7 for x in range(7)))
    group = PermutationGroup(7, [shift, double])
    assert group.order() == brute_order([shift, double]) == 21


def test_orbit_examples():
    trivial = PermutationGroup(5, [])
    assert trivial.orbit(0) == (0,)
    rotation = cyclic(6)
    assert rotation.orbit(2) == (0, 1, 2, 3, 4, 5)
    ico = icosahedral_rotations()
    for x in range(12):
        assert ico.orbit(x) == tuple(range(12))


def test_orbit_stabilizer_identity():
    for factory, _ in CHAIN_BATTERY:
        group = factory()
        for x in range(0, group.degree, max(1, group.degree // 3)):
            stab = group.point_stabilizer(x)
            assert group.order() == len(group.orbit(x)) * stab.order()


def test_point_stabilizer_s4():
    stab = sym(4).point_stabilizer(0)
    assert stab.order() == 6
    assert all(g.images[0] == 0 for g in stab.generators)


def test_point_stabilizer_octahedral():
    group = octahedral()
    stab = group.point_stabilizer(0)
    assert stab.order() == 8
    # transitive on the four neighbors of vertex 0 (everything except 0 and 3)
    assert stab.orbit(1) == (1, 2, 4, 5)


def test_point_stabilizer_hamming_wreath():
    group = wreath_hamming(two_homog_frobenius(7), 7)
    assert group.order() == 2688
    stab = group.point_stabilizer(0)
    assert stab.order() == 21  # 2688 / 128


def test_pointwise_stabilizer():
    group = sym(5)
    stab = group.pointwise_stabilizer((0, 1))
    assert stab.order() == 6
    assert all(g.images[0] == 0 and g.images[1] == 1 for g in stab.generators)


def test_elements_enumeration():
    group = octahedral()
    elements = group.elements()
    assert len(elements) == 48
    assert len(set(elements)) == 48
    assert elements == sorted(elements)
    assert set(elements) == brute_closure(group.generators)


def test_elements_cap():
    with pytest.raises(SizeCapExceeded):
        sym(12).elements()


def test_relabeled_group_is_conjugate():
    group = dihedral(5)
    phi = Permutation.from_cycles(5, [(0, 2, 4, 1, 3)])
    conjugated = group.relabeled(phi)
    assert conjugated.order() == group.order()
    # conjugation by a group element fixes the group
    inner = group.relabeled(group.generators[0])
    assert inner.same_group(group)


def test_generator_file_round_trip():
    group = octahedral()
    text = format_generator_file(group)
    parsed = parse_generator_file(text)
    assert parsed.degree == 6
    assert parsed.order() == 48
    assert parsed.same_group(group)


def test_generator_file_flip_and_pair_cycle():
    # flip of one antipodal pair plus a 3-cycle of pairs: the block image is
    # cyclic of order 3, so the group has order 8 * 3 = 24
    text = "degree 6\n(1 2)\n(1 3 5)(2 4 6)\n"
    group = parse_generator_file(text)
    assert group.order() == brute_order(group.generators) == 24


def test_generator_file_errors():
    with pytest.raises(ParseError, match="degree"):
        parse_generator_file("(1 2)\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_generator_file("degree 4\n(1 9)\n")
    with pytest.raises(ParseError):
        parse_generator_file("# only a comment\n")


def test_generator_file_comments_and_blanks():
    text = "# symmetry generators\ndegree 3\n\n(1 2)  # a swap\n(1 2 3)\n"
    assert parse_generator_file(text).order() == 6


def test_generator_degree_validation():
    with pytest.raises(DegreeMismatch):
        PermutationGroup(4, [Permutation.identity(3)])
