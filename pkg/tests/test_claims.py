import pytest

from symclass import CLAIM_DESCRIPTIONS, CLAIM_IDS, Budget, verify_claim
from symclass.claims import corpus_profiles, standard_corpus
from symclass.errors import UnknownClaim


def test_claim_ids_have_descriptions():
    assert set(CLAIM_IDS) == set(CLAIM_DESCRIPTIONS)


def test_unknown_claim():
    with pytest.raises(UnknownClaim, match="known claims"):
        verify_claim("L9.9")


def test_claim_lookup_is_case_insensitive():
    assert verify_claim("l4.1").status == "verified"


def test_corpus_is_consistent():
    profiles = corpus_profiles()
    assert len(profiles) == len(standard_corpus()) >= 20
    names = [p.name for p in profiles]
    assert len(set(names)) == len(names)


def test_girth_shortcut_claim():
    verdict = verify_claim("L2.2")
    assert verdict.status == "verified"
    assert verdict.evidence["failures"] == []
    assert verdict.evidence["girth3_implications"] >= 3


def test_grid_complement_equivalence_claim():
    verdict = verify_claim("L3.2")
    assert verdict.status == "verified"
    assert verdict.evidence["m4_subgroups"] == 98
    assert verdict.evidence["m4_condition_count"] == 2
    assert verdict.evidence["m4_discrepancies"] == []


def test_complete_bipartite_claim():
    verdict = verify_claim("L3.3")
    assert verdict.status == "verified"
    assert verdict.evidence["discrepancies"] == []
    assert verdict.evidence["m2_subgroups"] == 10


def test_octahedron_claim():
    verdict = verify_claim("L3.4")
    assert verdict.status == "verified"
    assert verdict.evidence["two_dt_orders"] == [24, 24, 48]
    assert verdict.evidence["index2_block_image_orders"] == [3, 6, 6]
    assert verdict.evidence["cyclic_block_image_subgroup_is_2dt"] is False
    assert verdict.evidence["any_2at"] is False


def test_icosahedron_claim():
    verdict = verify_claim("L3.5")
    assert verdict.status == "verified"
    assert verdict.evidence["two_dt_orders"] == [60, 120]


def test_girth4_identity_claim():
    verdict = verify_claim("L4.1")
    assert verdict.status == "verified"
    assert verdict.evidence["graphs"] == 13
    assert verdict.evidence["failures"] == []


def test_c2_equals_2_claim():
    verdict = verify_claim("L4.2")
    assert verdict.status == "verified"
    assert "hamming(7,2)+s2wr_frobenius21" in verdict.evidence["qualifying_pairs"]


def test_hamming_instance_claim():
    verdict = verify_claim("L4.3")
    assert verdict.status == "verified"
    assert verdict.evidence["stabilizer_order"] == 21
    assert verdict.evidence["coordinate_flips_are_members"]


def test_c2_boundary_claim():
    verdict = verify_claim("L4.4")
    assert verdict.status == "verified"
    assert verdict.evidence["c2_equals_k"] >= 3
    assert verdict.evidence["c2_equals_k_minus_1"] >= 3


def test_c2_range_claim():
    verdict = verify_claim("T1.1")
    assert verdict.status == "verified"
    assert verdict.evidence["failures"] == []


def test_prime_valency_claim():
    verdict = verify_claim("C1.2")
    assert verdict.status == "verified"
    assert verdict.evidence["part_iii"] == "no qualifying instance in corpus"


def test_catalog_rows_claim():
    verdict = verify_claim("T1.3")
    assert verdict.status == "verified"
    assert verdict.evidence["rows_matched"] == 7
    assert verdict.evidence["near_misses_clear"] == 3


def test_budget_skip():
    verdict = verify_claim("L3.4", Budget(subgroup_order_cap=10))
    assert verdict.status == "skipped"
    assert "budget" in verdict.reason
    assert verdict.to_dict()["reason"]
