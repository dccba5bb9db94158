import math

import pytest

import classgraphs as cg
from classgraphs.errors import (
    ConstructionInvariantViolated,
    FieldTooLarge,
    GroupTooLarge,
    NoValidAction,
    NotInvertible,
    NotPrime,
)

from oracles import (
    center_by_all_pairs,
    classes_by_all_conjugations,
    order_by_iteration,
)


def class_size_multiset(group):
    return sorted(len(c) for c in classes_by_all_conjugations(group))


# -- abelian ----------------------------------------------------------------


def test_cyclic_one_is_trivial():
    g = cg.cyclic(1)
    assert g.order == 1
    assert g.elements[0].is_identity()


def test_cyclic_twelve_element_orders():
    g = cg.cyclic(12)
    # independent oracle: orders of residues mod 12 are 12/gcd(k, 12)
    expected = {12 // math.gcd(k, 12) for k in range(12)}
    assert {order_by_iteration(p) for p in g.elements} == expected == {1, 2, 3, 4, 6, 12}


def test_abelian_product_is_abelian_of_right_order():
    g = cg.abelian(2, 4)
    assert g.order == 8
    assert cg.is_abelian(g)
    assert len(center_by_all_pairs(g)) == 8


def test_abelian_cap():
    with pytest.raises(GroupTooLarge):
        cg.abelian(1000, 1001, cap=100_000)


# -- dihedral / dicyclic ------------------------------------------------------


def test_dihedral_relation_holds():
    g = cg.dihedral(5)
    r, s = g.generators
    assert s * r * s.inverse() == r.inverse()
    assert g.order == 10


def test_dihedral_three_matches_symmetric_three():
    assert class_size_multiset(cg.dihedral(3)) == class_size_multiset(cg.symmetric(3)) == [1, 2, 3]


def test_dihedral_four_center_has_size_two():
    assert len(center_by_all_pairs(cg.dihedral(4))) == 2


def test_dihedral_two_is_klein_four():
    g = cg.dihedral(2)
    assert g.order == 4
    assert cg.is_abelian(g)
    assert all(p.order() <= 2 for p in g.elements)


def test_dicyclic_two_is_quaternion_unique_involution():
    g = cg.dicyclic(2)
    assert g.order == 8
    assert sum(1 for p in g.elements if p.order() == 2) == 1


def test_dicyclic_three_orders_and_center():
    g = cg.dicyclic(3)
    assert g.order == 12
    assert {p.order() for p in g.elements} == {1, 2, 3, 4, 6}
    assert len(center_by_all_pairs(g)) == 2


def test_dicyclic_relations():
    g = cg.dicyclic(4)
    x, y = g.generators
    assert x.order() == 8
    assert y * y == x**4
    assert y.inverse() * x * y == x.inverse()


# -- symmetric / alternating ---------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_orders(n):
    assert cg.symmetric(n).order == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_alternating_orders(n):
    expected = math.factorial(n) // 2 if n >= 2 else 1
    assert cg.alternating(n).order == expected


def test_alternating_seven_order(catalog_groups):
    assert catalog_groups["A7"].order == 2520


def test_alternating_contains_only_even_permutations():
    a4 = cg.alternating(4)
    s4 = set(cg.symmetric(4).elements)
    assert all(p in s4 for p in a4.elements)
    assert not any(p.cycle_string() == "(0 1)" for p in a4.elements)


# -- products -------------------------------------------------------------------


def test_direct_product_s3_c2():
    g = cg.direct_product(cg.symmetric(3), cg.cyclic(2))
    assert g.order == 12
    assert g.degree == 5


def test_direct_product_with_trivial_keeps_fingerprint():
    s3 = cg.symmetric(3)
    g = cg.direct_product(s3, cg.cyclic(1))
    assert g.order == 6
    assert class_size_multiset(g) == class_size_multiset(s3)


def test_direct_product_c4_s3():
    g = cg.direct_product(cg.cyclic(4), cg.symmetric(3))
    assert g.order == 24


# -- semidirect products ----------------------------------------------------------


def test_semidirect_cyclic_721_is_frobenius_of_order_21():
    g = cg.semidirect_cyclic(7, 3, 2)
    assert g.order == 21
    assert g.info["frobenius"] is True


def test_semidirect_cyclic_542_is_frobenius_of_order_20():
    g = cg.semidirect_cyclic(5, 4, 2)
    assert g.order == 20
    assert g.info["frobenius"] is True


def test_semidirect_cyclic_9_4_has_no_valid_action():
    # unit group mod 9 has order phi(9) = 6, so nothing has order 4
    for g in range(1, 9):
        with pytest.raises(NoValidAction):
            cg.semidirect_cyclic(9, 4, g)


def test_semidirect_cyclic_rejects_wrong_order():
    with pytest.raises(NoValidAction):
        cg.semidirect_cyclic(7, 2, 2)  # 2 has order 3 mod 7
    with pytest.raises(NoValidAction):
        cg.semidirect_cyclic(6, 2, 3)  # gcd(3, 6) > 1


def _frobenius_by_brute_force(group, m, k):
    """No nontrivial complement element may centralize a nontrivial kernel element."""
    complement_points = range(m, m + k)
    kernel = [
        p for p in group.elements if all(p(i) == i for i in complement_points)
    ]
    b = group.generators[1]
    complement = {b**j for j in range(k)}
    assert len(kernel) == m and len(complement) == k
    for x in kernel:
        if x.is_identity():
            continue
        for h in complement:
            if not h.is_identity() and h * x == x * h:
                return False
    return True


@pytest.mark.parametrize("m,k,g", [(7, 3, 2), (5, 4, 2), (13, 4, 5), (8, 2, 3)])
def test_frobenius_flag_matches_brute_force(m, k, g):
    group = cg.semidirect_cyclic(m, k, g)
    assert group.info["frobenius"] == cg.cyclic_action_fixed_point_free(m, k, g)
    assert group.info["frobenius"] == _frobenius_by_brute_force(group, m, k)


def test_semidirect_8_2_3_is_not_frobenius():
    assert not cg.cyclic_action_fixed_point_free(8, 2, 3)


def test_elementary_semidirect_a4_model():
    g = cg.elementary_semidirect(2, 2, [[0, 1], [1, 1]], 3)
    assert g.order == 12
    assert class_size_multiset(g) == class_size_multiset(cg.alternating(4)) == [1, 3, 4, 4]
    assert g.info["frobenius"] is True


def test_elementary_semidirect_f36():
    g = cg.elementary_semidirect(3, 2, [[0, 2], [1, 0]], 4)
    assert g.order == 36
    assert g.info["frobenius"] is True
    assert cg.matrix_action_fixed_point_free(3, ((0, 2), (1, 0)), 4)


def test_elementary_semidirect_identity_action_is_elementary_abelian():
    g = cg.elementary_semidirect(3, 2, [[1, 0], [0, 1]], 1)
    assert g.order == 9
    assert cg.is_abelian(g)
    assert all(p.order() in (1, 3) for p in g.elements)


def test_elementary_semidirect_errors():
    with pytest.raises(NotInvertible):
        cg.elementary_semidirect(2, 2, [[1, 1], [1, 1]], 2)
    with pytest.raises(NoValidAction):
        cg.elementary_semidirect(2, 2, [[0, 1], [1, 1]], 2)  # order 3, not 2
    with pytest.raises(NotPrime):
        cg.elementary_semidirect(4, 1, [[1]], 1)


# -- Lie type ----------------------------------------------------------------------


@pytest.mark.parametrize("q", [4, 5, 7, 9, 11, 13])
def test_psl2_order_formula_and_degree(q):
    g = cg.psl2(q)
    assert g.order == q * (q * q - 1) // math.gcd(2, q - 1)
    assert g.degree == q + 1


def test_psl2_13_has_torus_element_orders():
    orders = cg.spectrum(cg.psl2(13))
    assert 6 in orders and 7 in orders  # (q-1)/2 and (q+1)/2


@pytest.mark.parametrize("q", [5, 9, 13])
def test_psl2_spectrum_contains_both_torus_orders(q):
    orders = cg.spectrum(cg.psl2(q))
    assert (q - 1) // 2 in orders
    assert (q + 1) // 2 in orders
    p = [d for d in range(2, q + 1) if q % d == 0][0]
    assert max(orders) == max(p, (q - 1) // 2, (q + 1) // 2)


def test_psl2_rejects_non_prime_power():
    with pytest.raises(NotPrime):
        cg.psl2(6)


def test_psl2_rejects_oversized_field():
    with pytest.raises(FieldTooLarge):
        cg.psl2(2**15)


def test_sl2_5_order_and_center():
    g = cg.sl2(5)
    assert g.order == 120
    assert len(center_by_all_pairs(g)) == 2


def test_sl2_5_quotient_by_center_has_order_60():
    g = cg.sl2(5)
    assert cg.quotient(g, cg.center(g)).order == 60


def test_suzuki8_order_and_degree(catalog_groups):
    g = catalog_groups["Sz8"]
    assert g.order == 29120
    assert g.degree == 65


def test_suzuki8_is_transitive(catalog_groups):
    g = catalog_groups["Sz8"]
    assert {p.images[0] for p in g.elements} == set(range(65))


def test_suzuki8_cap_violation_is_construction_error():
    with pytest.raises((ConstructionInvariantViolated, GroupTooLarge)):
        cg.suzuki8(cap=10_000)


# -- catalog -----------------------------------------------------------------------


def test_catalog_covers_every_family(catalog_entries):
    clauses = {e.clause for e in catalog_entries}
    assert {"i", "ii", "iii", "iv", "v", "vi", "vii"} <= clauses
    assert "counterexample" in clauses and "probe" in clauses


def test_catalog_c9_entry_is_unconstructible(catalog_entries):
    entry = next(e for e in catalog_entries if e.id == "C9byC4")
    assert not entry.constructible
    assert entry.reason and "order 6" in entry.reason
    with pytest.raises(ValueError):
        entry.group()


def test_catalog_constructible_entries_build_to_expected_orders(
    catalog_entries, catalog_groups
):
    for entry in catalog_entries:
        if entry.constructible:
            assert catalog_groups[entry.id].order == entry.expected_order


def test_catalog_large_probe_respects_cap():
    ids = {e.id for e in cg.build_catalog(cap=10_000)}
    assert "S6" in ids and "A8" not in ids
    ids = {e.id for e in cg.build_catalog()}
    assert "A8" in ids and "S6" not in ids


def test_catalog_ids_unique(catalog_entries):
    ids = [e.id for e in catalog_entries]
    assert len(ids) == len(set(ids))
