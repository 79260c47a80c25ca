import pytest

from tamecover.groups import (FiniteGroup, alternating4, bundled_groups, cyclic,
                              dicyclic, dihedral, direct_product, group_by_name,
                              quaternion, special_linear_2_3, symmetric)


def test_table_validation():
    with pytest.raises(ValueError):
        FiniteGroup(["e", "a"], [[0, 1], [1, 1]])
    # Z/2 x Z/2-shaped table that fails associativity is impossible for
    # permutation rows of size 2; use a 3-element non-associative magma
    with pytest.raises(ValueError):
        FiniteGroup(["e", "a", "b"], [[0, 1, 2], [1, 2, 0], [2, 1, 0]])


def test_cyclic_basics():
    g = cyclic(6)
    assert g.order == 6
    assert g.is_abelian()
    assert g.element_order(1) == 6
    assert g.abelian_invariants() == (6,)


def test_direct_product_invariants():
    g = direct_product(cyclic(2), cyclic(3))
    assert g.abelian_invariants() == (6,)
    h = direct_product(cyclic(2), cyclic(4))
    assert h.abelian_invariants() == (2, 4)


def test_s3_commutators_are_a3():
    g = symmetric(3)
    assert not g.is_abelian()
    comm = g.commutator_subgroup()
    assert len(comm) == 3
    # A3 = even permutations; single commutators already form the subgroup
    assert g.commutator_set() == comm
    ab = g.abelianization()
    assert ab.order == 2
    assert ab.abelian_invariants() == (2,)


def test_q8_commutator_subgroup_is_center():
    g = quaternion()
    comm = g.commutator_subgroup()
    assert len(comm) == 2
    assert g.abelianization().abelian_invariants() == (2, 2)


def test_s4_and_a4_derived_series():
    s4 = symmetric(4)
    a4 = alternating4()
    assert len(s4.commutator_subgroup()) == 12
    assert s4.abelianization().abelian_invariants() == (2,)
    assert len(a4.commutator_subgroup()) == 4
    assert a4.abelianization().abelian_invariants() == (3,)


def test_sl23():
    g = special_linear_2_3()
    assert g.order == 24
    assert len(g.commutator_subgroup()) == 8
    assert g.abelianization().abelian_invariants() == (3,)


def test_dihedral_and_dicyclic_orders():
    assert dihedral(6).order == 12
    assert dicyclic(3).order == 12
    assert dihedral(5).abelianization().abelian_invariants() == (2,)
    assert dihedral(6).abelianization().abelian_invariants() == (2, 2)
    assert dicyclic(3).abelianization().abelian_invariants() == (4,)


def test_homomorphism_enumeration_counts():
    c6, c2, c3 = cyclic(6), cyclic(2), cyclic(3)
    assert len(c6.homomorphisms_to(c2)) == 2
    assert len(c6.homomorphisms_to(c3)) == 3
    s3 = symmetric(3)
    # homs S3 -> C2: trivial and sign
    assert len(s3.homomorphisms_to(c2)) == 2
    assert len(s3.homomorphisms_to(c3)) == 1
    for phi in s3.homomorphisms_to(c2):
        for a in range(6):
            for b in range(6):
                assert phi[s3.mul(a, b)] == c2.mul(phi[a], phi[b])


def test_bundle_is_wellformed():
    groups = bundled_groups()
    assert {"S3", "Q8", "S4", "A4", "SL23", "V4"} <= set(groups)
    assert all(g.order <= 24 for g in groups.values())
    assert len(groups) >= 30
    assert group_by_name("S3").order == 6
    with pytest.raises(ValueError):
        group_by_name("monster")
