"""Catalog constructions and the key parser."""

import pytest

import tensorforge as tf
from tensorforge.errors import UnknownCatalogKey
from tensorforge.groups import center, derived_subgroup, nilpotency_class


@pytest.mark.parametrize("key,order,abelian", [
    ("cyclic:1", 1, True),
    ("cyclic:12", 12, True),
    ("dihedral:4", 8, False),
    ("dihedral:6", 12, False),
    ("quaternion:8", 8, False),
    ("symmetric:3", 6, False),
    ("symmetric:4", 24, False),
    ("heisenberg:2", 8, False),
    ("heisenberg:3", 27, False),
    ("heisenberg:5", 125, False),
    ("elemab:2:3", 8, True),
    ("elemab:3:2", 9, True),
    ("product:cyclic:2,cyclic:4", 8, True),
    ("product:symmetric:3,cyclic:2", 12, False),
])
def test_orders_and_abelianness(key, order, abelian):
    G = tf.make_catalog_group(key)
    assert G.order == order
    assert G.is_abelian == abelian


def test_dihedral_structure():
    D = tf.make_catalog_group("dihedral:5")
    orders = sorted(D.element_orders())
    assert orders.count(2) == 5               # five reflections
    assert orders.count(5) == 4
    assert center(D).order == 1


def test_quaternion_has_unique_involution():
    Q8 = tf.make_catalog_group("quaternion:8")
    assert sorted(Q8.element_orders()) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert derived_subgroup(Q8).order == 2


def test_symmetric_group_s4():
    S4 = tf.make_catalog_group("symmetric:4")
    hist = S4.order_histogram()
    assert hist == {1: 1, 2: 9, 3: 8, 4: 6}
    assert derived_subgroup(S4).order == 12   # A4


def test_heisenberg_is_extraspecial():
    for p in (2, 3, 5):
        G = tf.make_catalog_group(f"heisenberg:{p}")
        assert G.order == p ** 3
        assert center(G).order == p
        assert derived_subgroup(G).members == center(G).members
        assert nilpotency_class(G) == 2


def test_heisenberg_2_is_dihedral():
    # the p=2 construction degenerates to D4 (exponent 4, five involutions)
    H2 = tf.make_catalog_group("heisenberg:2")
    D4 = tf.make_catalog_group("dihedral:4")
    assert tf.are_isomorphic(H2, D4) is not None


def test_heisenberg_3_has_exponent_3():
    G = tf.make_catalog_group("heisenberg:3")
    assert set(G.element_orders()) == {1, 3}


def test_elementary_abelian():
    G = tf.make_catalog_group("elemab:5:2")
    assert G.order == 25
    assert all(o in (1, 5) for o in G.element_orders())


@pytest.mark.parametrize("key", [
    "bogus:9", "cyclic", "cyclic:", "cyclic:0", "cyclic:-3",
    "dihedral:1", "symmetric:5", "quaternion:16", "heisenberg:4",
    "elemab:4:2", "elemab:2", "product:cyclic:2", "", "cyclic:two",
])
def test_bad_keys_rejected(key):
    with pytest.raises(UnknownCatalogKey):
        tf.make_catalog_group(key)


def test_catalog_keys_listing():
    keys = tf.catalog_keys()
    assert "cyclic:3" in keys and "heisenberg:3" in keys


def test_catalog_up_to_is_isomorphism_deduplicated():
    groups = tf.catalog_groups_up_to(8)
    assert all(G.order <= 8 for _, G in groups)
    for i in range(len(groups)):
        for j in range(i + 1, len(groups)):
            if groups[i][1].order == groups[j][1].order:
                assert tf.are_isomorphic(groups[i][1], groups[j][1]) is None, \
                    (groups[i][0], groups[j][0])


def test_catalog_up_to_sorted_by_order_then_key():
    groups = tf.catalog_groups_up_to(16)
    marks = [(G.order, key) for key, G in groups]
    assert marks == sorted(marks)


def test_product_of_products():
    G = tf.make_catalog_group("product:cyclic:2,cyclic:2")
    E = tf.make_catalog_group("elemab:2:2")
    assert tf.are_isomorphic(G, E) is not None
