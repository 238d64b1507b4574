"""Automorphism groups, inner automorphisms and normalizer checks."""

import numpy as np
import pytest

import tensorforge as tf
from tensorforge.automorphisms import (automorphism_group, compose_maps,
                                       inner_automorphism,
                                       is_subgroup_of_aut,
                                       normalizer_contains_inn)
from tensorforge.errors import NotASubgroup
from tensorforge.groups import center, make_cyclic


def test_compose_maps_applies_left_factor_first():
    f = np.array([1, 2, 0])     # x -> x+1 on Z3
    g = np.array([0, 2, 1])     # swap 1, 2
    # (f*g)(0) = g(f(0)) = g(1) = 2
    assert compose_maps(f, g).tolist() == [2, 1, 0]


@pytest.mark.parametrize("key,aut_order", [
    ("cyclic:1", 1),
    ("cyclic:2", 1),
    ("cyclic:3", 2),
    ("cyclic:8", 4),            # phi(8)
    ("cyclic:12", 4),
    ("elemab:2:2", 6),          # GL(2, 2)
    ("elemab:3:2", 48),         # GL(2, 3)
    ("symmetric:3", 6),
    ("dihedral:4", 8),
    ("quaternion:8", 24),
])
def test_aut_orders(key, aut_order):
    assert automorphism_group(tf.make_catalog_group(key)).order == aut_order


def test_aut_heisenberg_3():
    # frozen from our own enumeration, cross-checked against the extension
    # |Aut| = |GL(2,3)| * p^2 = 48 * 9 for the extraspecial group of
    # exponent p
    aut = automorphism_group(tf.make_catalog_group("heisenberg:3"))
    assert aut.order == 432


def test_aut_is_a_group_of_automorphisms():
    G = tf.make_catalog_group("dihedral:4")
    aut = automorphism_group(G)
    for i in range(aut.order):
        m = aut.elements[i]
        assert m[G.identity] == G.identity
        assert np.array_equal(m[G.table], G.table[np.ix_(m, m)])
    # closure at the table level
    for i in range(aut.order):
        for j in range(aut.order):
            k = aut.group.mul(i, j)
            assert np.array_equal(compose_maps(aut.elements[i],
                                               aut.elements[j]),
                                  aut.elements[k])


def test_elements_in_lexicographic_order():
    aut = automorphism_group(tf.make_catalog_group("elemab:2:2"))
    maps = aut.elements.tolist()
    assert maps == sorted(maps)


def test_inner_count_is_order_over_center():
    for key in ["cyclic:6", "symmetric:3", "dihedral:4", "quaternion:8",
                "heisenberg:3", "symmetric:4"]:
        G = tf.make_catalog_group(key)
        aut = automorphism_group(G)
        assert len(aut.inner_indices) == G.order // center(G).order


def test_inner_automorphism_values():
    S3 = tf.make_catalog_group("symmetric:3")
    for g in range(S3.order):
        m = inner_automorphism(S3, g)
        for x in range(S3.order):
            assert m[x] == S3.conj(x, g)


def test_index_of():
    G = make_cyclic(5)
    aut = automorphism_group(G)
    for i in range(aut.order):
        assert aut.index_of(aut.elements[i]) == i
    assert aut.index_of([0, 1, 2, 4, 3]) is None    # not an automorphism


def test_inn_is_normal_in_aut():
    for key in ["symmetric:3", "dihedral:4", "quaternion:8"]:
        G = tf.make_catalog_group(key)
        aut = automorphism_group(G)
        ok, witness = normalizer_contains_inn(aut, set(aut.inner_indices))
        assert ok and witness is None


def test_normalizer_negative_case():
    # <conjugation by a transposition> is not normalized by Inn(S3)
    S3 = tf.make_catalog_group("symmetric:3")
    aut = automorphism_group(S3)
    transposition = next(g for g in range(6) if S3.element_order(g) == 2)
    member = int(aut.inner_of[transposition])
    image = {aut.group.identity, member}
    ok, witness = normalizer_contains_inn(aut, image)
    assert not ok
    g, m = witness
    # replay the witness: conjugating m by ghat leaves the subgroup
    t, inv = aut.group.table, aut.group.inverse
    ghat = int(aut.inner_of[g])
    assert t[t[inv[ghat], m], ghat] not in image


def test_normalizer_rejects_non_subgroup():
    aut = automorphism_group(tf.make_catalog_group("symmetric:3"))
    with pytest.raises(NotASubgroup):
        normalizer_contains_inn(aut, {1})   # missing identity


def test_is_subgroup_of_aut():
    aut = automorphism_group(make_cyclic(8))
    assert is_subgroup_of_aut(aut, range(aut.order))
    assert is_subgroup_of_aut(aut, {aut.group.identity})
