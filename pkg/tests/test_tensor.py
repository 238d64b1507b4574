"""Non-abelian tensor products: presentations, reports, cross-checks."""

import numpy as np
import pytest

import tensorforge as tf
from tensorforge.abelian import abelian_invariants, smith_diagonal
from tensorforge.actions import ActionPair, involution_pair
from tensorforge.errors import IncompatibleActions, LimitExceeded
from tensorforge.groups import make_cyclic
from tensorforge.tensor import (abelian_tensor, compute_tensor,
                                derivative_subgroup,
                                module_action_on_kernel,
                                tensor_presentation, tensor_square)


def z3_case(alpha_inversion, beta_inversion):
    Z3 = make_cyclic(3)
    idm = np.arange(3)
    alpha = np.stack([idm, Z3.inverse if alpha_inversion else idm, idm])
    beta = np.stack([idm, Z3.inverse if beta_inversion else idm, idm])
    return ActionPair(Z3, Z3, alpha, beta)


# -- presentation shape ---------------------------------------------------

def test_presentation_shape_trivial_actions():
    pair = ActionPair.trivial(make_cyclic(3), make_cyclic(3))
    pres, symbols = tensor_presentation(pair)
    assert pres.ngens == 9
    assert len(symbols) == 9
    assert symbols[(0, 0)] == 1 and symbols[(2, 2)] == 9
    # both families over all triples, freely reduced and deduplicated
    assert 0 < len(pres.relators) <= 2 * 27


def test_presentation_single_symbol_collapses():
    pair = ActionPair.trivial(make_cyclic(1), make_cyclic(1))
    pres, _ = tensor_presentation(pair)
    assert pres.ngens == 1
    rep = compute_tensor(pair)
    assert rep.order == 1


def test_presentation_refuses_incompatible_without_force():
    pair = z3_case(True, True)
    with pytest.raises(IncompatibleActions):
        tensor_presentation(pair)
    pres, _ = tensor_presentation(pair, force=True)
    assert pres.ngens == 9


def test_symbol_cap():
    G = tf.make_catalog_group("heisenberg:3")
    with pytest.raises(LimitExceeded):
        tensor_square(G)        # 729 symbols exceed the cap


# -- small exact values ---------------------------------------------------

def test_z2_tensor_z2_trivial():
    rep = compute_tensor(ActionPair.trivial(make_cyclic(2), make_cyclic(2)))
    assert rep.order == 2 and rep.invariants == [2]


def test_z3_case1_trivial_actions():
    rep = compute_tensor(z3_case(False, False))
    assert rep.order == 3
    assert rep.invariants == abelian_tensor([3], [3])


def test_z3_case2_collapses_under_full_relator_set():
    # the per-element inversion assignment is not an action of Z3; the
    # relator with h*h1 = identity then kills the generator outright
    pair = z3_case(True, False)
    rep = compute_tensor(pair)
    assert rep.order == 1
    assert rep.kappa is None and rep.kernel is None
    assert rep.derivative.order == 3
    assert derivative_subgroup(pair.swapped()).order == 1


def test_inversion_tensor_is_isomorphic_to_base():
    for key in ["cyclic:2", "cyclic:6", "product:cyclic:2,cyclic:4"]:
        A = tf.make_catalog_group(key)
        pair = involution_pair(A, A.inverse)
        rep = compute_tensor(pair)
        assert rep.order == A.order
        gens = [rep.symbol(a, 1) for a in range(A.order)]
        iso = tf.hom_from_images(rep.tensor, A, gens, list(range(A.order)))
        assert iso.is_bijective


def test_trivial_actions_give_abelianization_tensor():
    S3 = tf.make_catalog_group("symmetric:3")
    D4 = tf.make_catalog_group("dihedral:4")
    rep = compute_tensor(ActionPair.trivial(S3, D4))
    assert rep.invariants == abelian_tensor(abelian_invariants(S3),
                                            abelian_invariants(D4))


# -- report invariants ----------------------------------------------------

REPORT_PAIRS = [
    ActionPair.trivial(make_cyclic(4), make_cyclic(6)),
    z3_case(False, False),
    involution_pair(tf.make_catalog_group("cyclic:6"),
                    tf.make_catalog_group("cyclic:6").inverse),
]


@pytest.mark.parametrize("pair", REPORT_PAIRS)
def test_exactness_and_centrality(pair):
    rep = compute_tensor(pair)
    assert rep.kappa is not None
    assert rep.order == rep.kernel.order * rep.derivative.order
    assert set(int(v) for v in np.unique(rep.kappa.map)) \
        == set(rep.derivative.members)
    T = rep.tensor
    for a in rep.kernel.members:
        for x in range(T.order):
            assert T.mul(a, x) == T.mul(x, a)


@pytest.mark.parametrize("pair", REPORT_PAIRS)
def test_kappa_formula_on_symbols(pair):
    rep = compute_tensor(pair)
    G = pair.G
    for (g, h), t in rep.symbol_map.items():
        assert rep.kappa(t) == G.mul(G.inv(g), pair.act_g(g, h))


@pytest.mark.parametrize("pair", REPORT_PAIRS)
def test_defining_relations_hold_in_cayley_table(pair):
    # round-trip check independent of the enumerator
    G, H = pair.G, pair.H
    rep = compute_tensor(pair)
    T, s = rep.tensor, rep.symbol
    for g in range(G.order):
        for g1 in range(G.order):
            for h in range(H.order):
                lhs = s(G.mul(g, g1), h)
                rhs = T.mul(s(G.conj(g, g1), pair.act_h(h, g1)), s(g1, h))
                assert lhs == rhs
    for g in range(G.order):
        for h in range(H.order):
            for h1 in range(H.order):
                lhs = s(g, H.mul(h, h1))
                rhs = T.mul(s(g, h1),
                            s(pair.act_g(g, h1), H.conj(h, h1)))
                assert lhs == rhs


@pytest.mark.parametrize("pair", REPORT_PAIRS)
def test_symbols_generate_tensor(pair):
    rep = compute_tensor(pair)
    gens = set(rep.symbol_map.values())
    assert tf.subgroup_generated(rep.tensor, gens).order == rep.order


def test_abelianization_cross_check():
    # SNF of the relator matrix is an independent pipeline for the
    # abelianized presentation; it must agree with the enumerated group
    for pair in REPORT_PAIRS:
        pres, _ = tensor_presentation(pair)
        rows = []
        for r in pres.relators:
            row = [0] * pres.ngens
            for letter in r:
                row[abs(letter) - 1] += 1 if letter > 0 else -1
            rows.append(row)
        diag = smith_diagonal(rows, pres.ngens)
        snf_invariants = [d for d in diag if d > 1]
        free_rank = pres.ngens - len(diag)
        rep = compute_tensor(pair)
        assert free_rank == 0
        assert abelian_invariants(rep.tensor) == snf_invariants


# -- module action --------------------------------------------------------

def test_module_action_trivial_on_abelian_tensor():
    rep = compute_tensor(ActionPair.trivial(make_cyclic(4), make_cyclic(6)))
    action = module_action_on_kernel(rep)
    for (a, d), value in action.items():
        assert value == a


def test_module_action_rows_are_permutations():
    rep = tensor_square(tf.make_catalog_group("symmetric:3"))
    action = module_action_on_kernel(rep)
    kernel = list(rep.kernel.members)
    for d in rep.derivative.members:
        row = [action[(a, d)] for a in kernel]
        assert sorted(row) == kernel


# -- tensor squares -------------------------------------------------------

def test_tensor_square_s3_kappa_image_is_derived_subgroup():
    S3 = tf.make_catalog_group("symmetric:3")
    rep = tensor_square(S3)
    assert set(rep.derivative.members) \
        == set(tf.derived_subgroup(S3).members)
    assert rep.derivative.order == 3
    assert rep.order == 6       # regression value from our enumeration


def test_tensor_square_regression_orders():
    # regression values frozen from our own enumeration
    assert tensor_square(tf.make_catalog_group("dihedral:4")).order == 32
    assert tensor_square(tf.make_catalog_group("quaternion:8")).order == 64
    assert tensor_square(make_cyclic(3)).order == 3


def test_tensor_square_abelian_is_plain_tensor():
    Z6 = make_cyclic(6)
    rep = tensor_square(Z6)
    assert rep.invariants == abelian_tensor([6], [6])
