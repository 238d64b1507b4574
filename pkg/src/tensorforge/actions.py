"""Mutual actions of two groups and the compatibility conditions.

An action pair stores the two actions as dense permutation stacks:
``alpha_maps[h]`` is the automorphism of G induced by h (so ``g^h =
alpha_maps[h][g]``) and ``beta_maps[g]`` the automorphism of H induced by
g.  The defining compatibility equations

    g^(h^g1) = ((g^(g1^-1))^h)^g1      and symmetrically for H

are checked exhaustively; at the automorphism level they are equivalent
to the conjugation identities a(h^b(g1)) = g1hat^-1 a(h) g1hat, which is
what the fast paths use.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .automorphisms import automorphism_group, compose_maps
from .catalog import catalog_groups_up_to
from .errors import (AlphaNotInjective, BudgetExceeded, IncompatibleActions,
                     NormalizerConditionFails, PsiNotInvolution)
from .groups import FiniteGroup, GroupHom, second_hypercenter
from .homs import enumerate_homs
from .presentations import invert_word, reduce_word


def default_budget(fallback=200_000):
    env = os.environ.get("TENSORFORGE_BUDGET")
    if env:
        return int(env)
    return fallback


def _validate_action(G, H, maps, what, require_hom=False):
    """Each row must be an automorphism of G and the identity must act
    trivially.  The assignment h -> maps[h] being a homomorphism is only
    enforced on request: the worked Z3-on-Z3 example assigns the inversion
    automorphism to a generator of Z3, which is a perfectly good family of
    automorphisms but not a homomorphism into Aut(Z3)."""
    maps = np.ascontiguousarray(np.asarray(maps, dtype=np.intp))
    if maps.shape != (H.order, G.order):
        raise ValueError(f"{what}: expected shape {(H.order, G.order)}")
    ar = np.arange(G.order)
    if not np.array_equal(maps[H.identity], ar):
        raise ValueError(f"{what}: identity must act trivially")
    for h in range(H.order):
        m = maps[h]
        if len(np.unique(m)) != G.order:
            raise ValueError(f"{what}: row {h} is not a bijection")
        if not np.array_equal(m[G.table], G.table[np.ix_(m, m)]):
            raise ValueError(f"{what}: row {h} is not an automorphism")
    if require_hom and not _assignment_is_hom(H, maps):
        raise ValueError(f"{what}: assignment is not a homomorphism")
    maps.setflags(write=False)
    return maps


def _assignment_is_hom(H, maps):
    """Is h -> maps[h] a homomorphism under left-factor-first composition?"""
    for h1 in range(H.order):
        lhs = maps[H.table[h1]]
        rhs = maps[:, maps[h1]]  # compose(maps[h1], maps[h2]) for all h2
        if not np.array_equal(lhs, rhs):
            return False
    return True


class ActionPair:
    """A pair of mutual actions (alpha: H -> Aut(G), beta: G -> Aut(H))."""

    __slots__ = ("G", "H", "alpha_maps", "beta_maps")

    def __init__(self, G, H, alpha_maps, beta_maps, validate=True):
        self.G = G
        self.H = H
        if validate:
            self.alpha_maps = _validate_action(G, H, alpha_maps, "alpha")
            self.beta_maps = _validate_action(H, G, beta_maps, "beta")
        else:
            self.alpha_maps = np.ascontiguousarray(
                np.asarray(alpha_maps, dtype=np.intp))
            self.beta_maps = np.ascontiguousarray(
                np.asarray(beta_maps, dtype=np.intp))

    @classmethod
    def trivial(cls, G, H):
        a = np.tile(np.arange(G.order), (H.order, 1))
        b = np.tile(np.arange(H.order), (G.order, 1))
        return cls(G, H, a, b, validate=False)

    @classmethod
    def from_homs(cls, alpha, beta, autG, autH):
        """From homomorphisms into concrete automorphism groups."""
        return cls(autG.base, autH.base,
                   autG.elements[alpha.map], autH.elements[beta.map],
                   validate=False)

    def act_g(self, g, h):
        """g^h."""
        return int(self.alpha_maps[h, g])

    def act_h(self, h, g):
        """h^g."""
        return int(self.beta_maps[g, h])

    def alpha_hom(self):
        """alpha as a GroupHom into Aut(G) (computes Aut(G) on demand)."""
        aut = automorphism_group(self.G)
        mapping = [aut.index_of(row) for row in self.alpha_maps]
        return GroupHom(self.H, aut.group, mapping, validate=False)

    def beta_hom(self):
        aut = automorphism_group(self.H)
        mapping = [aut.index_of(row) for row in self.beta_maps]
        return GroupHom(self.G, aut.group, mapping, validate=False)

    def assignments_are_homs(self):
        """Whether both assignments are genuine homomorphisms into the
        automorphism groups (paper-style examples may assign per element)."""
        return (_assignment_is_hom(self.H, self.alpha_maps)
                and _assignment_is_hom(self.G, self.beta_maps))

    def swapped(self):
        return ActionPair(self.H, self.G, self.beta_maps, self.alpha_maps,
                          validate=False)

    def __repr__(self):
        return f"ActionPair(|G|={self.G.order}, |H|={self.H.order})"


@dataclass(frozen=True)
class Witness:
    equation: str                 # "first" or "second"
    g: Optional[int] = None
    g1: Optional[int] = None
    h: Optional[int] = None
    h1: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None


@dataclass(frozen=True)
class CompatibilityReport:
    compatible: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class HomPair:
    phi: GroupHom
    psi: GroupHom


def _equation_holds(G, A, B):
    """The first defining equation, quantified over everything, checked at
    the level of whole automorphism maps (one comparison per g1)."""
    for g1 in range(G.order):
        hat = G.conjugation_map(g1)
        hatinv = G.conjugation_map(G.inv(g1))
        lhs = A[B[g1]]               # row h: map of alpha(h^beta(g1))
        rhs = hat[A[:, hatinv]]      # row h: g1hat^-1 alpha(h) g1hat
        if not np.array_equal(lhs, rhs):
            return False
    return True


def _equation_witness(G, H, A, B):
    """First failing triple of the first equation in lexicographic
    (g, g1, h) order, or None."""
    n, m = G.order, H.order
    mask = np.zeros((n, n, m), dtype=bool)   # (g, g1, h)
    for g1 in range(n):
        hat = G.conjugation_map(g1)
        hatinv = G.conjugation_map(G.inv(g1))
        lhs = A[B[g1]]
        rhs = hat[A[:, hatinv]]
        mask[:, g1, :] = (lhs != rhs).T
    bad = np.argwhere(mask)
    if len(bad) == 0:
        return None
    g, g1, h = (int(v) for v in bad[0])
    lhs = int(A[B[g1, h], g])
    hat = G.conjugation_map(g1)
    hatinv = G.conjugation_map(G.inv(g1))
    rhs = int(hat[A[h, hatinv[g]]])
    return g, g1, h, lhs, rhs


def is_compatible(pair):
    """Exhaustive check of both defining equations; deterministic first
    witness (lexicographic triple order) on failure."""
    G, H = pair.G, pair.H
    A, B = pair.alpha_maps, pair.beta_maps
    if not _equation_holds(G, A, B):
        g, g1, h, lhs, rhs = _equation_witness(G, H, A, B)
        return CompatibilityReport(False, Witness(
            "first", g=g, g1=g1, h=h, lhs=lhs, rhs=rhs))
    if not _equation_holds(H, B, A):
        h, h1, g, lhs, rhs = _equation_witness(H, G, B, A)
        return CompatibilityReport(False, Witness(
            "second", h=h, h1=h1, g=g, lhs=lhs, rhs=rhs))
    return CompatibilityReport(True, None)


def _inn_normalizes(G, A):
    """Does Inn(G) normalize the image of alpha (as a set of maps)?"""
    image = {row.tobytes() for row in A}
    for g1 in range(G.order):
        hat = G.conjugation_map(g1)
        hatinv = G.conjugation_map(G.inv(g1))
        conj = hat[A[:, hatinv]]
        for h, row in enumerate(conj):
            if row.tobytes() not in image:
                return False, (g1, h)
    return True, None


def normalizer_conditions(pair):
    """(Inn(G) normalizes alpha(H), Inn(H) normalizes beta(G))."""
    ok_g, _ = _inn_normalizes(pair.G, pair.alpha_maps)
    ok_h, _ = _inn_normalizes(pair.H, pair.beta_maps)
    return ok_g, ok_h


def induced_beta(G, H, alpha):
    """Given an embedding alpha: H -> Aut(G) whose image is normalized by
    Inn(G), build beta(g): h -> alpha^-1(ghat^-1 alpha(h) ghat) and return
    the (compatible) action pair.

    Both hypotheses are checked eagerly; the resulting pair is re-verified
    with the exhaustive checker before being returned.
    """
    if isinstance(alpha, GroupHom):
        aut = automorphism_group(G)
        A = aut.elements[alpha.map]
    else:
        A = np.asarray(alpha, dtype=np.intp)
    A = _validate_action(G, H, A, "alpha", require_hom=True)
    row_to_h = {}
    for h in range(H.order):
        key = A[h].tobytes()
        if key in row_to_h:
            raise AlphaNotInjective(
                f"alpha({h}) = alpha({row_to_h[key]})")
        row_to_h[key] = h
    ok, wit = _inn_normalizes(G, A)
    if not ok:
        raise NormalizerConditionFails(wit)
    beta_maps = np.empty((G.order, H.order), dtype=np.intp)
    for g in range(G.order):
        hat = G.conjugation_map(g)
        hatinv = G.conjugation_map(G.inv(g))
        conj = hat[A[:, hatinv]]
        beta_maps[g] = [row_to_h[row.tobytes()] for row in conj]
    pair = ActionPair(G, H, A, beta_maps, validate=True)
    report = is_compatible(pair)
    if not report.compatible:
        raise AssertionError(
            f"induced pair failed the exhaustive check: {report.witness}")
    return pair


def conjugation_maps(G):
    """Stack of all inner automorphisms: row g is conjugation by g."""
    return np.stack([G.conjugation_map(g) for g in range(G.order)])


def action_from_hom_pair(G, H, pair):
    """Actions x^y = psi(y)^-1 x psi(y), y^x = phi(x)^-1 y phi(x)."""
    phi, psi = pair.phi, pair.psi
    alpha_maps = np.stack([G.conjugation_map(psi(y)) for y in range(H.order)])
    beta_maps = np.stack([H.conjugation_map(phi(x)) for x in range(G.order)])
    return ActionPair(G, H, alpha_maps, beta_maps, validate=False)


def check_zeta2_congruence(G, H, pair):
    """x = psi(phi(x)) modulo the second hypercenter on both sides."""
    z2g = second_hypercenter(G).mask()
    z2h = second_hypercenter(H).mask()
    ar_g = np.arange(G.order)
    ar_h = np.arange(H.order)
    defect_g = G.table[G.inverse[ar_g], pair.psi.map[pair.phi.map]]
    if not z2g[defect_g].all():
        x = int(np.argmin(z2g[defect_g]))
        return False, ("G", x)
    defect_h = H.table[H.inverse[ar_h], pair.phi.map[pair.psi.map]]
    if not z2h[defect_h].all():
        y = int(np.argmin(z2h[defect_h]))
        return False, ("H", y)
    return True, None


def z2_action_criterion(G, psi):
    """For an involutive automorphism psi, decide whether g -> g*c(g) with
    c(g) = g^-1 g^psi central and inverted by psi -- equivalently whether
    the pair (alpha: Z2 -> <psi>, trivial beta) is compatible."""
    if isinstance(psi, GroupHom):
        psi = psi.map
    psi = np.asarray(psi, dtype=np.intp)
    ar = np.arange(G.order)
    if not np.array_equal(psi[psi], ar):
        raise PsiNotInvolution("psi composed with itself is not the identity")
    from .groups import center
    zmask = center(G).mask()
    c = G.table[G.inverse[ar], psi]
    central = zmask[c]
    if not central.all():
        g = int(np.argmin(central))
        return False, ("not-central", g, int(c[g]))
    inverted = psi[c] == G.inverse[c]
    if not inverted.all():
        g = int(np.argmin(inverted))
        return False, ("not-inverted", g, int(c[g]))
    return True, None


def involution_pair(G, psi):
    """The action pair (alpha: Z2 -> <psi>, beta trivial) for an involutive
    automorphism psi of G."""
    from .groups import make_cyclic
    if isinstance(psi, GroupHom):
        psi = psi.map
    psi = np.asarray(psi, dtype=np.intp)
    H = make_cyclic(2)
    alpha_maps = np.stack([np.arange(G.order), psi])
    beta_maps = np.tile(np.arange(2), (G.order, 1))
    return ActionPair(G, H, alpha_maps, beta_maps, validate=False)


# -- exhaustive enumeration ----------------------------------------------

@dataclass
class ActionGrid:
    """Every (alpha, beta) in Hom(H, Aut G) x Hom(G, Aut H) with verdicts.

    ``compatible[i, j]`` refers to alphas[i], betas[j]; ``normalizer_g``
    and ``normalizer_h`` depend only on one side each.
    """

    G: FiniteGroup
    H: FiniteGroup
    alphas: list
    betas: list
    compatible: np.ndarray
    normalizer_g: np.ndarray
    normalizer_h: np.ndarray

    def pair(self, i, j):
        autG = automorphism_group(self.G)
        autH = automorphism_group(self.H)
        return ActionPair.from_homs(self.alphas[i], self.betas[j], autG, autH)


def _aut_conj_table(G, aut):
    """conj[g, a] = index of ghat^-1 * a * ghat in Aut(G)."""
    t = aut.group.table
    inv = aut.group.inverse
    out = np.empty((G.order, aut.order), dtype=np.intp)
    ar = np.arange(aut.order)
    for g in range(G.order):
        ghat = int(aut.inner_of[g])
        out[g] = t[t[inv[ghat], ar], ghat]
    return out


def compatibility_grid(G, H, budget=None):
    """Vectorized verdicts for the full (alpha, beta) grid."""
    budget = default_budget() if budget is None else budget
    autG = automorphism_group(G)
    autH = automorphism_group(H)
    alphas = enumerate_homs(H, autG.group)
    betas = enumerate_homs(G, autH.group)
    if len(alphas) * len(betas) > budget:
        raise BudgetExceeded(
            f"{len(alphas)}x{len(betas)} action pairs exceed budget {budget}")
    conjA = _aut_conj_table(G, autG)
    conjB = _aut_conj_table(H, autH)
    amaps = np.stack([a.map for a in alphas]) if alphas else \
        np.empty((0, H.order), dtype=np.intp)
    bmaps = np.stack([b.map for b in betas]) if betas else \
        np.empty((0, G.order), dtype=np.intp)
    # actions at the element level, per hom
    Ball = autH.elements[bmaps]          # (nb, |G|, |H|): h^beta(g)
    Aall = autG.elements[amaps]          # (na, |H|, |G|): g^alpha(h)
    eq1 = np.empty((len(alphas), len(betas)), dtype=bool)
    for i, amap in enumerate(amaps):
        want = conjA[:, amap]            # (|G|, |H|)
        got = amap[Ball]                 # (nb, |G|, |H|)
        eq1[i] = (got == want[None]).all(axis=(1, 2))
    eq2 = np.empty_like(eq1)
    for j, bmap in enumerate(bmaps):
        want = conjB[:, bmap]            # (|H|, |G|)
        got = bmap[Aall]                 # (na, |H|, |G|)
        eq2[:, j] = (got == want[None]).all(axis=(1, 2))
    norm_g = np.array([_image_normalized(conjA, a.map) for a in alphas],
                      dtype=bool)
    norm_h = np.array([_image_normalized(conjB, b.map) for b in betas],
                      dtype=bool)
    return ActionGrid(G, H, alphas, betas, eq1 & eq2, norm_g, norm_h)


def _image_normalized(conj_table, mapping):
    image = np.unique(mapping)
    return bool(np.isin(conj_table[:, image], image).all())


def enumerate_compatible_pairs(G, H, budget=None):
    """All (alpha, beta) action pairs with compatibility verdicts and
    normalizer flags, in (alpha index, beta index) order."""
    grid = compatibility_grid(G, H, budget=budget)
    out = []
    for i in range(len(grid.alphas)):
        for j in range(len(grid.betas)):
            pair = grid.pair(i, j)
            if grid.compatible[i, j]:
                report = CompatibilityReport(True, None)
            else:
                report = is_compatible(pair)
            out.append((pair, report,
                        (bool(grid.normalizer_g[i]),
                         bool(grid.normalizer_h[j]))))
    return out


def compatible_pair_orbits(grid):
    """Orbits of the compatible (alpha, beta) pairs under the relabeling
    action of Aut(G) x Aut(H).

    Relabeling g -> sigma(g), h -> tau(h) carries the pair (A, B) to
    A'[tau h] = sigma A[h] sigma^-1, B'[sigma g] = tau B[g] tau^-1 and
    maps the tensor presentation onto itself by renaming symbols, so any
    presentation-level verdict (order, abelianness, invariants) is
    constant on each orbit.  Returns [(i, j, orbit size)] with the
    lexicographically least member as representative.
    """
    from .homs import generating_set
    autG = automorphism_group(grid.G)
    autH = automorphism_group(grid.H)
    alpha_index = {a.map.tobytes(): i for i, a in enumerate(grid.alphas)}
    beta_index = {b.map.tobytes(): j for j, b in enumerate(grid.betas)}
    tg, th = autG.group.table, autH.group.table
    ig, ih = autG.group.inverse, autH.group.inverse

    def movers():
        for s in generating_set(autG.group):
            conj = tg[tg[ig[s], np.arange(autG.order)], s]
            perm = autG.elements[s]
            yield "g", conj, perm
        for t in generating_set(autH.group):
            conj = th[th[ih[t], np.arange(autH.order)], t]
            perm = autH.elements[t]
            yield "h", conj, perm

    gens = list(movers())
    pending = {(int(i), int(j)) for i, j in np.argwhere(grid.compatible)}
    orbits = []
    while pending:
        root = min(pending)
        orbit = {root}
        queue = [root]
        while queue:
            i, j = queue.pop()
            amap = grid.alphas[i].map
            bmap = grid.betas[j].map
            for side, conj, perm in gens:
                if side == "g":
                    na = conj[amap]
                    nb = np.empty_like(bmap)
                    nb[perm] = bmap
                else:
                    na = np.empty_like(amap)
                    na[perm] = amap
                    nb = conj[bmap]
                nxt = (alpha_index[na.tobytes()], beta_index[nb.tobytes()])
                if nxt not in orbit:
                    orbit.add(nxt)
                    queue.append(nxt)
        pending -= orbit
        orbits.append((*min(orbit), len(orbit)))
    return orbits


def question2_scan(max_order, budget=None):
    """Evidence for the open sufficiency question: over all catalog pairs
    up to the given order, gather every (alpha, beta) satisfying both
    normalizer inclusions and record whether it is also compatible.

    No expected answer is hard-coded; counterexamples (inclusions hold,
    compatibility fails) are emitted with a full replayed witness."""
    records = []
    counterexamples = []
    pairs_scanned = 0
    for gk, G in catalog_groups_up_to(max_order):
        for hk, H in catalog_groups_up_to(max_order):
            grid = compatibility_grid(G, H, budget=budget)
            pairs_scanned += len(grid.alphas) * len(grid.betas)
            for i in range(len(grid.alphas)):
                if not grid.normalizer_g[i]:
                    continue
                for j in range(len(grid.betas)):
                    if not grid.normalizer_h[j]:
                        continue
                    rec = {"g": gk, "h": hk,
                           "alpha_index": i, "beta_index": j,
                           "normalizer_g": True, "normalizer_h": True,
                           "compatible": bool(grid.compatible[i, j])}
                    if not rec["compatible"]:
                        pair = grid.pair(i, j)
                        report = is_compatible(pair)
                        rec["witness"] = report.witness.__dict__.copy()
                        counterexamples.append(rec)
                    records.append(rec)
    return {"max_order": max_order,
            "pairs_scanned": pairs_scanned,
            "records": records,
            "counterexamples": counterexamples,
            "certificate": ("counterexample-found" if counterexamples
                            else f"no-counterexample-up-to-order-{max_order}")}


def verify_free_counterexample():
    """Replay the free-group computation showing that the congruence
    hypothesis cannot be dropped: with phi(x1) = y1 and psi trivial,
    y2^x1 = y1^-1 y2 y1 is a reduced word different from y2."""
    y1, y2 = [1], [2]
    conj = reduce_word(invert_word(y1) + y2 + y1)
    return conj == [-1, 2, 1] and conj != y2


# -- fast sweep for hom-pair induced actions ------------------------------

def hom_pair_compatibility_sweep(G, H, budget=None):
    """For every (phi, psi) in Hom(G,H) x Hom(H,G): does the conjugation
    action pair satisfy the hypercenter congruence, and is it compatible?

    The induced actions depend only on phi and psi modulo the centers, so
    compatibility is decided once per distinct action pair; the count
    still covers every hom pair.
    """
    from .groups import center
    phis = enumerate_homs(G, H, budget=budget)
    psis = enumerate_homs(H, G, budget=budget)
    zg = center(G)
    zh = center(H)
    z2g = second_hypercenter(G).mask()
    z2h = second_hypercenter(H).mask()
    coset_g = _center_coset_ids(G, zg)
    coset_h = _center_coset_ids(H, zh)

    # congruence, vectorized one phi at a time
    P = np.stack([p.map for p in phis]) if phis else np.empty((0, G.order), dtype=np.intp)
    S = np.stack([s.map for s in psis]) if psis else np.empty((0, H.order), dtype=np.intp)
    ar_g = np.arange(G.order)
    ar_h = np.arange(H.order)
    congruent = 0
    first_incongruent = None
    for i in range(len(P)):
        comp = S[:, P[i]]                       # (npsi, |G|): psi(phi(x))
        defect = G.table[G.inverse[ar_g][None, :], comp]
        ok_g = z2g[defect].all(axis=1)
        comp2 = P[i][S]                         # (npsi, |H|): phi(psi(y))
        defect2 = H.table[H.inverse[ar_h][None, :], comp2]
        ok_h = z2h[defect2].all(axis=1)
        both = ok_g & ok_h
        congruent += int(both.sum())
        if first_incongruent is None and not both.all():
            first_incongruent = (i, int(np.argmin(both)))

    # compatibility, deduplicated by (psi mod Z(G), phi mod Z(H))
    classes = {}
    for j, s in enumerate(psis):
        classes.setdefault(coset_g[s.map].tobytes(), []).append(j)
    classes_phi = {}
    for i, p in enumerate(phis):
        classes_phi.setdefault(coset_h[p.map].tobytes(), []).append(i)
    compatible = 0
    first_incompatible = None
    for pkey, pidx in classes_phi.items():
        for skey, sidx in classes.items():
            pair = action_from_hom_pair(
                G, H, HomPair(phis[pidx[0]], psis[sidx[0]]))
            ok = (_equation_holds(G, pair.alpha_maps, pair.beta_maps)
                  and _equation_holds(H, pair.beta_maps, pair.alpha_maps))
            if ok:
                compatible += len(pidx) * len(sidx)
            elif first_incompatible is None:
                first_incompatible = (pidx[0], sidx[0])
    total = len(phis) * len(psis)
    return {"n_phi": len(phis), "n_psi": len(psis), "n_pairs": total,
            "n_congruent": congruent, "n_compatible": compatible,
            "all_congruent": congruent == total,
            "all_compatible": compatible == total,
            "first_incongruent": first_incongruent,
            "first_incompatible": first_incompatible}


def _center_coset_ids(G, z):
    rep = np.full(G.order, -1, dtype=np.intp)
    for x in range(G.order):
        if rep[x] < 0:
            coset = [G.mul(x, n) for n in z.members]
            r = min(coset)
            for y in coset:
                rep[y] = r
    return rep
