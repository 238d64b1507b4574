"""Exact arithmetic on finite groups given by dense Cayley tables.

Elements are integer indices; ``table[i][j]`` is the index of the product
of elements ``i`` and ``j``.  Conjugation is ``x^y = y^-1 x y``, the
commutator is ``[x, y] = x^-1 y^-1 x y``.  Every object here is immutable
after construction and every operation is a pure function of its inputs,
so everything is safe to use concurrently.
"""

from __future__ import annotations

import numpy as np

from .errors import NotAGroup, NotNormal


def _check_latin(table):
    n = len(table)
    want = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(table[i]), want):
            return ("row", i)
        if not np.array_equal(np.sort(table[:, i]), want):
            return ("col", i)
    return None


def _find_identity(table):
    n = len(table)
    want = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], want) and np.array_equal(table[:, e], want):
            return e
    return None


def _check_associative(table):
    """Return a witness triple (i, j, k) or None.  Vectorized row by row to
    keep memory at O(n^2) even for order-512 tables."""
    n = len(table)
    for i in range(n):
        left = table[table[i], :]      # (i*j)*k
        right = table[i, table]        # i*(j*k)
        if not np.array_equal(left, right):
            j, k = np.argwhere(left != right)[0]
            return (i, int(j), int(k))
    return None


class FiniteGroup:
    """A finite group as an order x order Cayley table over element indices."""

    __slots__ = ("table", "order", "identity", "inverse", "names",
                 "_abelian", "_orders", "_aut")

    def __init__(self, table, names=None, validate=True):
        table = np.ascontiguousarray(np.asarray(table, dtype=np.intp))
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise NotAGroup("not-latin-square", ("shape", table.shape))
        n = len(table)
        if n == 0:
            raise NotAGroup("no-identity", None)
        if table.min() < 0 or table.max() >= n:
            raise NotAGroup("not-latin-square", ("entry-range",))
        if validate:
            bad = _check_latin(table)
            if bad is not None:
                raise NotAGroup("not-latin-square", bad)
        e = _find_identity(table)
        if e is None:
            raise NotAGroup("no-identity", None)
        # With a Latin square and an identity, row inverses exist; demand
        # they are two-sided before the (expensive) associativity sweep.
        inv = np.argmax(table == e, axis=1)
        if validate:
            if not np.all(table[inv, np.arange(n)] == e):
                i = int(np.argmax(table[inv, np.arange(n)] != e))
                raise NotAGroup("missing-inverse", (i,))
            wit = _check_associative(table)
            if wit is not None:
                raise NotAGroup("not-associative", wit)
        self.table = table
        self.table.setflags(write=False)
        self.order = n
        self.identity = int(e)
        self.inverse = inv
        self.inverse.setflags(write=False)
        self.names = list(names) if names is not None else None
        self._abelian = None
        self._orders = None
        self._aut = None

    # -- basic arithmetic -------------------------------------------------

    def mul(self, i, j):
        return int(self.table[i, j])

    def inv(self, i):
        return int(self.inverse[i])

    def conj(self, x, y):
        """x^y = y^-1 x y."""
        return int(self.table[self.table[self.inverse[y], x], y])

    def commutator(self, x, y):
        return self.mul(self.inv(x), self.conj(x, y))

    def power(self, x, k):
        if k < 0:
            x, k = self.inv(x), -k
        acc = self.identity
        for _ in range(k):
            acc = self.mul(acc, x)
        return acc

    def element_order(self, x):
        acc, k = x, 1
        while acc != self.identity:
            acc = self.mul(acc, x)
            k += 1
        return k

    def element_orders(self):
        if self._orders is None:
            orders = np.array([self.element_order(x) for x in range(self.order)])
            orders.setflags(write=False)
            self._orders = orders
        return self._orders

    def order_histogram(self):
        orders = self.element_orders()
        vals, counts = np.unique(orders, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    @property
    def is_abelian(self):
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.table, self.table.T))
        return self._abelian

    def elements(self):
        return range(self.order)

    def name(self, i):
        if self.names is not None:
            return self.names[i]
        return str(i)

    def conjugation_map(self, g):
        """The inner automorphism x -> g^-1 x g as an index array."""
        return self.table[self.table[self.inv(g), :], g]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class Subgroup:
    """A subgroup of a parent group, stored as a sorted member tuple."""

    __slots__ = ("parent", "members", "_mask")

    def __init__(self, parent, members):
        self.parent = parent
        self.members = tuple(sorted(set(int(m) for m in members)))
        mask = np.zeros(parent.order, dtype=bool)
        mask[list(self.members)] = True
        mask.setflags(write=False)
        self._mask = mask

    @property
    def order(self):
        return len(self.members)

    def __contains__(self, x):
        return bool(self._mask[x])

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def mask(self):
        return self._mask

    def is_whole_group(self):
        return len(self.members) == self.parent.order

    def as_group(self):
        """The subgroup as a standalone FiniteGroup plus the index map back
        into the parent (element i of the result is ``members[i]``)."""
        idx = {m: i for i, m in enumerate(self.members)}
        n = len(self.members)
        table = np.empty((n, n), dtype=np.intp)
        for i, a in enumerate(self.members):
            for j, b in enumerate(self.members):
                table[i, j] = idx[self.parent.mul(a, b)]
        names = None
        if self.parent.names is not None:
            names = [self.parent.names[m] for m in self.members]
        return FiniteGroup(table, names=names, validate=False), list(self.members)

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.order})"


class GroupHom:
    """A total map between finite groups respecting products."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, mapping, validate=True):
        mapping = np.ascontiguousarray(np.asarray(mapping, dtype=np.intp))
        if len(mapping) != source.order:
            raise ValueError("map length must equal source order")
        if validate:
            lhs = mapping[source.table]
            rhs = target.table[np.ix_(mapping, mapping)]
            if not np.array_equal(lhs, rhs):
                from .errors import NotAHomomorphism
                i, j = np.argwhere(lhs != rhs)[0]
                raise NotAHomomorphism((int(i), int(j)))
        self.source = source
        self.target = target
        self.map = mapping
        self.map.setflags(write=False)

    def __call__(self, x):
        return int(self.map[x])

    def image(self):
        return Subgroup(self.target, np.unique(self.map))

    def kernel(self):
        return Subgroup(self.source,
                        np.flatnonzero(self.map == self.target.identity))

    @property
    def is_injective(self):
        return len(np.unique(self.map)) == self.source.order

    @property
    def is_surjective(self):
        return len(np.unique(self.map)) == self.target.order

    @property
    def is_bijective(self):
        return self.is_injective and self.source.order == self.target.order

    def is_trivial(self):
        return bool(np.all(self.map == self.target.identity))

    def then(self, other):
        """Composition: first self, then other."""
        return GroupHom(self.source, other.target, other.map[self.map],
                        validate=False)

    def __repr__(self):
        return f"GroupHom({self.source.order} -> {self.target.order})"


# -- constructors ---------------------------------------------------------

def from_cayley_table(raw, names=None):
    """Validate an untrusted table and wrap it.  All four group axioms are
    checked exhaustively; failures raise NotAGroup with a witness."""
    return FiniteGroup(raw, names=names, validate=True)


def make_cyclic(n):
    if n < 1:
        raise ValueError("n must be >= 1")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    if n == 1:
        names = ["1"]
    else:
        names = ["1", "a"] + [f"a^{i}" for i in range(2, n)]
    return FiniteGroup(table, names=names, validate=False)


def trivial_group():
    return make_cyclic(1)


def direct_product(a, b):
    """Direct product; element i*|b|+j is the pair (i, j)."""
    n, m = a.order, b.order
    ai = np.repeat(np.arange(n), m)
    bj = np.tile(np.arange(m), n)
    # (i1,j1)*(i2,j2) = (i1*i2, j1*j2)
    t = a.table[ai[:, None], ai[None, :]] * m + b.table[bj[:, None], bj[None, :]]
    names = [f"({a.name(i)},{b.name(j)})" for i, j in zip(ai, bj)]
    return FiniteGroup(t, names=names, validate=False)


# -- subgroup machinery ---------------------------------------------------

def subgroup_generated(G, gens):
    """Smallest subgroup containing ``gens``, via closure orbit."""
    members = {G.identity}
    frontier = [G.identity]
    gens = [int(g) for g in gens]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = G.mul(x, s)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return Subgroup(G, members)


def is_subgroup_set(G, members):
    ms = set(int(m) for m in members)
    if G.identity not in ms:
        return False
    return all(G.mul(a, b) in ms for a in ms for b in ms)


def center(G):
    commutes = G.table == G.table.T
    return Subgroup(G, np.flatnonzero(commutes.all(axis=1)))


def centralizes(G, x, members):
    return all(G.mul(x, m) == G.mul(m, x) for m in members)


def quotient(G, N):
    """Quotient by a normal subgroup, with the projection homomorphism.

    Cosets are labelled by their minimal-index representative and ordered
    by that representative, so the output is deterministic.
    """
    for g in range(G.order):
        for n in N.members:
            if G.conj(n, g) not in N:
                raise NotNormal((g, n))
    rep_of = np.full(G.order, -1, dtype=np.intp)
    for x in range(G.order):
        if rep_of[x] >= 0:
            continue
        coset = [G.mul(x, n) for n in N.members]
        r = min(coset)
        for y in coset:
            rep_of[y] = r
    reps = sorted(set(int(r) for r in rep_of))
    index = {r: i for i, r in enumerate(reps)}
    k = len(reps)
    table = np.empty((k, k), dtype=np.intp)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = index[int(rep_of[G.mul(a, b)])]
    names = [f"[{G.name(r)}]" for r in reps]
    Q = FiniteGroup(table, names=names, validate=False)
    proj = GroupHom(G, Q, [index[int(rep_of[x])] for x in range(G.order)],
                    validate=False)
    return Q, proj


def second_hypercenter(G):
    """Preimage in G of the center of G/Z(G)."""
    z1 = center(G)
    if z1.is_whole_group():
        return z1
    Q, proj = quotient(G, z1)
    zq = center(Q)
    return Subgroup(G, [x for x in range(G.order) if proj(x) in zq])


def derived_subgroup(G):
    comms = {G.commutator(x, y) for x in range(G.order) for y in range(G.order)}
    return Subgroup(G, subgroup_generated(G, comms).members)


def lower_central_series(G):
    """gamma_1 = G, gamma_{k+1} = [gamma_k, G]; stops when stable."""
    series = [Subgroup(G, range(G.order))]
    while True:
        cur = series[-1]
        comms = {G.commutator(x, y) for x in cur.members for y in range(G.order)}
        nxt = subgroup_generated(G, comms)
        if nxt.members == cur.members:
            break
        series.append(nxt)
        if nxt.order == 1:
            break
    return series


def nilpotency_class(G):
    """Smallest c with gamma_{c+1} trivial, or None when not nilpotent."""
    series = lower_central_series(G)
    if series[-1].order != 1:
        return None
    return len(series) - 1
