"""Finitely presented groups and Todd-Coxeter coset enumeration.

Words are sequences of signed 1-based generator indices: +k is generator
k, -k its inverse.  The enumerator is HLT (relator scanning with
immediate filling) over the trivial subgroup; coset 0 is the subgroup
coset, cosets are numbered in order of first definition and dead cosets
are compacted away with the order preserved, so identical input yields a
bit-identical table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LimitExceeded, TableIncomplete
from .groups import FiniteGroup

DEFAULT_MAX_COSETS = 200_000


def reduce_word(word):
    """Freely reduce: iterated cancellation of adjacent inverse pairs."""
    out = []
    for letter in word:
        if letter == 0:
            raise ValueError("0 is not a valid letter")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(int(letter))
    return out


def invert_word(word):
    return [-letter for letter in reversed(word)]


@dataclass(frozen=True)
class Presentation:
    """Abstract generators 1..ngens plus freely reduced relator words."""

    ngens: int
    relators: tuple = ()

    def __post_init__(self):
        reduced = []
        for w in self.relators:
            r = reduce_word(w)
            for letter in r:
                if not 1 <= abs(letter) <= self.ngens:
                    raise ValueError(f"letter {letter} out of range")
            if r:
                reduced.append(tuple(r))
        object.__setattr__(self, "relators", tuple(reduced))


def _col(letter):
    # generator k -> column 2(k-1); inverse -> 2(k-1)+1
    k = abs(letter) - 1
    return 2 * k if letter > 0 else 2 * k + 1


def _invcol(col):
    return col ^ 1


@dataclass
class CosetTable:
    """A complete coset table: rows[c][col] is the coset reached from c."""

    ngens: int
    rows: np.ndarray
    complete: bool = True
    status: list = field(default_factory=list)

    @property
    def ncosets(self):
        return len(self.rows)

    def trace(self, coset, word):
        for letter in word:
            coset = int(self.rows[coset, _col(letter)])
        return coset


class _Enumerator:
    def __init__(self, ngens, max_cosets, max_steps):
        self.ncols = 2 * ngens
        self.table = [[None] * self.ncols]
        self.p = [0]
        self.max_cosets = max_cosets
        self.max_steps = max_steps
        self.steps = 0
        self.defined = 1

    def rep(self, k):
        # union-find with path compression toward smaller indices
        r = k
        while self.p[r] != r:
            r = self.p[r]
        while self.p[k] != r:
            self.p[k], k = r, self.p[k]
        return r

    def alive(self, k):
        return self.p[k] == k

    def define(self, alpha, col):
        if self.defined >= self.max_cosets:
            raise LimitExceeded(
                f"coset limit {self.max_cosets} reached; group may be "
                "infinite or the budget too small")
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(beta)
        self.defined += 1
        self.table[alpha][col] = beta
        self.table[beta][_invcol(col)] = alpha
        return beta

    def _merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            self.p[b] = a
            queue.append(b)

    def coincidence(self, a, b):
        queue = []
        self._merge(a, b, queue)
        qi = 0
        while qi < len(queue):
            gamma = queue[qi]
            qi += 1
            for col in range(self.ncols):
                delta = self.table[gamma][col]
                if delta is None:
                    continue
                self.table[delta][_invcol(col)] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if self.table[mu][col] is not None:
                    self._merge(nu, self.table[mu][col], queue)
                elif self.table[nu][_invcol(col)] is not None:
                    self._merge(mu, self.table[nu][_invcol(col)], queue)
                else:
                    self.table[mu][col] = nu
                    self.table[nu][_invcol(col)] = mu

    def scan_and_fill(self, alpha, cols):
        self.steps += 1
        if self.steps > self.max_steps:
            raise LimitExceeded(f"scan budget {self.max_steps} exhausted")
        f, i = alpha, 0
        b, j = alpha, len(cols) - 1
        while True:
            while i <= j and self.table[f][cols[i]] is not None:
                f = self.table[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.table[b][_invcol(cols[j])] is not None:
                b = self.table[b][_invcol(cols[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self.table[f][cols[i]] = b
                self.table[b][_invcol(cols[i])] = f
                return
            self.define(f, cols[i])


def coset_enumerate(presentation, max_cosets=None, max_deductions=None):
    """Enumerate cosets of the trivial subgroup; HLT strategy.

    Completes iff the presented group is finite and fits in the limits;
    the number of live cosets is then the group order.  The only failure
    mode is LimitExceeded.
    """
    max_cosets = DEFAULT_MAX_COSETS if max_cosets is None else max_cosets
    max_steps = max_deductions if max_deductions is not None else 50_000_000
    if max_cosets <= 0 or max_steps <= 0:
        raise ValueError("limits must be positive")
    # a relator holds from every coset iff any rotation or the inverse
    # does, so scanning needs only one representative per equivalence
    # class; completion is still validated against the full relator list
    seen = set()
    rel_cols = []
    for r in presentation.relators:
        variants = {tuple(w[i:] + w[:i])
                    for w in (r, tuple(-x for x in reversed(r)))
                    for i in range(len(w))}
        key = min(variants)
        if key not in seen:
            seen.add(key)
            rel_cols.append(tuple(_col(letter) for letter in r))
    enum = _Enumerator(presentation.ngens, max_cosets, max_steps)
    alpha = 0
    while alpha < len(enum.table):
        if not enum.alive(alpha):
            alpha += 1
            continue
        for cols in rel_cols:
            if not enum.alive(alpha):
                break
            enum.scan_and_fill(alpha, cols)
        if enum.alive(alpha):
            for col in range(enum.ncols):
                if enum.table[alpha][col] is None:
                    enum.define(alpha, col)
        alpha += 1

    live = [c for c in range(len(enum.table)) if enum.alive(c)]
    renum = {c: i for i, c in enumerate(live)}
    rows = np.empty((len(live), enum.ncols), dtype=np.intp)
    for i, c in enumerate(live):
        for col in range(enum.ncols):
            d = enum.table[c][col]
            if d is None:
                raise LimitExceeded("enumeration halted with holes in table")
            rows[i, col] = renum[enum.rep(d)]
    table = CosetTable(presentation.ngens, rows, complete=True,
                       status=["live"] * len(live))
    _validate_complete(table, presentation)
    return table


def _validate_complete(table, presentation):
    """Every generator column must be a permutation and every relator must
    trace to the identity permutation -- no wrong-order completions."""
    n = table.ncosets
    want = np.arange(n)
    for col in range(2 * presentation.ngens):
        if not np.array_equal(np.sort(table.rows[:, col]), want):
            raise TableIncomplete(f"column {col} is not a permutation")
    for r in presentation.relators:
        cur = want
        for letter in r:
            cur = table.rows[cur, _col(letter)]
        if not np.array_equal(cur, want):
            raise TableIncomplete(f"relator {r} does not trace to identity")


def table_to_group(table, presentation):
    """Turn a complete coset table over the trivial subgroup into a
    FiniteGroup; returns the group and the image element of each abstract
    generator.

    Element i is live coset i; multiplication traces the BFS
    representative word of the right factor from the left factor.
    """
    if not table.complete:
        raise TableIncomplete("coset table is not complete")
    n = table.ncosets
    # BFS representative words from coset 0, scanning generator columns in
    # order: deterministic and short
    words = {0: []}
    queue = [0]
    while queue:
        c = queue.pop(0)
        for k in range(1, presentation.ngens + 1):
            for letter in (k, -k):
                d = int(table.rows[c, _col(letter)])
                if d not in words:
                    words[d] = words[c] + [letter]
                    queue.append(d)
    if len(words) != n:
        raise TableIncomplete("table is not transitive on cosets")
    group_table = np.empty((n, n), dtype=np.intp)
    for j in range(n):
        cur = np.arange(n)
        for letter in words[j]:
            cur = table.rows[cur, _col(letter)]
        group_table[:, j] = cur
    group = FiniteGroup(group_table, validate=False)
    gen_images = [int(table.rows[0, _col(k)])
                  for k in range(1, presentation.ngens + 1)]
    return group, gen_images
