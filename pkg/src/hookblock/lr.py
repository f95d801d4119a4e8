"""Littlewood-Richardson counts with the column reading word.

Fillings follow the transposed convention that makes column reading work:
entries strictly increase along rows and weakly increase down columns, and
the word is read column by column from the left, each column bottom-up.
With content conj(nu) this counts the multiplicity of S_mu in
S_lam ⊗ S_nu (for Schur functors built as images in S^{lam~}); the
classical row-reading rule is kept as an independent check.
"""

from .abacus import p_core_and_weight
from .partitions import Partition, conjugate, hook_partition, partitions_containing, skew_cells


class TableauError(ValueError):
    pass


def is_yamanouchi(word):
    counts = {}
    for a in word:
        if a < 1:
            raise TableauError(f"letters must be positive, got {a}")
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


class SkewTableau:
    """A filling of outer/inner, stored as ``{(row, col): entry}`` (0-based cells)."""

    def __init__(self, outer, inner, entries):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        self.entries = dict(entries)
        if set(self.entries) != skew_cells(self.outer, self.inner):
            raise TableauError("entries do not cover the skew shape")

    def content(self):
        top = max(self.entries.values(), default=0)
        return tuple(sum(1 for v in self.entries.values() if v == k) for k in range(1, top + 1))

    def column_word(self):
        order = sorted(self.entries, key=lambda rc: (rc[1], -rc[0]))
        return tuple(self.entries[rc] for rc in order)

    def is_valid(self):
        """Rows strictly increase, columns weakly increase."""
        for (r, c), v in self.entries.items():
            if (r, c + 1) in self.entries and not v < self.entries[(r, c + 1)]:
                return False
            if (r + 1, c) in self.entries and not v <= self.entries[(r + 1, c)]:
                return False
        return True

    def rows(self):
        out = []
        for r in range(len(self.outer)):
            out.append([self.entries.get((r, c)) for c in range(self.outer.part(r + 1))])
        return out


def lr_tableaux(outer, inner, content):
    """All valid fillings of outer/inner with the given content and Yamanouchi column word."""
    outer, inner = Partition(outer), Partition(inner)
    content = tuple(content)
    sk = skew_cells(outer, inner)
    if len(sk) != sum(content):
        return []
    order = sorted(sk, key=lambda rc: (rc[1], -rc[0]))
    k = len(content)
    remaining = list(content)
    counts = [0] * (k + 1)
    filling = {}
    out = []

    def rec(pos):
        if pos == len(order):
            out.append(SkewTableau(outer, inner, filling))
            return
        r, c = order[pos]
        lo = filling[(r, c - 1)] + 1 if (r, c - 1) in filling else 1
        hi = filling[(r + 1, c)] if (r + 1, c) in filling else k
        for v in range(lo, hi + 1):
            if not remaining[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            remaining[v - 1] -= 1
            counts[v] += 1
            filling[(r, c)] = v
            rec(pos + 1)
            del filling[(r, c)]
            counts[v] -= 1
            remaining[v - 1] += 1

    rec(0)
    return out


def lr_coefficient(lam, nu, mu):
    """Multiplicity of S_mu in S_lam ⊗ S_nu."""
    lam, nu, mu = Partition(lam), Partition(nu), Partition(mu)
    if not mu.contains(lam) or mu.weight != lam.weight + nu.weight:
        return 0
    return len(lr_tableaux(mu, lam, conjugate(nu).parts))


def classical_lr_coefficient(lam, nu, mu):
    """The textbook rule: rows weak, columns strict, reverse row word a lattice word."""
    lam, nu, mu = Partition(lam), Partition(nu), Partition(mu)
    if not mu.contains(lam) or mu.weight != lam.weight + nu.weight:
        return 0
    sk = skew_cells(mu, lam)
    order = sorted(sk, key=lambda rc: (rc[0], -rc[1]))
    content = nu.parts
    k = len(content)
    remaining = list(content)
    counts = [0] * (k + 1)
    filling = {}
    total = 0

    def rec(pos):
        nonlocal total
        if pos == len(order):
            total += 1
            return
        r, c = order[pos]
        hi = filling[(r, c + 1)] if (r, c + 1) in filling else k
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        for v in range(lo, hi + 1):
            if not remaining[v - 1] or (v > 1 and counts[v] + 1 > counts[v - 1]):
                continue
            remaining[v - 1] -= 1
            counts[v] += 1
            filling[(r, c)] = v
            rec(pos + 1)
            del filling[(r, c)]
            counts[v] -= 1
            remaining[v - 1] += 1

    rec(0)
    return total


def hook_translation_coefficient(i, lam, mu, p):
    """c(i, lam; mu): fillings of mu/lam with content (p-i, 1^i)."""
    if not 0 <= i <= p - 1:
        raise TableauError(f"hook index {i} outside [0, {p - 1}]")
    lam, mu = Partition(lam), Partition(mu)
    if not mu.contains(lam) or mu.weight != lam.weight + p:
        return 0
    return len(lr_tableaux(mu, lam, (p - i,) + (1,) * i))


def tensor_multiplicities(lam, nu):
    lam, nu = Partition(lam), Partition(nu)
    out = {}
    for mu in partitions_containing(lam, nu.weight):
        c = lr_coefficient(lam, nu, mu)
        if c:
            out[mu] = c
    return out


def theta_multiplicities(lam, nu, p=None):
    """Schur-factor multiplicities of S_lam ⊗ S_nu, projected to the block of lam when p is given."""
    out = tensor_multiplicities(lam, nu)
    if p is None:
        return out
    core = p_core_and_weight(lam, p)[0]
    return {mu: c for mu, c in out.items() if p_core_and_weight(mu, p)[0] == core}


def theta_hook(lam, p, i):
    return theta_multiplicities(lam, hook_partition(p, i), p)
