"""Beta-numbers, the p-abacus, rim hooks and the weight-one labels mu_i."""

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (Partition, PartitionError, cells, partitions_containing,
                         skew_cells)


class AbacusError(ValueError):
    pass


def beta_sequence(lam, b):
    """(lam_1 - 1, lam_2 - 2, ..., lam_b - b)."""
    lam = Partition(lam)
    if b < len(lam):
        raise AbacusError(f"{b} beads cannot hold a partition of length {len(lam)}")
    return tuple(lam.part(l) - l for l in range(1, b + 1))


def partition_of(beta):
    beta = tuple(beta)
    if any(a <= b for a, b in zip(beta, beta[1:])):
        raise AbacusError(f"{beta} is not strictly decreasing")
    parts = [x + l for l, x in enumerate(beta, start=1)]
    if parts and parts[-1] < 0:
        raise AbacusError(f"{beta} does not come from a partition")
    return Partition(parts)


def _positions(lam, extra=0):
    lam = Partition(lam)
    b = len(lam) + extra
    return b, [x + b for x in beta_sequence(lam, b)]


def _from_positions(pos, b):
    return partition_of(sorted((x - b for x in pos), reverse=True))


def p_core_and_weight(lam, p):
    """Slide every bead up its runner as far as it goes."""
    if p < 2:
        raise AbacusError("p must be at least 2")
    b, pos = _positions(lam)
    runners = {}
    for x in pos:
        runners.setdefault(x % p, []).append(x)
    core, weight = [], 0
    for r, xs in runners.items():
        for level, x in enumerate(sorted(xs)):
            core.append(r + level * p)
            weight += (x - r) // p - level
    return _from_positions(core, b), weight


def is_p_core(lam, p):
    return p_core_and_weight(lam, p)[1] == 0


@dataclass(frozen=True)
class RimHookDescriptor:
    """A removable rim p-hook: its hand is in row ``row`` (1-based); ``leg`` = rows - 1.

    ``hook`` is the index i of the hook (i+1, 1^(p-i-1)) with the same leg.
    """
    row: int
    leg: int
    p: int

    @property
    def hook(self):
        return self.p - 1 - self.leg


def removable_rim_hooks(lam, p):
    lam = Partition(lam)
    b, pos = _positions(lam)
    occupied = set(pos)
    out = []
    for l, x in enumerate(pos, start=1):
        y = x - p
        if y < 0 or y in occupied:
            continue
        leg = sum(1 for z in occupied if y < z < x)
        out.append(RimHookDescriptor(l, leg, p))
    return out


def remove_rim_hook(lam, d):
    lam = Partition(lam)
    b, pos = _positions(lam)
    if not any(h == d for h in removable_rim_hooks(lam, d.p)):
        raise AbacusError(f"{d} is not a removable rim hook of {lam}")
    pos = list(pos)
    pos[d.row - 1] -= d.p
    return _from_positions(pos, b)


def is_rim_hook(outer, inner):
    """Geometric test: the skew shape is connected and contains no 2x2 square."""
    try:
        sk = skew_cells(outer, inner)
    except PartitionError:
        return False
    if not sk:
        return False
    if any((r + 1, c) in sk and (r, c + 1) in sk and (r + 1, c + 1) in sk for r, c in sk):
        return False
    start = next(iter(sk))
    seen, stack = {start}, [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in sk and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(sk)


def rim_hook_rows(outer, inner):
    sk = skew_cells(outer, inner)
    return len({r for r, _ in sk})


def mu_index(core, p, i):
    """The weight-one partition with p-core ``core`` whose rim hook has p-i rows.

    On the abacus each runner of a core has one bead that can slide down;
    the bead passing over exactly p-i-1 other beads gives mu_i.
    """
    core = Partition(core)
    if not 0 <= i <= p - 1:
        raise AbacusError(f"hook index {i} outside [0, {p - 1}]")
    if not is_p_core(core, p):
        raise AbacusError(f"{core} is not a {p}-core")
    b, pos = _positions(core, extra=p)
    occupied = set(pos)
    found = []
    for x in pos:
        y = x + p
        if y in occupied:
            continue
        leg = sum(1 for z in occupied if x < z < y)
        if leg == p - 1 - i:
            found.append(x)
    if len(found) != 1:
        raise AbacusError(f"expected one bead for i={i}, found {len(found)}")
    new = [y + p if y == found[0] else y for y in pos]
    return _from_positions(new, b)


def weight1_diagrams(core, p):
    """All partitions of |core| + p with p-core ``core``, by exhaustive search.

    Such partitions contain the core, so the search runs over partitions
    obtained from the core by adding p boxes.
    """
    core = Partition(core)
    return [mu for mu in partitions_containing(core, p)
            if p_core_and_weight(mu, p) == (core, 1)]


def weight1_by_geometry(core, p):
    """Independent route: add a border strip of size p to the core."""
    return list(_geometry(Partition(core).parts, p))


@lru_cache(maxsize=1024)
def _geometry(core, p):
    return tuple(mu for mu in partitions_containing(core, p) if is_rim_hook(mu, core))


def mu_by_enumeration(core, p, i):
    """mu_i found by matching rim hooks of the weight-one diagrams geometrically."""
    hits = [mu for mu in weight1_by_geometry(core, p) if rim_hook_rows(mu, core) == p - i]
    if len(hits) != 1:
        raise AbacusError(f"{len(hits)} diagrams for i={i}")
    return hits[0]


def random_core(rng, p, max_size=30):
    """A p-core of size at most ``max_size``, obtained as the core of a random partition."""
    size = int(rng.integers(0, max_size + 1))
    parts, rest = [], size
    while rest:
        x = int(rng.integers(1, rest + 1))
        parts.append(x)
        rest -= x
    return p_core_and_weight(Partition(sorted(parts, reverse=True)), p)[0]


__all__ = ["beta_sequence", "partition_of", "p_core_and_weight", "is_p_core",
           "RimHookDescriptor", "removable_rim_hooks", "remove_rim_hook", "is_rim_hook",
           "mu_index", "weight1_diagrams", "weight1_by_geometry", "mu_by_enumeration",
           "cells"]
