"""Partitions, conjugates, hooks and the dominance order used in the block."""

from functools import lru_cache, total_ordering

ENUMERATION_BOUND = 60


class PartitionError(ValueError):
    pass


@total_ordering
class Partition:
    """A weakly decreasing tuple of positive ints (trailing zeros dropped)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        elif isinstance(parts, str):
            parts = parse_parts(parts)
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 0 for x in parts):
            raise PartitionError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"{parts} is not weakly decreasing")
        self.parts = parts

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __iter__(self):
        return iter(self.parts)

    def part(self, k):
        """lambda_k with 1-based k, zero past the length."""
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == Partition(other).parts
        return NotImplemented

    def __lt__(self, other):
        return self.parts < Partition(other).parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return to_text(self)

    def contains(self, other):
        other = Partition(other)
        return len(other) <= len(self) and all(a >= b for a, b in zip(self.parts, other.parts))


def parse_parts(text):
    text = text.strip().strip("()[]")
    if text in ("", "0", "∅"):
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as err:
        raise PartitionError(f"cannot read a partition from {text!r}") from err


def to_text(lam):
    lam = Partition(lam)
    return ",".join(map(str, lam.parts)) if lam.parts else "0"


def conjugate(lam):
    lam = Partition(lam)
    if not lam.parts:
        return Partition()
    return Partition(tuple(sum(1 for x in lam.parts if x > c) for c in range(lam.parts[0])))


def dominates_reversed(lam, mu):
    """True when lam dominates over mu: every partial sum of lam is <= that of mu.

    This is the reverse of the usual dominance order, with the hook
    (1^e) at the top.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise PartitionError(f"{lam} and {mu} have different weights")
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam.part(k + 1)
        b += mu.part(k + 1)
        if a > b:
            return False
    return True


def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _require_prime(p):
    if not is_prime(p):
        raise PartitionError(f"p={p} is not a prime")


def hook_partition(p, i):
    """The hook (i+1, 1^(p-i-1))."""
    _require_prime(p)
    if not 0 <= i <= p - 1:
        raise PartitionError(f"hook index {i} outside [0, {p - 1}]")
    return Partition((i + 1,) + (1,) * (p - i - 1))


def hook_index(lam, p):
    """Inverse of :func:`hook_partition`; raises if lam is not a hook of size p."""
    _require_prime(p)
    lam = Partition(lam)
    if lam.weight != p or any(x != 1 for x in lam.parts[1:]):
        raise PartitionError(f"{lam} is not a hook of size {p}")
    return lam.parts[0] - 1


def enumerate_partitions(e, bound=ENUMERATION_BOUND):
    """All partitions of e in reverse-lexicographic order."""
    if e < 0:
        raise PartitionError("negative size")
    if e > bound:
        raise PartitionError(f"size {e} exceeds the enumeration bound {bound}")

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return [Partition(x) for x in rec(e, e)]


def partitions_containing(inner, extra):
    """Partitions obtained from ``inner`` by adding ``extra`` boxes."""
    return list(_containing(Partition(inner).parts, extra))


@lru_cache(maxsize=4096)
def _containing(inner, extra):
    level = {inner}
    for _ in range(extra):
        nxt = set()
        for parts in level:
            parts = parts + (0,)
            for r in range(len(parts)):
                if r == 0 or parts[r - 1] > parts[r]:
                    new = parts[:r] + (parts[r] + 1,) + parts[r + 1:]
                    nxt.add(new[:-1] if new[-1] == 0 else new)
        level = nxt
    return tuple(Partition(x) for x in sorted(level, reverse=True))


def cells(lam):
    return {(r, c) for r, row in enumerate(Partition(lam).parts) for c in range(row)}


def skew_cells(outer, inner):
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise PartitionError(f"{inner} is not contained in {outer}")
    return cells(outer) - cells(inner)
