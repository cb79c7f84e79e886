"""Partition and Young-diagram combinatorics.

Partitions are tuples of weakly decreasing positive integers with trailing
zeros stripped; the empty partition is ().  Boxes are 1-based (row, column)
pairs.  Everything here is a pure function over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass

Partition = tuple  # weakly decreasing tuple of positive ints, () for empty
Box = tuple  # (row, column), 1-based


def clean(parts) -> Partition:
    """Canonical partition: ints, trailing zeros stripped, weakly decreasing."""
    out = tuple(int(p) for p in parts)
    while out and out[-1] == 0:
        out = out[:-1]
    for p in out:
        if p < 0:
            raise ValueError("negative part in %r" % (tuple(parts),))
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ValueError("parts not weakly decreasing: %r" % (tuple(parts),))
    return out


def weight(lam) -> int:
    return sum(lam)


def part(lam, i: int) -> int:
    """lam_i with 1-based index i; zero beyond the stored length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def padded(lam, length: int) -> tuple:
    lam = tuple(lam)
    if len(lam) > length:
        raise ValueError("partition %r longer than %d" % (lam, length))
    return lam + (0,) * (length - len(lam))


def boxes(lam):
    """All boxes (i, j) of the diagram, row by row."""
    for i, row in enumerate(tuple(lam), start=1):
        for j in range(1, row + 1):
            yield (i, j)


def conjugate(lam) -> Partition:
    lam = clean(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(inner, outer) -> bool:
    """Young-diagram containment inner <= outer, part by part."""
    inner, outer = clean(inner), clean(outer)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def dominates(lam, mu) -> bool:
    """lam >= mu in dominance order; requires equal weight."""
    lam, mu = clean(lam), clean(mu)
    if weight(lam) != weight(mu):
        raise ValueError("dominance compares equal-weight partitions only")
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += part(lam, i + 1)
        total_m += part(mu, i + 1)
        if total_l < total_m:
            return False
    return True


def arm_leg(lam, b: Box):
    """(arm, leg, coarm, coleg) of box b = (i, j) in the diagram of lam.

    arm = cells strictly right of b in its row, leg = cells strictly below in
    its column, coarm/coleg = cells strictly left/above.
    """
    lam = clean(lam)
    i, j = b
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError("box %r outside diagram of %r" % (b, lam))
    arm = lam[i - 1] - j
    leg = sum(1 for k in range(i + 1, len(lam) + 1) if part(lam, k) >= j)
    return arm, leg, j - 1, i - 1


@dataclass(frozen=True, eq=False)
class ReverseTableau:
    """Filling of a Young diagram with entries in {1..bound}; rows weakly
    decreasing left to right, columns strictly decreasing top to bottom."""

    shape: Partition
    bound: int
    entries: dict  # Box -> int

    def __post_init__(self):
        for b in boxes(self.shape):
            e = self.entries[b]
            if not 1 <= e <= self.bound:
                raise ValueError("entry %r at %r out of range" % (e, b))

    def entry(self, b: Box) -> int:
        return self.entries[b]

    def __eq__(self, other):
        if not isinstance(other, ReverseTableau):
            return NotImplemented
        return (self.shape, self.bound, self.key()) == (
            other.shape, other.bound, other.key())

    def __hash__(self):
        return hash((self.shape, self.bound, self.key()))

    def strip_partition(self, k: int) -> Partition:
        """The subpartition of boxes with entry > k (valid for 0 <= k <= bound)."""
        rows = []
        for i in range(1, len(self.shape) + 1):
            rows.append(sum(1 for j in range(1, self.shape[i - 1] + 1)
                            if self.entries[(i, j)] > k))
        return clean(rows)

    def key(self) -> tuple:
        return tuple(self.entries[b] for b in boxes(self.shape))


def reverse_tableaux(lam, r: int) -> list:
    """Enumerate all reverse tableaux of shape lam with entries in {1..r}.

    A column of height > r admits no strictly decreasing filling, so the
    result is empty (not an error) when length(lam) > r.
    """
    lam = clean(lam)
    if r < 1:
        raise ValueError("r must be >= 1")
    if len(lam) > r:
        return []
    cells = list(boxes(lam))
    entries = {}
    out = []

    def fill(pos: int):
        if pos == len(cells):
            out.append(ReverseTableau(lam, r, dict(entries)))
            return
        i, j = cells[pos]
        hi = r
        if j > 1:
            hi = min(hi, entries[(i, j - 1)])
        if i > 1 and part(lam, i - 1) >= j:
            hi = min(hi, entries[(i - 1, j)] - 1)
        for v in range(hi, 0, -1):
            entries[(i, j)] = v
            fill(pos + 1)
        entries.pop((i, j), None)

    fill(0)
    return out


def rc_set(outer, inner) -> set:
    """Boxes of outer lying in a row that meets the strip outer\\inner but in
    no column that meets it."""
    outer, inner = clean(outer), clean(inner)
    if not contains(inner, outer):
        raise ValueError("inner %r not contained in outer %r" % (inner, outer))
    strip = [b for b in boxes(outer) if b[1] > part(inner, b[0])]
    rows_hit = {i for i, _ in strip}
    cols_hit = {j for _, j in strip}
    return {b for b in boxes(outer) if b[0] in rows_hit and b[1] not in cols_hit}


def partitions_of(n: int, max_length: int, max_part=None):
    """Partitions of exactly n with at most max_length parts, each <= max_part,
    in descending lexicographic order."""
    if max_part is None:
        max_part = n

    def gen(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(remaining, cap), 0, -1):
            if p * slots < remaining:
                break
            for rest in gen(remaining - p, p, slots - 1):
                yield (p,) + rest

    return list(gen(n, max_part, max_length))


def enumerate_partitions(max_weight: int, max_length: int) -> list:
    """All partitions with weight <= max_weight and length <= max_length in
    graded lexicographic order (by weight, then lex descending)."""
    if max_weight < 0 or max_length < 1:
        raise ValueError("need max_weight >= 0 and max_length >= 1")
    out = []
    for w in range(max_weight + 1):
        out.extend(partitions_of(w, max_length))
    return out


def double(lam, mode: str) -> Partition:
    """Doubled partition: 'stretch' doubles every part, 'duplicate' repeats
    every part twice."""
    lam = clean(lam)
    if mode == "stretch":
        return tuple(2 * p for p in lam)
    if mode == "duplicate":
        out = []
        for p in lam:
            out.extend((p, p))
        return tuple(out)
    raise ValueError("mode must be 'stretch' or 'duplicate', got %r" % (mode,))
