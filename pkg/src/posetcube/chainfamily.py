"""Families of per-cell prefix sets indexed by integer partitions.

A partition c_1 >= ... >= c_k of n cuts [n] into consecutive cells of
those sizes.  The family attached to the partition holds every subset of
[n] that meets each cell in a prefix of that cell, so it has exactly
prod(c_i + 1) members.  Unioning the families over all partitions of n
into at most a parts gives a small Boolean-lattice fragment into which
every poset of width at most a embeds; the embedding renames elements
along a minimum chain cover and sends each element to its downset.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

from .dilworth import decomposition_into_exactly
from .errors import FormatError, LimitError, MemoryLimitError
from .poset import Embedding, Poset, SubsetMask, mask_from_text, mask_to_text

PARTITION_SCAN_CAP = 40
DEFAULT_MAX_SETS = 1 << 24


@dataclass(frozen=True)
class PartitionSeq:
    """An integer partition: weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        for prev, part in zip(self.parts, self.parts[1:]):
            if part > prev:
                raise ValueError(f"parts not weakly decreasing: {self.parts}")
        if self.parts and self.parts[-1] < 1:
            raise ValueError("parts must be positive")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class CellLayout:
    """Consecutive cells of [n] sized by a partition.

    Cell i (1-indexed) covers ground elements boundaries[i-1]+1 through
    boundaries[i].
    """

    partition: PartitionSeq

    @cached_property
    def boundaries(self) -> tuple[int, ...]:
        acc = [0]
        for part in self.partition:
            acc.append(acc[-1] + part)
        return tuple(acc)

    @property
    def n(self) -> int:
        return self.boundaries[-1]

    def cell(self, i: int) -> range:
        """1-indexed ground elements of cell i (i itself 1-indexed too)."""
        return range(self.boundaries[i - 1] + 1, self.boundaries[i] + 1)

    def cell_masks(self) -> tuple[int, ...]:
        """Bitmask of each cell, in cell order."""
        out = []
        for lo, hi in zip(self.boundaries, self.boundaries[1:]):
            out.append(((1 << (hi - lo)) - 1) << lo)
        return tuple(out)


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of subsets of [m], sorted by mask value."""

    m: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = -1
        for mask in self.masks:
            if mask <= prev:
                raise ValueError("masks must be strictly increasing")
            if mask < 0 or mask >> self.m:
                raise ValueError(f"mask {mask:#x} outside ground set [{self.m}]")
            prev = mask

    @classmethod
    def from_masks(cls, m: int, masks: Iterable[int]) -> "SetFamily":
        return cls(m, tuple(sorted(set(masks))))

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[SubsetMask]:
        return (SubsetMask(self.m, bits) for bits in self.masks)

    def contains_mask(self, bits: int) -> bool:
        i = bisect_left(self.masks, bits)
        return i < len(self.masks) and self.masks[i] == bits

    def __contains__(self, item: SubsetMask) -> bool:
        return item.m == self.m and self.contains_mask(item.bits)

    def count_within(self, m: int) -> int:
        """How many member sets fit inside the smaller ground set [m]."""
        return bisect_right(self.masks, (1 << m) - 1)


def partitions(n: int, max_parts: int) -> Iterator[PartitionSeq]:
    """All partitions of n into at most max_parts parts, reverse-lex order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if not 0 <= max_parts <= n:
        raise ValueError(f"part budget {max_parts} outside [0, {n}]")
    if n > 0 and max_parts == 0:
        raise ValueError("positive n needs at least one part")
    return _partition_stream(n, max_parts)


def _partition_stream(n: int, max_parts: int) -> Iterator[PartitionSeq]:
    if n == 0:
        yield PartitionSeq(())
        return

    def rec(remaining: int, largest: int, budget: int, prefix: list[int]) -> Iterator[PartitionSeq]:
        if remaining == 0:
            yield PartitionSeq(tuple(prefix))
            return
        # each of the <= budget parts is <= the head part, so head*budget >= remaining
        low = -(-remaining // budget)
        for part in range(min(largest, remaining), low - 1, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, budget - 1, prefix)
            prefix.pop()

    yield from rec(n, n, max_parts, [])


_PARTITION_COUNTS = [1]


def partition_count(n: int) -> int:
    """The number of partitions of n, by Euler's pentagonal recurrence."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    while len(_PARTITION_COUNTS) <= n:
        target = len(_PARTITION_COUNTS)
        total = 0
        k = 1
        while True:
            gen1 = k * (3 * k - 1) // 2
            gen2 = k * (3 * k + 1) // 2
            if gen1 > target:
                break
            sign = 1 if k % 2 else -1
            total += sign * _PARTITION_COUNTS[target - gen1]
            if gen2 <= target:
                total += sign * _PARTITION_COUNTS[target - gen2]
            k += 1
        _PARTITION_COUNTS.append(total)
    return _PARTITION_COUNTS[n]


def hardy_ramanujan(n: int) -> float:
    """Leading-term asymptotic estimate of the partition count."""
    if n < 1:
        raise ValueError("estimate defined for n >= 1")
    return math.exp(math.pi * math.sqrt(2.0 * n / 3.0)) / (4.0 * math.sqrt(3.0) * n)


def _prefix_choices(c: PartitionSeq) -> list[list[int]]:
    """Per cell, the masks of its prefixes (empty through full)."""
    choices = []
    lo = 0
    for part in c:
        cell = [0]
        mask = 0
        for pos in range(lo, lo + part):
            mask |= 1 << pos
            cell.append(mask)
        choices.append(cell)
        lo += part
    return choices


def _family_masks(c: PartitionSeq) -> Iterator[int]:
    """Stream the per-cell prefix sets of one partition, one mask each."""
    for combo in product(*_prefix_choices(c)):
        yield sum(combo)  # cells are disjoint, sum is union


def family_for_partition(n: int, c: PartitionSeq) -> SetFamily:
    """All subsets of [n] meeting every cell of c in a prefix."""
    if c.n != n:
        raise ValueError(f"partition sums to {c.n}, not {n}")
    return SetFamily(n, tuple(sorted(_family_masks(c))))


def _balanced_product(n: int, a: int) -> int:
    """Size of the family for the most even partition of n into a parts."""
    q, r = divmod(n, a)
    return (q + 2) ** r * (q + 1) ** (a - r)


def chain_family(n: int, a: int, *, max_sets: int = DEFAULT_MAX_SETS) -> SetFamily:
    """Union of the per-cell prefix families over partitions into <= a parts.

    Raises MemoryLimitError when the union would exceed max_sets; the most
    even partition alone gives a lower bound on the union, so hopeless
    inputs fail before any materialization starts.
    """
    if not 1 <= a <= n:
        raise ValueError(f"chain budget {a} outside [1, {n}]")
    if _balanced_product(n, a) > max_sets:
        raise MemoryLimitError(
            f"chain family for n={n}, a={a} exceeds {max_sets} sets"
        )
    seen: set[int] = set()
    for c in partitions(n, a):
        for mask in _family_masks(c):
            seen.add(mask)
        if len(seen) > max_sets:
            raise MemoryLimitError(
                f"chain family for n={n}, a={a} exceeds {max_sets} sets"
            )
    return SetFamily(n, tuple(sorted(seen)))


def is_cell_prefix_union(bits: int, c: PartitionSeq) -> bool:
    """Does the mask meet every cell of c in a (possibly empty) prefix?"""
    lo = 0
    for part in c:
        cell_bits = (bits >> lo) & ((1 << part) - 1)
        if cell_bits & (cell_bits + 1):
            return False
        lo += part
    return True


def member_of_chain_family(
    t: SubsetMask, n: int, a: int, *, max_n: int = PARTITION_SCAN_CAP
) -> bool:
    """Membership in chain_family(n, a) without materializing it.

    Scans the partition stream for a layout under which t is a per-cell
    prefix union; capped because the stream length is the partition count.
    """
    if t.m != n:
        raise ValueError(f"mask over [{t.m}] tested against family over [{n}]")
    if not 1 <= a <= n:
        raise ValueError(f"chain budget {a} outside [1, {n}]")
    if n > max_n:
        raise LimitError(f"partition scan capped at n={max_n}, got n={n}")
    return any(is_cell_prefix_union(t.bits, c) for c in partitions(n, a))


def embed_bounded_antichain(p: Poset, a: int) -> Embedding:
    """Embed a poset of width at most a into the chain family over [n].

    Elements are renamed along the canonical minimum chain cover, cell i
    holding chain i; the image of an element takes from each cell the
    prefix covering the part of its downset lying on that chain.  Images
    are therefore per-cell prefix unions for the cover's own partition.
    """
    dec = decomposition_into_exactly(p, a)
    offsets = []
    chain_masks = []
    total = 0
    for chain in dec.chains:
        offsets.append(total)
        mask = 0
        for u in chain:
            mask |= 1 << u
        chain_masks.append(mask)
        total += len(chain)
    pred = p.pred
    images = []
    for j in range(p.n):
        row = pred[j] | (1 << j)
        bits = 0
        for offset, chain_mask in zip(offsets, chain_masks):
            d = (row & chain_mask).bit_count()
            bits |= ((1 << d) - 1) << offset
        images.append(bits)
    return Embedding(p.n, tuple(images))


def decomposition_partition(p: Poset, a: int) -> PartitionSeq:
    """The partition of n given by the canonical chain cover of p."""
    return PartitionSeq(decomposition_into_exactly(p, a).lengths)


def write_family(family: SetFamily) -> str:
    """Serialize a family: header 'm=<m> count=<k>', then one set per line."""
    lines = [f"m={family.m} count={len(family)}"]
    lines.extend(mask_to_text(bits) for bits in family.masks)
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> SetFamily:
    """Parse the family file format back into a SetFamily."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty family file")
    header = lines[0].split()
    if len(header) != 2 or not header[0].startswith("m=") or not header[1].startswith("count="):
        raise FormatError(f"bad family header {lines[0]!r}")
    try:
        m = int(header[0][2:])
        count = int(header[1][6:])
    except ValueError:
        raise FormatError(f"bad family header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != count:
        raise FormatError(f"header promises {count} sets, file has {len(body)}")
    try:
        masks = tuple(mask_from_text(line, m) for line in body)
        return SetFamily(m, masks)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
