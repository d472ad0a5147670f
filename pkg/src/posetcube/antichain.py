"""Embedding posets with a large antichain into a shrunken Boolean lattice.

Fix an antichain A of size a in a poset on n elements and let ell be the
least width for which the middle binomial coefficient reaches a.  The
ground set [n-a+ell] splits into three blocks: positions for the elements
lying below A, a label block of width ell whose half-size subsets tag the
antichain elements, and positions for everything else.  Images are built
so that containment across blocks reproduces the order exactly, which is
what buys the drop from n to n-a+ell ground elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import NotAnAntichainError, SizeError
from .poset import Embedding, Poset, bit_indices


def min_ell(a: int) -> int:
    """Least ell >= 0 whose middle binomial coefficient is at least a."""
    if a < 1:
        raise ValueError("need at least one label")
    ell = 0
    while math.comb(ell, ell // 2) < a:
        ell += 1
    return ell


def colex_half_subsets(lo: int, ell: int, count: int) -> tuple[int, ...]:
    """First `count` masks of the (ell//2)-subsets of [lo+1, lo+ell], colex order.

    Positions are 1-indexed ground elements; the returned masks use bit
    e-1 for element e, matching the package-wide convention.
    """
    pool = range(lo + 1, lo + ell + 1)
    combos = sorted(combinations(pool, ell // 2), key=lambda t: t[::-1])
    if count > len(combos):
        raise ValueError(f"only {len(combos)} labels available, need {count}")
    out = []
    for combo in combos[:count]:
        mask = 0
        for e in combo:
            mask |= 1 << (e - 1)
        out.append(mask)
    return tuple(out)


@dataclass(frozen=True)
class AntichainSplit:
    """The three-block layout induced by a chosen antichain.

    ``below`` holds the elements under some antichain element, ``above``
    the rest, both ascending; ``antichain`` pairs with ``label_masks``
    positionally.  ``b`` and ``ell`` fix the ground-set geometry: below
    elements occupy positions 1..b, labels live in [b+1, b+ell], above
    elements take [b+ell+1, ..] in listed order.
    """

    below: tuple[int, ...]
    antichain: tuple[int, ...]
    above: tuple[int, ...]
    ell: int
    label_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = (*self.below, *self.antichain, *self.above)
        if len(set(parts)) != len(parts):
            raise ValueError("blocks overlap")
        if len(self.label_masks) != len(self.antichain):
            raise ValueError("one label per antichain element required")
        window = ((1 << self.ell) - 1) << self.b
        half = self.ell // 2
        if len(set(self.label_masks)) != len(self.label_masks):
            raise ValueError("label sets must be distinct")
        for mask in self.label_masks:
            if mask & ~window:
                raise ValueError("label outside the label block")
            if mask.bit_count() != half:
                raise ValueError(f"label size {mask.bit_count()}, expected {half}")

    @property
    def b(self) -> int:
        return len(self.below)

    @property
    def n(self) -> int:
        return len(self.below) + len(self.antichain) + len(self.above)

    @property
    def ground_size(self) -> int:
        return self.b + self.ell + len(self.above)


def _antichain_mask(p: Poset, elements: tuple[int, ...]) -> int:
    mask = 0
    for y in elements:
        if not 0 <= y < p.n:
            raise ValueError(f"element {y} outside poset range")
        mask |= 1 << y
    for y in elements:
        if p.succ[y] & mask:
            other = next(bit_indices(p.succ[y] & mask))
            raise NotAnAntichainError(f"elements {y} and {other} are comparable")
    return mask


def classify(p: Poset, antichain: frozenset[int] | tuple[int, ...]) -> AntichainSplit:
    """Split the poset into below / antichain / above blocks for embedding.

    Below holds every non-antichain element under some antichain element;
    everything else lands above.  Labels are the colex-least half-size
    subsets of the label window, assigned to antichain elements in
    ascending order.
    """
    members = tuple(sorted(antichain))
    a_mask = _antichain_mask(p, members)
    below = []
    above = []
    for u in range(p.n):
        if (a_mask >> u) & 1:
            continue
        if p.succ[u] & a_mask:
            below.append(u)
        else:
            above.append(u)
    # an element below A can never also sit above an antichain element,
    # else the two antichain elements would be comparable through it
    for x in below:
        assert not p.pred[x] & a_mask, "below element above the antichain"
    ell = min_ell(len(members))
    labels = colex_half_subsets(len(below), ell, len(members))
    return AntichainSplit(tuple(below), members, tuple(above), ell, labels)


def embed_with_antichain(
    p: Poset, antichain: frozenset[int] | tuple[int, ...]
) -> Embedding:
    """Embed p into the Boolean lattice on [n-a+ell] using the antichain.

    Images follow three clauses.  A below element takes the positions of
    the below elements at or under it.  An antichain element takes its
    below part, its own label, and the positions of the above elements it
    is *not* under.  An above element takes its below part, the whole
    label window, and the positions of the above elements *not* at or
    over it: missing positions, not present ones, encode the order upward,
    which keeps every antichain image inside its peers' above-blocks
    except where order demands otherwise.
    """
    split = classify(p, antichain)
    if len(split.antichain) < 2:
        raise SizeError("antichain embedding needs at least two elements")
    b = split.b
    window = ((1 << split.ell) - 1) << b
    above_base = b + split.ell

    below_bit = {u: 1 << i for i, u in enumerate(split.below)}
    succ = p.succ
    images = [0] * p.n

    def below_part(u: int) -> int:
        bits = 0
        for x, bit in below_bit.items():
            if x == u or (succ[x] >> u) & 1:
                bits |= bit
        return bits

    for u in split.below:
        images[u] = below_part(u)
    for y, label in zip(split.antichain, split.label_masks):
        bits = below_part(y) | label
        for t, z in enumerate(split.above):
            if not (succ[y] >> z) & 1:
                bits |= 1 << (above_base + t)
        images[y] = bits
    for j, z in enumerate(split.above):
        bits = below_part(z) | window
        for t, other in enumerate(split.above):
            if t != j and not (succ[z] >> other) & 1:
                bits |= 1 << (above_base + t)
        images[z] = bits
    return Embedding(split.ground_size, tuple(images))
