"""Finite posets stored as bit-matrix strict orders.

A poset on n elements keeps one integer bitmask per element: bit v of
``succ[u]`` is set iff u is strictly below v.  The relation is always kept
transitively closed, so comparisons, downsets and closures are single
bitwise operations on machine-word-sized ints for every n this package
targets.  Elements are 0-indexed internally; ground sets of the Boolean
lattice are 1-indexed wherever they are displayed or serialized.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, FormatError, LimitError, SizeMismatchError

# Hard caps for the exponential oracles.
ENUMERATION_CAP = 6
BRUTE_FORCE_CAP = 20

_PAIR_RE = re.compile(r"^(\d+)\s*<\s*(\d+)$")


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def mask_to_text(bits: int) -> str:
    """Render a ground-set bitmask as 1-indexed elements, ``-`` if empty."""
    if bits == 0:
        return "-"
    return ",".join(str(i + 1) for i in bit_indices(bits))


def mask_from_text(text: str, m: int) -> int:
    """Parse the output of :func:`mask_to_text` back into a bitmask."""
    text = text.strip()
    if text == "-":
        return 0
    bits = 0
    for piece in text.split(","):
        try:
            element = int(piece)
        except ValueError:
            raise FormatError(f"bad ground element {piece!r}") from None
        if not 1 <= element <= m:
            raise FormatError(f"ground element {element} outside [{m}]")
        bits |= 1 << (element - 1)
    return bits


@dataclass(frozen=True)
class SubsetMask:
    """A subset of the ground set [m], held as a bitmask.

    Bit i corresponds to ground element i+1, so bits are 0-indexed while
    the displayed elements are 1-indexed.
    """

    m: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("ground set size must be non-negative")
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError(f"bits {self.bits:#x} outside ground set [{self.m}]")

    @classmethod
    def from_elements(cls, m: int, elements: Iterable[int]) -> "SubsetMask":
        """Build a mask from 1-indexed ground elements."""
        bits = 0
        for e in elements:
            if not 1 <= e <= m:
                raise ValueError(f"element {e} outside ground set [{m}]")
            bits |= 1 << (e - 1)
        return cls(m, bits)

    @classmethod
    def parse(cls, m: int, text: str) -> "SubsetMask":
        return cls(m, mask_from_text(text, m))

    def elements(self) -> tuple[int, ...]:
        """The subset as a sorted tuple of 1-indexed ground elements."""
        return tuple(i + 1 for i in bit_indices(self.bits))

    def issubset(self, other: "SubsetMask") -> bool:
        return self.bits & ~other.bits == 0

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.m and (self.bits >> (element - 1)) & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return mask_to_text(self.bits)


@dataclass(frozen=True)
class Embedding:
    """Images of poset elements inside the Boolean lattice on [m].

    ``masks[j]`` is the bitmask of the image of element j.  The embedding
    is order-faithful for a companion poset when u <= v iff
    masks[u] is a subset of masks[v]; :func:`check_embedding` verifies
    that together with injectivity.
    """

    m: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        for j, bits in enumerate(self.masks):
            if bits < 0 or bits >> self.m:
                raise ValueError(f"image {j} does not fit ground set [{self.m}]")

    @property
    def n(self) -> int:
        return len(self.masks)

    def image(self, j: int) -> SubsetMask:
        return SubsetMask(self.m, self.masks[j])

    @property
    def images(self) -> tuple[SubsetMask, ...]:
        return tuple(SubsetMask(self.m, bits) for bits in self.masks)


@dataclass(frozen=True)
class EmbeddingCheck:
    """Verdict of an embedding check, with a witness pair on failure."""

    ok: bool
    witness: tuple[int, int] | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Poset:
    """A strict partial order on n elements, stored transitively closed.

    ``succ[u]`` has bit v set iff u is strictly below v.  Construction
    validates irreflexivity, antisymmetry and transitive closedness, so a
    Poset value can always be trusted downstream.
    """

    n: int
    succ: tuple[int, ...]

    def __post_init__(self) -> None:
        n, succ = self.n, self.succ
        if n < 0:
            raise ValueError("element count must be non-negative")
        if len(succ) != n:
            raise ValueError("need exactly one successor mask per element")
        full = (1 << n) - 1
        for u, row in enumerate(succ):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} mentions elements outside range")
            if (row >> u) & 1:
                raise ValueError(f"irreflexivity violated at element {u}")
            rest = row
            while rest:
                lsb = rest & -rest
                v = lsb.bit_length() - 1
                rest ^= lsb
                if (succ[v] >> u) & 1:
                    raise ValueError(f"antisymmetry violated on ({u}, {v})")
                if succ[v] & ~row:
                    raise ValueError(f"relation not transitively closed at ({u}, {v})")

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Transitively close generator pairs (u below v) into a poset.

        Pairs need not be cover relations and duplicates are tolerated.
        Raises CycleError if the closure would put an element below itself.
        """
        direct = [0] * n
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"pair ({u}, {v}) outside element range")
            if u == v:
                raise CycleError(f"element {u} cannot be strictly below itself")
            direct[u] |= 1 << v
        return cls(n, tuple(transitive_closure(n, direct)))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        """The total order 0 < 1 < ... < n-1."""
        full = (1 << n) - 1
        return cls(n, tuple(full ^ ((1 << (u + 1)) - 1) for u in range(n)))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        """n pairwise incomparable elements."""
        return cls(n, (0,) * n)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        """Predecessor masks: bit u of pred[v] set iff u is strictly below v."""
        pred = [0] * self.n
        for u, row in enumerate(self.succ):
            for v in bit_indices(row):
                pred[v] |= 1 << u
        return tuple(pred)

    @cached_property
    def covers(self) -> tuple[int, ...]:
        """Cover masks: successors not reachable through an intermediate element."""
        out = []
        for row in self.succ:
            via = 0
            for v in bit_indices(row):
                via |= self.succ[v]
            out.append(row & ~via)
        return tuple(out)

    def less(self, u: int, v: int) -> bool:
        """Strict comparison u < v."""
        return (self.succ[u] >> v) & 1 == 1

    def leq(self, u: int, v: int) -> bool:
        """Reflexive comparison u <= v."""
        return u == v or (self.succ[u] >> v) & 1 == 1

    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        """The strict order as a dense boolean matrix (testing convenience)."""
        return tuple(
            tuple((row >> v) & 1 == 1 for v in range(self.n)) for row in self.succ
        )


def transitive_closure(n: int, direct: Sequence[int]) -> list[int]:
    """Close direct successor masks under transitivity via DFS.

    Raises CycleError on the first back edge, i.e. as soon as the closure
    would force some u strictly below itself.
    """
    reach = [0] * n
    state = bytearray(n)  # 0 unvisited, 1 on the DFS stack, 2 finished
    for root in range(n):
        if state[root]:
            continue
        state[root] = 1
        stack = [(root, direct[root])]
        while stack:
            u, pending = stack[-1]
            if pending:
                lsb = pending & -pending
                v = lsb.bit_length() - 1
                stack[-1] = (u, pending ^ lsb)
                if state[v] == 1:
                    raise CycleError(f"cycle through element {v}")
                if state[v] == 0:
                    state[v] = 1
                    stack.append((v, direct[v]))
            else:
                stack.pop()
                row = direct[u]
                for v in bit_indices(direct[u]):
                    row |= reach[v]
                reach[u] = row
                state[u] = 2
    return reach


def leq(p: Poset, u: int, v: int) -> bool:
    """Reflexive comparison u <= v in p."""
    return p.leq(u, v)


def folklore_embed(p: Poset) -> Embedding:
    """Embed p into the full Boolean lattice on [n] by downset indices.

    Element j maps to the set of 1-indexed positions of the elements at or
    below j; containment of images then mirrors the order exactly.
    """
    pred = p.pred
    return Embedding(p.n, tuple(pred[j] | (1 << j) for j in range(p.n)))


def check_embedding(p: Poset, emb: Embedding) -> EmbeddingCheck:
    """Verify that emb is an order-faithful injective embedding of p.

    Checks image distinctness and, for every ordered pair (u, v) with
    u != v, the biconditional "u <= v iff image(u) contained in image(v)";
    incomparable pairs therefore must fail containment both ways.  Returns
    a verdict carrying the first offending pair.
    """
    if emb.n != p.n:
        raise SizeMismatchError(f"embedding has {emb.n} images for {p.n} elements")
    masks = emb.masks
    seen: dict[int, int] = {}
    for j, bits in enumerate(masks):
        if bits in seen:
            return EmbeddingCheck(False, (seen[bits], j), "duplicate images")
        seen[bits] = j
    neg = [~bits for bits in masks]
    n = p.n
    for u in range(n):
        mu = masks[u]
        row = p.succ[u] | (1 << u)
        for v in range(n):
            contained = mu & neg[v] == 0
            if contained != ((row >> v) & 1 == 1):
                reason = "containment without order" if contained else "order without containment"
                return EmbeddingCheck(False, (u, v), reason)
    return EmbeddingCheck(True)


def enumerate_posets(n: int, *, max_n: int = ENUMERATION_CAP) -> Iterator[Poset]:
    """Yield every labeled poset on n elements exactly once.

    Elements are added one at a time; for each new element every valid
    (downset, upset) pair against the already-built poset is tried.  Each
    labeled poset arises from exactly one choice sequence because its
    restriction to the first k labels determines step k, so no
    deduplication is needed.  Guarded because counts explode (4231 posets
    at n=5, 130023 at n=6).
    """
    if n < 0:
        raise ValueError("element count must be non-negative")
    if n > max_n:
        raise LimitError(f"poset enumeration capped at n={max_n}, got n={n}")
    return _extend_posets(n, [], [])


def _extend_posets(n: int, succ: list[int], pred: list[int]) -> Iterator[Poset]:
    k = len(succ)
    if k == n:
        yield Poset(n, tuple(succ))
        return
    universe = (1 << k) - 1
    for down in range(1 << k):
        # down must be closed downward, otherwise closure would grow it
        closure = 0
        for v in bit_indices(down):
            closure |= pred[v]
        if closure & ~down:
            continue
        # upset candidates must already lie above every chosen down element
        allowed = universe & ~down
        for v in bit_indices(down):
            allowed &= succ[v]
        up = allowed
        while True:
            closure = 0
            for v in bit_indices(up):
                closure |= succ[v]
            if not closure & ~up:
                bit = 1 << k
                new_succ = [succ[i] | bit if (down >> i) & 1 else succ[i] for i in range(k)]
                new_succ.append(up)
                new_pred = [pred[i] | bit if (up >> i) & 1 else pred[i] for i in range(k)]
                new_pred.append(down)
                yield from _extend_posets(n, new_succ, new_pred)
            if up == 0:
                break
            up = (up - 1) & allowed


def random_poset(n: int, edge_prob: float, seed: int) -> Poset:
    """Sample a random poset, deterministically for a fixed seed.

    Draws a uniformly random linear order on the elements, keeps each
    forward arc independently with probability edge_prob, and closes the
    resulting DAG transitively.
    """
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    direct = [0] * n
    for i in range(n):
        row = 0
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                row |= 1 << order[j]
        direct[order[i]] = row
    return Poset(n, tuple(transitive_closure(n, direct)))


def max_antichain_bruteforce(p: Poset, *, max_n: int = BRUTE_FORCE_CAP) -> frozenset[int]:
    """Exponential maximum-antichain oracle (validation only).

    Branch-and-bound maximum independent set in the comparability graph;
    any maximum-cardinality antichain may be returned, the size is the
    contract.
    """
    if p.n > max_n:
        raise LimitError(f"brute-force antichain capped at n={max_n}, got n={p.n}")
    pred = p.pred
    comp = [p.succ[u] | pred[u] for u in range(p.n)]
    _, best = _max_independent((1 << p.n) - 1, comp)
    return frozenset(bit_indices(best))


def _max_independent(candidates: int, comp: list[int]) -> tuple[int, int]:
    if candidates == 0:
        return 0, 0
    lsb = candidates & -candidates
    v = lsb.bit_length() - 1
    rest = candidates ^ lsb
    if comp[v] & rest == 0:
        # v conflicts with nothing left, taking it is always optimal
        size, mask = _max_independent(rest, comp)
        return size + 1, mask | lsb
    size_in, mask_in = _max_independent(rest & ~comp[v], comp)
    size_out, mask_out = _max_independent(rest, comp)
    if size_in + 1 >= size_out:
        return size_in + 1, mask_in | lsb
    return size_out, mask_out


def write_poset(p: Poset) -> str:
    """Serialize a poset: first line n, then one 'u < v' line per cover pair."""
    lines = [str(p.n)]
    for u in range(p.n):
        for v in bit_indices(p.covers[u]):
            lines.append(f"{u} < {v}")
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    """Parse the poset text format; '#' starts a comment, blank lines skipped."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty poset file")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"expected element count on first line, got {lines[0]!r}") from None
    if n < 0:
        raise FormatError("element count must be non-negative")
    pairs = []
    for line in lines[1:]:
        match = _PAIR_RE.match(line)
        if not match:
            raise FormatError(f"expected 'u < v', got {line!r}")
        pairs.append((int(match.group(1)), int(match.group(2))))
    try:
        return Poset.from_relations(n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
