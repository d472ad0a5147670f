"""Minimum chain covers and maximum antichains.

A strict order on n elements induces a bipartite graph on two copies of
the element set with an edge (u, v) whenever u < v.  A maximum matching
there merges elements into paths, giving a partition into n - (matching
size) chains, which is optimal; the dual vertex cover yields a maximum
antichain of exactly that many elements.  Matching is Hopcroft-Karp, so
the whole decomposition costs O(E * sqrt(n)) with bitmask adjacency.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import InfeasibleError
from .poset import Poset, bit_indices

NO_MATE = -1


@dataclass(frozen=True)
class ChainDecomposition:
    """A partition of the elements of a poset into chains.

    Each chain is a tuple of elements in increasing poset order.  Chains
    are listed longest first, ties broken by smallest element, so equal
    inputs decompose identically.
    """

    poset: Poset
    chains: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = 0
        for chain in self.chains:
            for u in chain:
                if (seen >> u) & 1:
                    raise ValueError(f"element {u} appears in two chains")
                seen |= 1 << u
            for a, b in zip(chain, chain[1:]):
                if not self.poset.less(a, b):
                    raise ValueError(f"chain pair ({a}, {b}) not ordered")
        if seen != (1 << self.poset.n) - 1:
            raise ValueError("chains do not cover every element")

    @property
    def width(self) -> int:
        return len(self.chains)

    @cached_property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(chain) for chain in self.chains)


def _hopcroft_karp(n: int, succ: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Maximum matching in the split bipartite graph of a strict order.

    Left copy u may match right copy v whenever u < v.  Returns the mate
    arrays (NO_MATE where unmatched): mate_left[u] = v means the edge
    (u, v) is in the matching.
    """
    mate_left = [NO_MATE] * n
    mate_right = [NO_MATE] * n
    inf = n + 1
    dist = [0] * n

    def bfs() -> bool:
        queue = deque()
        for u in range(n):
            if mate_left[u] == NO_MATE:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in bit_indices(succ[u]):
                w = mate_right[v]
                if w == NO_MATE:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in bit_indices(succ[u]):
            w = mate_right[v]
            if w == NO_MATE or (dist[w] == dist[u] + 1 and dfs(w)):
                mate_left[u] = v
                mate_right[v] = u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in range(n):
            if mate_left[u] == NO_MATE:
                dfs(u)
    return mate_left, mate_right


def _sorted_chains(chains: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    chains.sort(key=lambda chain: (-len(chain), chain[0]))
    return tuple(tuple(chain) for chain in chains)


def min_chain_decomposition(p: Poset) -> ChainDecomposition:
    """Partition p into the fewest possible chains.

    The number of chains always equals the maximum antichain size.
    """
    mate_left, mate_right = _hopcroft_karp(p.n, p.succ)
    chains = []
    for start in range(p.n):
        if mate_right[start] != NO_MATE:
            continue
        chain = [start]
        while mate_left[chain[-1]] != NO_MATE:
            chain.append(mate_left[chain[-1]])
        chains.append(chain)
    return ChainDecomposition(p, _sorted_chains(chains))


def max_antichain(p: Poset) -> frozenset[int]:
    """A maximum antichain of p, via the matching dual.

    Alternating reachability from unmatched left vertices gives a minimum
    vertex cover; the elements kept out of the cover on both sides are
    pairwise incomparable and there are exactly width(p) of them.
    """
    n = p.n
    mate_left, mate_right = _hopcroft_karp(n, p.succ)
    reach_left = 0
    queue = deque()
    for u in range(n):
        if mate_left[u] == NO_MATE:
            reach_left |= 1 << u
            queue.append(u)
    reach_right = 0
    while queue:
        u = queue.popleft()
        for v in bit_indices(p.succ[u] & ~reach_right):
            reach_right |= 1 << v
            w = mate_right[v]
            if w != NO_MATE and not (reach_left >> w) & 1:
                reach_left |= 1 << w
                queue.append(w)
    # cover = (left not reached) + (right reached); the antichain is the rest
    antichain = reach_left & ~reach_right
    return frozenset(bit_indices(antichain))


def decomposition_into_exactly(p: Poset, a: int) -> ChainDecomposition:
    """Decompose p into at most a chains, failing if the width exceeds a.

    A minimum decomposition is returned unchanged when it already fits;
    the count is never padded upward.
    """
    dec = min_chain_decomposition(p)
    if dec.width > a:
        raise InfeasibleError(
            f"width {dec.width} exceeds requested chain count {a}"
        )
    return dec
