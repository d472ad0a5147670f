"""Independent oracles and generators for the test suite.

Everything here deliberately avoids the package's internal representations
where it can: embeddings are re-checked with frozensets, poset enumeration
re-derives the counts by filtering pair orientations, and partition counts
come from a direct table.  Agreement between these and the library is the
point, so none of this should be "simplified" to call back into the code
under test.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from posetcube import Embedding, Poset
from posetcube.poset import bit_indices, transitive_closure


def enumerate_posets_filter(n: int):
    """Labeled posets on n elements by orientation filtering (n <= 4).

    Every unordered pair independently gets one of three states (below,
    above, incomparable); keep exactly the transitive outcomes.  Slower
    than the library enumerator but shares no code with it.
    """
    pairs = list(combinations(range(n), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        less = set()
        for (u, v), state in zip(pairs, states):
            if state == 1:
                less.add((u, v))
            elif state == 2:
                less.add((v, u))
        if any(
            (u, v) in less and (v, w) in less and (u, w) not in less
            for u in range(n)
            for v in range(n)
            for w in range(n)
        ):
            continue
        succ = [0] * n
        for u, v in less:
            succ[u] |= 1 << v
        yield Poset(n, tuple(succ))


def check_embedding_naive(p: Poset, emb: Embedding) -> bool:
    """Re-verify an embedding with frozensets and an explicit double loop."""
    images = [frozenset(bit_indices(bits)) for bits in emb.masks]
    if len(set(images)) != len(images):
        return False
    for u in range(p.n):
        for v in range(p.n):
            if (images[u] <= images[v]) != p.leq(u, v):
                return False
    return True


def has_augmenting_path(n: int, succ, mate_left, mate_right) -> bool:
    """One augmenting-path sweep over a claimed maximum matching."""

    def try_augment(u: int, visited: set[int]) -> bool:
        for v in bit_indices(succ[u]):
            if v in visited:
                continue
            visited.add(v)
            w = mate_right[v]
            if w == -1 or try_augment(w, visited):
                return True
        return False

    return any(
        mate_left[u] == -1 and try_augment(u, set()) for u in range(n)
    )


def partition_count_table(n: int, max_parts: int) -> int:
    """Partitions of n into at most max_parts parts, by the standard DP."""
    table = [[0] * (max_parts + 1) for _ in range(n + 1)]
    for k in range(max_parts + 1):
        table[0][k] = 1
    for total in range(1, n + 1):
        for k in range(1, max_parts + 1):
            table[total][k] = table[total][k - 1] + (
                table[total - k][k] if total >= k else 0
            )
    return table[n][max_parts]


def is_prefix_union_naive(elements: set[int], parts) -> bool:
    """Set-based re-statement of the per-cell prefix condition."""
    start = 1
    for part in parts:
        cell = list(range(start, start + part))
        got = elements.intersection(cell)
        if got and got != set(cell[: len(got)]):
            return False
        start += part
    return True


def naive_chain_family(n: int, a: int, all_partitions) -> set[int]:
    """Materialize the family by filtering all 2^n subsets (small n only)."""
    family = set()
    for bits in range(1 << n):
        elements = {i + 1 for i in bit_indices(bits)}
        if any(is_prefix_union_naive(elements, c.parts) for c in all_partitions):
            family.add(bits)
    return family


def planted_poset(n: int, seed: int) -> tuple[Poset, frozenset[int]]:
    """A random poset with a known antichain of size at least ceil(n/3).

    Elements split into three shuffled groups; arcs only ever leave the
    middle group upward or enter it from below, so the middle group stays
    pairwise incomparable after closure.
    """
    rng = random.Random(seed)
    size = min(n - 2, -(-n // 3) + rng.randrange(0, n // 4 + 1))
    labels = list(range(n))
    rng.shuffle(labels)
    mid = labels[:size]
    rest = labels[size:]
    cut = rng.randrange(len(rest) + 1)
    lower, upper = rest[:cut], rest[cut:]
    q = rng.uniform(0.05, 0.5)
    direct = [0] * n
    for x in lower:
        for y in mid + upper:
            if rng.random() < q:
                direct[x] |= 1 << y
    for y in mid:
        for z in upper:
            if rng.random() < q:
                direct[y] |= 1 << z
    return Poset(n, tuple(transitive_closure(n, direct))), frozenset(mid)
