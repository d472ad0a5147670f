"""The small universal family and its embedding dispatcher.

For n-element posets the family over [n] unions two parts: the per-cell
prefix families for partitions into at most a parts, which absorb every
poset of width at most a, and the full Boolean lattice over the first
m = n - a + ell ground elements, which absorbs every poset containing an
a-element antichain via the label construction.  With a about n/3 the
total count stays near 2^(2n/3), far below the 2^n of the naive downset
embedding, while still containing every n-element poset as an induced
subfamily.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .antichain import embed_with_antichain, min_ell
from .chainfamily import (
    DEFAULT_MAX_SETS,
    SetFamily,
    chain_family,
    decomposition_partition,
    embed_bounded_antichain,
    is_cell_prefix_union,
    member_of_chain_family,
    partition_count,
)
from .dilworth import max_antichain
from .errors import (
    FormatError,
    LimitError,
    MemoryLimitError,
    SizeMismatchError,
    VerificationError,
)
from .poset import (
    Embedding,
    Poset,
    SubsetMask,
    check_embedding,
    enumerate_posets,
    folklore_embed,
    mask_from_text,
    mask_to_text,
)

VERIFY_CAP = 5

BRANCH_CHAIN = "chain-cover"
BRANCH_ANTICHAIN = "antichain-labels"
BRANCH_FOLKLORE = "folklore"

_HEADER_RE = re.compile(r"^n=(\d+)\s+m=(\d+)$")
_IMAGE_RE = re.compile(r"^(\d+):\s*(.+)$")


def default_antichain_budget(n: int) -> int:
    """The chain/antichain split parameter, n/3 rounded up."""
    return -(-n // 3)


@dataclass(frozen=True)
class UniversalFamily:
    """A family of subsets of [n] containing every n-element poset.

    The explicit part is the chain family over [n] (None when it would
    exceed the materialization cap, in which case membership falls back
    to the partition-scan predicate).  The implicit part is the full
    lattice over [m] and is never materialized.  For a < 2 the label
    construction is unavailable and the family degrades to the whole of
    2^[n], encoded by m = n.
    """

    n: int
    a: int
    ell: int
    m: int
    explicit: SetFamily | None

    @property
    def materialized(self) -> bool:
        return self.explicit is not None


def build_universal(
    n: int, a: int | None = None, *, max_sets: int = DEFAULT_MAX_SETS
) -> UniversalFamily:
    """Assemble the universal family for n-element posets."""
    if n < 1:
        raise ValueError("need at least one element")
    if a is None:
        a = default_antichain_budget(n)
    if not 1 <= a <= n:
        raise ValueError(f"antichain budget {a} outside [1, {n}]")
    ell = min_ell(a)
    m = n - a + ell if a >= 2 else n
    try:
        explicit = chain_family(n, a, max_sets=max_sets)
    except MemoryLimitError:
        explicit = None
    return UniversalFamily(n, a, ell, m, explicit)


def membership(u: UniversalFamily, t: SubsetMask) -> bool:
    """Is t a member of the family (either part)?"""
    if t.m != u.n:
        raise SizeMismatchError(f"mask over [{t.m}] tested against family over [{u.n}]")
    if t.bits >> u.m == 0:
        return True
    if u.explicit is not None:
        return u.explicit.contains_mask(t.bits)
    return member_of_chain_family(t, u.n, u.a)


def cardinality(u: UniversalFamily) -> int:
    """Exact family size: explicit part plus the lattice part, overlap once."""
    if u.explicit is None:
        raise LimitError("explicit part is predicate-only, exact count unavailable")
    return len(u.explicit) + (1 << u.m) - u.explicit.count_within(u.m)


def size_bound(n: int, a: int | None = None) -> int:
    """Upper bound p(n)*a*(ceil(n/a)+1)^a + 2^(n-a+ell) on the family size.

    Exact integer arithmetic; the second term dominates for large n and
    carries the 2n/3 exponent once a is about n/3.
    """
    if n < 1:
        raise ValueError("need at least one element")
    if a is None:
        a = default_antichain_budget(n)
    if not 1 <= a <= n:
        raise ValueError(f"antichain budget {a} outside [1, {n}]")
    chain_term = partition_count(n) * a * (-(-n // a) + 1) ** a
    return chain_term + (1 << (n - a + min_ell(a)))


def embed_with_branch(u: UniversalFamily, p: Poset) -> tuple[Embedding, str]:
    """Embed p into the family, returning the dispatch branch taken.

    Posets of width at most a go through the chain cover; the rest donate
    an a-element antichain (the smallest-indexed elements of a maximum
    one) to the label construction, whose images live inside [m].  The
    result is verified before being returned: order-faithfulness via
    check_embedding and family membership of every image via a branch
    witness, so a returned embedding is always a valid certificate.
    """
    if p.n != u.n:
        raise SizeMismatchError(f"poset has {p.n} elements, family expects {u.n}")
    if u.a < 2:
        emb, branch = folklore_embed(p), BRANCH_FOLKLORE
    else:
        antichain = max_antichain(p)
        if len(antichain) <= u.a:
            emb, branch = embed_bounded_antichain(p, u.a), BRANCH_CHAIN
        else:
            chosen = tuple(sorted(antichain))[: u.a]
            inner = embed_with_antichain(p, chosen)
            if inner.m != u.m:
                raise VerificationError(
                    f"label construction used ground [{inner.m}], expected [{u.m}]"
                )
            emb, branch = Embedding(u.n, inner.masks), BRANCH_ANTICHAIN
    _verify(u, p, emb, branch)
    return emb, branch


def embed(u: UniversalFamily, p: Poset) -> Embedding:
    """Embed p into the family; the result is a verified certificate."""
    return embed_with_branch(u, p)[0]


def _verify(u: UniversalFamily, p: Poset, emb: Embedding, branch: str) -> None:
    """Check order-faithfulness and per-image membership, raising on failure.

    Membership is established through a branch-specific witness instead of
    the general predicate, so verification works at any n: chain-cover
    images are per-cell prefixes of the cover's own partition, and the
    other branches produce subsets of [m].
    """
    verdict = check_embedding(p, emb)
    if not verdict:
        raise VerificationError(
            f"embedding not order-faithful at pair {verdict.witness}: {verdict.reason}"
        )
    if branch == BRANCH_CHAIN:
        c = decomposition_partition(p, u.a)
        for j, bits in enumerate(emb.masks):
            if not is_cell_prefix_union(bits, c):
                raise VerificationError(f"image of element {j} escapes the chain family")
    else:
        for j, bits in enumerate(emb.masks):
            if bits >> u.m:
                raise VerificationError(f"image of element {j} escapes the lattice part")


@dataclass(frozen=True)
class UniversalityReport:
    """Outcome of exhaustively embedding every labeled poset on n elements."""

    n: int
    total: int
    passed: int
    chain_cover: int
    antichain_labels: int
    folklore: int

    @property
    def failed(self) -> int:
        return self.total - self.passed


def verify_universality(n: int, *, max_n: int = VERIFY_CAP) -> UniversalityReport:
    """Embed every labeled poset on n elements and tally the outcomes."""
    if n > max_n:
        raise LimitError(f"exhaustive verification capped at n={max_n}, got n={n}")
    u = build_universal(n)
    total = passed = 0
    branches = {BRANCH_CHAIN: 0, BRANCH_ANTICHAIN: 0, BRANCH_FOLKLORE: 0}
    for p in enumerate_posets(n):
        total += 1
        try:
            _, branch = embed_with_branch(u, p)
        except VerificationError:
            continue
        passed += 1
        branches[branch] += 1
    return UniversalityReport(
        n,
        total,
        passed,
        branches[BRANCH_CHAIN],
        branches[BRANCH_ANTICHAIN],
        branches[BRANCH_FOLKLORE],
    )


def write_embedding(emb: Embedding) -> str:
    """Serialize an embedding: header 'n=<n> m=<m>', then 'j: elements'."""
    lines = [f"n={emb.n} m={emb.m}"]
    for j, bits in enumerate(emb.masks):
        lines.append(f"{j}: {mask_to_text(bits)}")
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> Embedding:
    """Parse the embedding text format back into an Embedding."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty embedding file")
    header = _HEADER_RE.match(lines[0])
    if not header:
        raise FormatError(f"bad embedding header {lines[0]!r}")
    n, m = int(header.group(1)), int(header.group(2))
    body = lines[1:]
    if len(body) != n:
        raise FormatError(f"header promises {n} images, file has {len(body)}")
    masks = []
    for j, line in enumerate(body):
        match = _IMAGE_RE.match(line)
        if not match or int(match.group(1)) != j:
            raise FormatError(f"expected image line for element {j}, got {line!r}")
        masks.append(mask_from_text(match.group(2), m))
    try:
        return Embedding(m, tuple(masks))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
