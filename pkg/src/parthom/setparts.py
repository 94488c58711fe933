"""Set partitions of {1..n}: canonical form, refinement order, relabeling.

The canonical form of a partition sorts each block and then sorts blocks by
their minimum, so equality and hashing are structural.  Generation with a
prescribed block count walks restricted-growth strings, which yields each
partition exactly once in a stable, documented order.
"""

from __future__ import annotations

from .partitions import check_partition


class SetPartition:
    __slots__ = ("n", "blocks", "block_of")

    def __init__(self, n: int, blocks):
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        seen: dict[int, int] = {}
        for idx, block in enumerate(canon):
            if not block:
                raise ValueError("empty block")
            for x in block:
                if x in seen:
                    raise ValueError(f"element {x} in two blocks")
                seen[x] = idx
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError(f"blocks do not cover 1..{n}: {blocks!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)
        object.__setattr__(self, "block_of", tuple(seen[i] for i in range(1, n + 1)))

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition values are immutable")

    @property
    def rank(self) -> int:
        return self.n - len(self.blocks)

    def block_type(self) -> tuple[int, ...]:
        """Block sizes as a partition of n (weakly decreasing)."""
        return check_partition(sorted((len(b) for b in self.blocks), reverse=True))

    def refines(self, other: "SetPartition") -> bool:
        """True iff every block of self lies inside a block of *other*
        (self <= other in the refinement order)."""
        if self.n != other.n:
            raise ValueError("ground sets differ")
        of = other.block_of
        for block in self.blocks:
            target = of[block[0] - 1]
            for x in block[1:]:
                if of[x - 1] != target:
                    return False
        return True

    def __eq__(self, other):
        if isinstance(other, SetPartition):
            return self.n == other.n and self.blocks == other.blocks
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __lt__(self, other):
        # element-list ordering only (rank, then canonical form); not the poset order
        return (self.rank, self.blocks) < (other.rank, other.blocks)

    def __str__(self):
        sep = "," if self.n > 9 else ""
        return "|".join(sep.join(str(x) for x in b) for b in self.blocks)

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str, n: int) -> "SetPartition":
        blocks = []
        for chunk in text.split("|"):
            if "," in chunk:
                blocks.append([int(x) for x in chunk.split(",")])
            else:
                blocks.append([int(ch) for ch in chunk])
        return cls(n, blocks)


def set_partitions(n: int, k: int):
    """Yield all partitions of {1..n} into exactly k blocks, in
    restricted-growth-string order."""
    if k < 0 or k > n:
        return
    if n == 0:
        yield SetPartition(0, [])
        return
    assignment = [0] * n

    def rec(i: int, nblocks: int):
        if i == n:
            if nblocks == k:
                blocks: list[list[int]] = [[] for _ in range(nblocks)]
                for elem, b in enumerate(assignment, start=1):
                    blocks[b].append(elem)
                yield SetPartition(n, blocks)
            return
        remaining = n - i - 1
        # join an existing block if enough elements remain to open the rest
        if nblocks + remaining >= k:
            for j in range(min(nblocks, k)):
                assignment[i] = j
                yield from rec(i + 1, nblocks)
        if nblocks < k:
            assignment[i] = nblocks
            yield from rec(i + 1, nblocks + 1)

    yield from rec(0, 0)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def canonical_permutation(mu, n: int | None = None) -> tuple[int, ...]:
    """The representative of cycle type *mu* whose cycles are filled with
    consecutive integers, longest cycle first.  Returned as the tuple of
    images of 1..n."""
    mu = check_partition(mu)
    total = sum(mu)
    if n is None:
        n = total
    if total != n:
        raise ValueError(f"cycle type {mu!r} is not a partition of {n}")
    images = list(range(1, n + 1))
    start = 1
    for part in mu:
        for i in range(start, start + part - 1):
            images[i - 1] = i + 1
        images[start + part - 2] = start
        start += part
    return tuple(images)


def act(perm: tuple[int, ...], x: SetPartition) -> SetPartition:
    """Relabel *x* through the permutation (tuple of images of 1..n)."""
    if len(perm) != x.n:
        raise ValueError("permutation degree does not match ground set")
    return SetPartition(x.n, [[perm[e - 1] for e in block] for block in x.blocks])
