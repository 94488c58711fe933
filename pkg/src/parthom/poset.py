"""Subposets of the set-partition lattice and their chains.

A :class:`PosetView` materializes the proper part (never the adjoined
bounds) of one of the named families, grouped by rank:

* ``full`` -- all of the proper part, ranks 1..n-2;
* ``ranks:S`` -- the rank-selected subposet for S inside [1, n-2];
* ``qnk:k`` -- delete the modular elements (unique non-singleton block)
  whose non-singleton block has size exactly k;
* ``pnk:k`` -- delete modular elements with non-singleton block size
  2..k, i.e. the intersection of the qnk views;
* ``le:k`` -- partitions with every block of size at most k;
* ``ne:k`` -- partitions with no block of size exactly k;
* ``even`` -- partitions with an even number of blocks (even ground size),
  the alternate-rank selection 2, 4, ...;
* ``even-top:k`` -- the top k nontrivial ranks of ``even``.

Elements are generated rank by rank with the predicate applied during
generation, so only the selected ranks are ever materialized.  Views are
immutable once built; chain enumeration and fixed-point counting are pure
functions of a view.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import FeasibilityError
from .partitions import check_partition
from .setparts import SetPartition, act, canonical_permutation, set_partitions

#: largest ground set for which views will materialize elements
MAX_GROUND = 10

#: refuse chain enumeration (not counting) past this many maximal chains
MAX_CHAINS = 1_000_000


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Number of set partitions of an n-set with k blocks."""
    if n < 0 or k < 0 or k > n:
        return 0 if n >= 0 and 0 <= k else _stirling_domain_error(n, k)
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _stirling_domain_error(n, k):
    raise ValueError(f"stirling2 needs 0 <= k <= n, got n={n}, k={k}")


def _check_ground(n: int) -> None:
    if not 2 <= n <= MAX_GROUND:
        raise FeasibilityError(f"ground set size {n} outside supported range 2..{MAX_GROUND}")


class PosetView:
    """An induced subposet of the partition lattice, elements cached by rank."""

    __slots__ = ("n", "spec", "rank_selected", "_by_rank", "_elements", "_index")

    def __init__(self, n: int, spec: str, candidate_ranks, predicate=None, rank_selected=False):
        _check_ground(n)
        by_rank: dict[int, tuple[SetPartition, ...]] = {}
        for r in sorted(candidate_ranks):
            if not 1 <= r <= n - 2:
                raise ValueError(f"rank {r} outside the nontrivial range [1, {n - 2}]")
            elems = tuple(
                x for x in set_partitions(n, n - r) if predicate is None or predicate(x)
            )
            if elems:
                by_rank[r] = elems
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "rank_selected", rank_selected)
        object.__setattr__(self, "_by_rank", by_rank)
        flat = tuple(x for r in sorted(by_rank) for x in by_rank[r])
        object.__setattr__(self, "_elements", flat)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(flat)})

    def __setattr__(self, name, value):
        raise AttributeError("PosetView is immutable")

    # -- element access -------------------------------------------------------

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(sorted(self._by_rank))

    def elements_by_rank(self) -> dict[int, tuple[SetPartition, ...]]:
        return dict(self._by_rank)

    def at_rank(self, r: int) -> tuple[SetPartition, ...]:
        return self._by_rank.get(r, ())

    def elements(self) -> tuple[SetPartition, ...]:
        return self._elements

    def __len__(self):
        return len(self._elements)

    def __contains__(self, x: SetPartition):
        return x in self._index

    def describe(self) -> str:
        return f"{self.spec},n={self.n}"

    def __repr__(self):
        sizes = {r: len(v) for r, v in self._by_rank.items()}
        return f"PosetView({self.describe()}, rank sizes {sizes})"

    # -- order structure --------------------------------------------------------

    def fixed_by(self, perm) -> dict[int, tuple[SetPartition, ...]]:
        """Elements fixed (as partitions) by the permutation, by rank."""
        out = {}
        for r, elems in self._by_rank.items():
            fixed = tuple(x for x in elems if act(perm, x) == x)
            if fixed:
                out[r] = fixed
        return out

    def covers(self) -> dict[SetPartition, tuple[SetPartition, ...]]:
        """Upward covers inside the view (no view element strictly between)."""
        ranks = self.ranks
        covers: dict[SetPartition, list[SetPartition]] = {x: [] for x in self._elements}
        for i, r in enumerate(ranks):
            for x in self._by_rank[r]:
                for r2 in ranks[i + 1 :]:
                    for y in self._by_rank[r2]:
                        if not x.refines(y):
                            continue
                        between = False
                        for rm in ranks:
                            if not r < rm < r2:
                                continue
                            for z in self._by_rank[rm]:
                                if x.refines(z) and z.refines(y):
                                    between = True
                                    break
                            if between:
                                break
                        if not between:
                            covers[x].append(y)
        return {x: tuple(v) for x, v in covers.items()}

    def minimal_elements(self) -> tuple[SetPartition, ...]:
        out = []
        for x in self._elements:
            if not any(y.refines(x) for y in self._elements if y is not x and y.rank < x.rank):
                out.append(x)
        return tuple(out)

    def maximal_elements(self) -> tuple[SetPartition, ...]:
        out = []
        for x in self._elements:
            if not any(x.refines(y) for y in self._elements if y is not x and y.rank > x.rank):
                out.append(x)
        return tuple(out)

    # -- chains -----------------------------------------------------------------

    def maximal_chains(self) -> list[tuple[SetPartition, ...]]:
        """All maximal chains of the view; the empty view has one empty chain."""
        if not self._elements:
            return [()]
        if self.rank_selected:
            return self._maximal_chains_rank_selected()
        return self._maximal_chains_general()

    def _maximal_chains_rank_selected(self):
        ranks = self.ranks
        layers = [self._by_rank[r] for r in ranks]
        estimate = 1
        for layer in layers:
            estimate *= len(layer)
        # layer-size product is a cheap upper bound; count exactly only when
        # that bound already trips the cap
        if estimate > MAX_CHAINS and self.count_maximal_chains() > MAX_CHAINS:
            raise FeasibilityError(f"too many maximal chains in {self.describe()}")
        chains: list[tuple[SetPartition, ...]] = []

        def extend(prefix: list[SetPartition], depth: int):
            if depth == len(layers):
                chains.append(tuple(prefix))
                return
            last = prefix[-1] if prefix else None
            for y in layers[depth]:
                if last is None or last.refines(y):
                    prefix.append(y)
                    extend(prefix, depth + 1)
                    prefix.pop()

        extend([], 0)
        return chains

    def _maximal_chains_general(self):
        covers = self.covers()
        minimal = set(self.minimal_elements())
        maximal = set(self.maximal_elements())
        chains = []

        def extend(prefix: list[SetPartition]):
            x = prefix[-1]
            if x in maximal:
                chains.append(tuple(prefix))
            for y in covers[x]:
                prefix.append(y)
                extend(prefix)
                prefix.pop()

        for x in self._elements:
            if x in minimal:
                extend([x])
        return chains

    def count_maximal_chains(self) -> int:
        """Number of maximal chains, by dynamic programming over ranks for
        rank-selected views and over covers otherwise."""
        if not self._elements:
            return 1
        if self.rank_selected:
            ranks = self.ranks
            counts = {x: 1 for x in self._by_rank[ranks[0]]}
            for r in ranks[1:]:
                nxt = {}
                for y in self._by_rank[r]:
                    total = sum(c for x, c in counts.items() if x.refines(y))
                    if total:
                        nxt[y] = total
                if not nxt:
                    return 0
                counts = nxt
            return sum(counts.values())
        return len(self._maximal_chains_general())


# ---------------------------------------------------------------------------
# view families

def _is_modular(x: SetPartition) -> int | None:
    """Size of the unique non-singleton block, or None if not modular."""
    big = [len(b) for b in x.blocks if len(b) > 1]
    return big[0] if len(big) == 1 else None


def full_view(n: int) -> PosetView:
    return PosetView(n, "full", range(1, n - 1), rank_selected=True)


def rank_selected_view(n: int, ranks) -> PosetView:
    ranks = tuple(sorted(set(int(r) for r in ranks)))
    for r in ranks:
        if not 1 <= r <= n - 2:
            raise ValueError(f"rank {r} outside [1, {n - 2}]")
    spec = "ranks:" + ",".join(map(str, ranks)) if ranks else "ranks:"
    return PosetView(n, spec, ranks, rank_selected=True)


def modular_deleted_view(n: int, k: int) -> PosetView:
    """Delete the modular elements whose non-singleton block has size k."""
    if not 2 <= k <= n - 1:
        raise ValueError(f"need 2 <= k <= n-1, got k={k}, n={n}")
    return PosetView(
        n, f"qnk:k={k}", range(1, n - 1), predicate=lambda x: _is_modular(x) != k
    )


def modular_deleted_up_to(n: int, k: int) -> PosetView:
    """Delete every modular element with non-singleton block size 2..k."""
    if not 2 <= k <= n - 1:
        raise ValueError(f"need 2 <= k <= n-1, got k={k}, n={n}")

    def keep(x: SetPartition) -> bool:
        size = _is_modular(x)
        return size is None or not 2 <= size <= k

    return PosetView(n, f"pnk:k={k}", range(1, n - 1), predicate=keep)


def max_block_size_view(n: int, k: int) -> PosetView:
    """Partitions all of whose blocks have size at most k."""
    if not 2 <= k <= n - 1:
        raise ValueError(f"need 2 <= k <= n-1, got k={k}, n={n}")
    return PosetView(
        n, f"le:k={k}", range(1, n - 1),
        predicate=lambda x: max(len(b) for b in x.blocks) <= k,
    )


def no_block_size_view(n: int, k: int) -> PosetView:
    """Partitions with no block of size exactly k."""
    if not 2 <= k <= n - 1:
        raise ValueError(f"need 2 <= k <= n-1, got k={k}, n={n}")
    return PosetView(
        n, f"ne:k={k}", range(1, n - 1),
        predicate=lambda x: all(len(b) != k for b in x.blocks),
    )


def even_block_view(n: int) -> PosetView:
    """Partitions with an even number of blocks: ranks n-2, n-4, ... down to 2."""
    if n % 2 or n < 4:
        raise ValueError(f"even-block view needs an even ground size >= 4, got {n}")
    return PosetView(n, "even", range(2, n - 1, 2), rank_selected=True)


def even_block_top_view(n: int, k: int) -> PosetView:
    """Top k nontrivial ranks of the even-block view."""
    if n % 2 or n < 4:
        raise ValueError(f"even-block view needs an even ground size >= 4, got {n}")
    if not 1 <= k <= n // 2 - 1:
        raise ValueError(f"need 1 <= k <= n/2-1, got k={k}")
    ranks = range(n - 2 * k, n - 1, 2)
    return PosetView(n, f"even-top:k={k}", ranks, rank_selected=True)


_FAMILIES = {
    "full": lambda n, arg: full_view(n),
    "qnk": lambda n, arg: modular_deleted_view(n, arg),
    "pnk": lambda n, arg: modular_deleted_up_to(n, arg),
    "le": lambda n, arg: max_block_size_view(n, arg),
    "ne": lambda n, arg: no_block_size_view(n, arg),
    "even": lambda n, arg: even_block_view(n),
    "even-top": lambda n, arg: even_block_top_view(n, arg),
}


def parse_view(n: int, spec: str) -> PosetView:
    """Build a view from its CLI spec string, e.g. ``full``, ``ranks:1,3``,
    ``qnk:k=3``, ``le:k=2``, ``even``, ``even-top:k=2``."""
    spec = spec.strip()
    if spec.startswith("ranks:"):
        body = spec[len("ranks:"):].strip()
        ranks = parse_rank_set(body) if body and body != "-" else ()
        return rank_selected_view(n, ranks)
    name, _, arg = spec.partition(":")
    if name not in _FAMILIES:
        raise ValueError(f"unknown view spec {spec!r}")
    k = None
    if arg:
        if not arg.startswith("k="):
            raise ValueError(f"malformed view parameter in {spec!r}")
        k = int(arg[2:])
    if name in ("qnk", "pnk", "le", "ne", "even-top") and k is None:
        raise ValueError(f"view {name!r} needs k=")
    return _FAMILIES[name](n, k)


def parse_rank_set(text: str) -> tuple[int, ...]:
    """Parse comma lists with ranges: ``1-3,5`` -> (1, 2, 3, 5); ``-`` is empty."""
    text = text.strip()
    if not text or text == "-":
        return ()
    out: set[int] = set()
    for chunk in text.split(","):
        chunk = chunk.strip()
        if "-" in chunk:
            lo, hi = chunk.split("-")
            out.update(range(int(lo), int(hi) + 1))
        else:
            out.add(int(chunk))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# fixed chains

def fixed_chain_count(view: PosetView, cycle_type) -> int:
    """Number of maximal chains of the view fixed pointwise by the canonical
    permutation of *cycle_type* (conjugacy makes the choice immaterial)."""
    mu = check_partition(cycle_type)
    perm = canonical_permutation(mu, view.n)
    if not view.elements():
        return 1
    fixed = view.fixed_by(perm)
    if view.rank_selected:
        ranks = view.ranks
        if any(r not in fixed for r in ranks):
            return 0
        counts = {x: 1 for x in fixed[ranks[0]]}
        for r in ranks[1:]:
            nxt = {}
            for y in fixed[r]:
                total = sum(c for x, c in counts.items() if x.refines(y))
                if total:
                    nxt[y] = total
            if not nxt:
                return 0
            counts = nxt
        return sum(counts.values())
    # general views: count paths through view-covers restricted to fixed
    # elements, from view-minimal to view-maximal ones
    fixed_set = {x for elems in fixed.values() for x in elems}
    if not fixed_set:
        return 0
    covers = view.covers()
    minimal = set(view.minimal_elements()) & fixed_set
    maximal = set(view.maximal_elements()) & fixed_set
    memo: dict[SetPartition, int] = {}

    def paths_from(x: SetPartition) -> int:
        if x in memo:
            return memo[x]
        total = 1 if x in maximal else 0
        for y in covers[x]:
            if y in fixed_set:
                total += paths_from(y)
        memo[x] = total
        return total

    return sum(paths_from(x) for x in minimal)
