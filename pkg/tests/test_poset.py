from math import factorial

import pytest

from parthom.errors import FeasibilityError
from parthom.partitions import multiplicities as part_mults
from parthom.poset import (
    even_block_top_view,
    even_block_view,
    fixed_chain_count,
    full_view,
    max_block_size_view,
    modular_deleted_up_to,
    modular_deleted_view,
    no_block_size_view,
    parse_rank_set,
    parse_view,
    rank_selected_view,
    stirling2,
)
from parthom.setparts import SetPartition, act, canonical_permutation, set_partitions


def stirling_oracle(n, k):
    """Independent Stirling count via inclusion-exclusion over surjections."""
    from math import comb

    total = sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))
    return total // factorial(k)


# ---------------------------------------------------------------------------
# SetPartition basics

def test_canonical_form_and_equality():
    a = SetPartition(4, [[3, 4], [2], [1]])
    b = SetPartition(4, [[1], [2], [4, 3]])
    assert a == b and hash(a) == hash(b)
    assert a.blocks == ((1,), (2,), (3, 4))


def test_rank():
    assert SetPartition(4, [[1, 2], [3, 4]]).rank == 2
    assert SetPartition(4, [[1], [2], [3], [4]]).rank == 0


def test_block_type():
    assert SetPartition(5, [[1, 2], [3, 4], [5]]).block_type() == (2, 2, 1)
    assert SetPartition(3, [[1], [2], [3]]).block_type() == (1, 1, 1)


def test_str_and_parse():
    x = SetPartition(4, [[1, 2], [3], [4]])
    assert str(x) == "12|3|4"
    assert SetPartition.parse("12|3|4", 4) == x
    y = SetPartition(10, [[1, 10], [2, 3, 4, 5, 6, 7, 8, 9]])
    assert str(y) == "1,10|2,3,4,5,6,7,8,9"
    assert SetPartition.parse(str(y), 10) == y


def test_invalid_partitions_rejected():
    with pytest.raises(ValueError):
        SetPartition(3, [[1, 2]])
    with pytest.raises(ValueError):
        SetPartition(3, [[1, 2], [2, 3]])


def test_refinement():
    bottom = SetPartition(4, [[1], [2], [3], [4]])
    x = SetPartition(4, [[1, 2], [3], [4]])
    y = SetPartition(4, [[1, 2], [3, 4]])
    z = SetPartition(4, [[1, 3], [2, 4]])
    assert bottom.refines(x) and bottom.refines(z)
    assert x.refines(y)
    assert not x.refines(z)


def test_refinement_is_partial_order_on_all_of_degree_4():
    everything = [x for k in range(1, 5) for x in set_partitions(4, k)]
    assert len(everything) == 15
    for x in everything:
        assert x.refines(x)
        for y in everything:
            if x.refines(y) and y.refines(x):
                assert x == y


def test_set_partition_generation_counts():
    for n in range(1, 8):
        for k in range(1, n + 1):
            got = sum(1 for _ in set_partitions(n, k))
            assert got == stirling2(n, k) == stirling_oracle(n, k)


# ---------------------------------------------------------------------------
# the action

def test_act_identity():
    x = SetPartition(4, [[1, 3], [2, 4]])
    assert act((1, 2, 3, 4), x) == x


def test_act_transposition():
    x = SetPartition(4, [[1, 3], [2, 4]])
    g = canonical_permutation((2, 1, 1))  # swaps 1 and 2
    assert act(g, x) == SetPartition(4, [[2, 3], [1, 4]])


def test_act_preserves_type_and_order():
    import itertools

    elems = [x for k in range(2, 5) for x in set_partitions(5, k)]
    for g in [canonical_permutation(mu, 5) for mu in ((2, 1, 1, 1), (3, 2), (5,))]:
        for x in elems:
            assert act(g, x).block_type() == x.block_type()
        for x, y in itertools.islice(itertools.combinations(elems, 2), 300):
            assert x.refines(y) == act(g, x).refines(act(g, y))


def test_orbit_sizes_match_orbit_stabilizer_formula():
    import itertools

    for k in range(1, 5):
        by_type = {}
        for x in set_partitions(5, k):
            by_type.setdefault(x.block_type(), set()).add(x)
        for lam, orbit in by_type.items():
            denom = 1
            for part in lam:
                denom *= factorial(part)
            for mult in part_mults(lam).values():
                denom *= factorial(mult)
            assert len(orbit) == factorial(5) // denom, lam


def test_canonical_permutation():
    assert canonical_permutation((3, 2)) == (2, 3, 1, 5, 4)
    assert canonical_permutation((1, 1, 1)) == (1, 2, 3)
    with pytest.raises(ValueError):
        canonical_permutation((3,), 4)


# ---------------------------------------------------------------------------
# views

def test_full_view_rank_sizes():
    v = full_view(4)
    assert {r: len(v.at_rank(r)) for r in v.ranks} == {1: 6, 2: 7}
    v5 = full_view(5)
    assert {r: len(v5.at_rank(r)) for r in v5.ranks} == {1: 10, 2: 25, 3: 15}


def test_rank_selected_sizes_match_stirling():
    for n in range(3, 9):
        v = full_view(n)
        for r in v.ranks:
            assert len(v.at_rank(r)) == stirling2(n, n - r)


def test_rank_selection_example():
    v = rank_selected_view(5, [1, 3])
    assert {r: len(v.at_rank(r)) for r in v.ranks} == {1: 10, 3: 15}


def test_invalid_rank_set():
    with pytest.raises(ValueError):
        rank_selected_view(5, [4])


def test_modular_deletion_example():
    q = modular_deleted_view(4, 3)
    assert len(q.at_rank(2)) == 3
    assert len(q.at_rank(1)) == 6


def test_modular_deletion_up_to_removes_atoms():
    p = modular_deleted_up_to(5, 3)
    assert 1 not in p.ranks
    # rank 2 of the lattice on 5 points has types (3,1,1) and (2,2,1);
    # the (3,1,1) ones are modular and get deleted
    assert len(p.at_rank(2)) == 15


def test_block_size_views():
    le = max_block_size_view(5, 2)
    assert all(max(len(b) for b in x.blocks) <= 2 for x in le.elements())
    ne = no_block_size_view(5, 3)
    assert all(all(len(b) != 3 for b in x.blocks) for x in ne.elements())


def test_q_top_equals_block_bound_view():
    for n in range(4, 8):
        q = modular_deleted_view(n, n - 1)
        le = max_block_size_view(n, n - 2)
        assert set(q.elements()) == set(le.elements())


def test_even_block_views():
    v = even_block_view(6)
    assert v.ranks == (2, 4)
    assert all(len(x.blocks) % 2 == 0 for x in v.elements())
    top = even_block_top_view(6, 1)
    assert top.ranks == (4,)
    with pytest.raises(ValueError):
        even_block_view(5)


def test_parse_view_round_trip():
    for spec in ("full", "ranks:1,3", "qnk:k=3", "pnk:k=3", "le:k=2", "ne:k=3", "even", "even-top:k=2"):
        v = parse_view(6, spec)
        assert v.spec == spec
    v = parse_view(6, "ranks:1-3")
    assert v.spec == "ranks:1,2,3"
    with pytest.raises(ValueError):
        parse_view(6, "bogus")


def test_parse_rank_set():
    assert parse_rank_set("1-3,5") == (1, 2, 3, 5)
    assert parse_rank_set("-") == ()
    assert parse_rank_set("4,2") == (2, 4)


def test_ground_size_bounds():
    with pytest.raises(FeasibilityError):
        full_view(11)
    with pytest.raises(FeasibilityError):
        full_view(1)


# ---------------------------------------------------------------------------
# chains

def test_maximal_chain_counts_full():
    for n in range(3, 8):
        v = full_view(n)
        expected = factorial(n) * factorial(n - 1) // 2 ** (n - 1)
        assert v.count_maximal_chains() == expected
        if n <= 6:
            assert len(v.maximal_chains()) == expected


def test_empty_rank_set_has_one_empty_chain():
    v = rank_selected_view(5, [])
    assert v.maximal_chains() == [()]
    assert v.count_maximal_chains() == 1


def test_single_rank_chains():
    v = rank_selected_view(5, [2])
    chains = v.maximal_chains()
    assert len(chains) == 25
    assert all(len(c) == 1 for c in chains)


def test_rank_selected_chains_hit_every_rank():
    v = rank_selected_view(5, [1, 3])
    for chain in v.maximal_chains():
        assert [x.rank for x in chain] == [1, 3]
        assert chain[0].refines(chain[1])


def test_general_view_maximal_chains_agree_with_cover_paths():
    # the deleted-modular view is not rank selected; its maximal chains may
    # skip ranks, but every consecutive pair must be a cover
    q = modular_deleted_view(5, 2)  # atoms removed
    chains = q.maximal_chains()
    covers = q.covers()
    for chain in chains:
        assert chain[0] in q.minimal_elements()
        assert chain[-1] in q.maximal_elements()
        for a, b in zip(chain, chain[1:]):
            assert b in covers[a]


# ---------------------------------------------------------------------------
# fixed chains

def test_fixed_chain_count_identity_is_total():
    for n in range(3, 7):
        for ranks in ((), (1,), (1, 2), tuple(range(1, n - 1))):
            if any(r > n - 2 for r in ranks):
                continue
            v = rank_selected_view(n, ranks)
            assert fixed_chain_count(v, (1,) * n) == v.count_maximal_chains()


def test_fixed_chain_count_four_cycle():
    # the only partition of 4 fixed by a 4-cycle is 13|24 at rank 2, so no
    # chain through ranks {1, 2} is fixed pointwise
    v = rank_selected_view(4, [1, 2])
    assert fixed_chain_count(v, (4,)) == 0
    assert fixed_chain_count(rank_selected_view(4, [2]), (4,)) == 1


def test_fixed_chain_count_transposition_on_atoms():
    # atoms fixed by the swap of two points: the pair itself and every pair
    # disjoint from it; on 4 points that leaves 12|3|4 and 34|1|2
    v = rank_selected_view(4, [1])
    assert fixed_chain_count(v, (2, 1, 1)) == 2


def test_fixed_chain_count_brute_force_cross_check():
    from parthom.setparts import act as do_act

    for mu in ((2, 2, 1), (3, 1, 1), (2, 1, 1, 1)):
        v = rank_selected_view(5, [1, 2])
        g = canonical_permutation(mu, 5)
        brute = sum(
            1
            for chain in v.maximal_chains()
            if all(do_act(g, x) == x for x in chain)
        )
        assert fixed_chain_count(v, mu) == brute, mu


def test_fixed_chain_count_general_view_cross_check():
    # the non-rank-selected branch counts paths through view covers
    from parthom.partitions import partitions_of
    from parthom.setparts import act as do_act

    for view in (modular_deleted_view(5, 3), modular_deleted_up_to(5, 2)):
        chains = view.maximal_chains()
        for mu in partitions_of(5):
            g = canonical_permutation(mu, 5)
            brute = sum(
                1 for chain in chains if all(do_act(g, x) == x for x in chain)
            )
            assert fixed_chain_count(view, mu) == brute, (view.describe(), mu)


def test_stirling_values():
    assert stirling2(4, 2) == 7
    assert all(stirling2(n, n) == 1 for n in range(9))
    assert all(stirling2(n, 1) == 1 for n in range(1, 9))
    assert stirling2(0, 0) == 1


def test_views_are_stable_under_the_action():
    from parthom.partitions import partitions_of

    views = [
        full_view(5),
        rank_selected_view(5, [1, 3]),
        modular_deleted_view(5, 3),
        modular_deleted_up_to(5, 3),
        max_block_size_view(5, 3),
        no_block_size_view(5, 3),
        even_block_view(6),
        even_block_top_view(6, 1),
    ]
    for view in views:
        elems = set(view.elements())
        for mu in partitions_of(view.n):
            g = canonical_permutation(mu, view.n)
            assert {act(g, x) for x in elems} == elems, (view.describe(), mu)
