import pytest

import oracles
from signeddom import (
    Graph,
    SignedFunction,
    SizeCapError,
    VertexSet,
    complete_graph,
    cycle_graph,
    derive_seed,
    domination_number,
    limited_packing_number,
    packing_number,
    partition_stats,
    path_graph,
    random_connected,
    random_tree,
    signed_domination,
    star_graph,
    structural_profile,
    tuple_domination_number,
    verify_sdf,
    vertex_set_violations,
)


def _small_corpus():
    yield Graph(1)
    yield Graph(2, [(0, 1)])
    yield Graph(4, [(0, 1), (2, 3)])  # disconnected
    yield path_graph(6)
    yield cycle_graph(5)
    yield star_graph(6)
    yield complete_graph(6)
    for i in range(20):
        yield random_connected(4 + i % 5, 0.5, derive_seed(2024, i))
    for i in range(8):
        yield random_tree(4 + i % 5, derive_seed(2025, i))


# -- SignedFunction / verify_sdf ----------------------------------------------


def test_signed_function_basics():
    f = SignedFunction((1, -1, 1))
    assert f.weight == 1
    assert f.plus_set == frozenset({0, 2})
    assert f.minus_set == frozenset({1})
    assert str(f) == "+-+"
    assert SignedFunction.from_minus_set(3, {1}) == f
    with pytest.raises(ValueError):
        SignedFunction((1, 0, 1))


def test_verify_sdf_p2():
    p2 = Graph(2, [(0, 1)])
    assert verify_sdf(p2, SignedFunction((1, 1))) == []
    assert verify_sdf(p2, SignedFunction((-1, 1))) == [0, 1]


def test_verify_sdf_c6_pattern():
    f = SignedFunction((1, 1, -1, 1, 1, -1))
    assert verify_sdf(cycle_graph(6), f) == []


def test_verify_sdf_length_mismatch():
    with pytest.raises(ValueError, match="length"):
        verify_sdf(path_graph(3), SignedFunction((1, 1)))


# -- partition stats -----------------------------------------------------------


def test_partition_stats_c6_pattern():
    g = cycle_graph(6)
    stats = partition_stats(g, SignedFunction((1, 1, -1, 1, 1, -1)))
    assert stats.e_plus == 2
    assert stats.e_minus == 0
    assert stats.cut == 4
    assert not stats.odd_plus and not stats.odd_minus


def test_partition_stats_all_plus():
    g = complete_graph(5)
    stats = partition_stats(g, SignedFunction((1,) * 5))
    assert stats.e_plus == g.m and stats.e_minus == 0 and stats.cut == 0


def test_partition_stats_k4_one_minus():
    g = complete_graph(4)
    stats = partition_stats(g, SignedFunction((-1, 1, 1, 1)))
    assert stats.e_plus == 3 and stats.e_minus == 0 and stats.cut == 3


def test_partition_stats_invariants():
    for g in _small_corpus():
        if g.n == 0:
            continue
        f = SignedFunction.from_minus_set(g.n, {v for v in range(g.n) if v % 3 == 0})
        stats = partition_stats(g, f)
        # every edge is inside V+, inside V-, or crossing
        assert stats.e_plus + stats.e_minus + stats.cut == g.m
        for v in range(g.n):
            assert stats.deg_plus[v] + stats.deg_minus[v] == g.deg[v]


# -- signed domination ----------------------------------------------------------


@pytest.mark.parametrize(
    "g,expected",
    [
        (complete_graph(5), 1),
        (complete_graph(6), 2),
        (path_graph(7), 5),
        (cycle_graph(6), 2),
        (star_graph(5), 5),
        (Graph(2, [(0, 1)]), 2),
    ],
    ids=["K5", "K6", "P7", "C6", "K1-4", "P2"],
)
def test_signed_domination_fixed_values(g, expected):
    for mode in ("oracle", "branch_and_bound"):
        value, witness = signed_domination(g, mode)
        assert value == expected
        assert witness.weight == value
        assert verify_sdf(g, witness) == []


def test_star_fast_path_witness_all_plus():
    value, witness = signed_domination(star_graph(9))
    assert value == 9
    assert witness.assignment == (1,) * 9


def test_signed_domination_matches_brute_force():
    for g in _small_corpus():
        expect_w, expect_assign = oracles.brute_signed_domination(g)
        for mode in ("oracle", "branch_and_bound"):
            value, witness = signed_domination(g, mode)
            assert value == expect_w, f"{mode} value mismatch on {g}"
            assert witness.assignment == expect_assign, f"{mode} witness not lex-least on {g}"


def test_signed_domination_parity_invariant():
    for g in _small_corpus():
        value, _ = signed_domination(g)
        assert (value - g.n) % 2 == 0


def test_optimal_witness_avoids_forced_vertices():
    for g in _small_corpus():
        prof = structural_profile(g)
        _, witness = signed_domination(g)
        pinned = prof.isolated | prof.leaves | prof.supports
        assert pinned <= witness.plus_set
        assert witness.minus_set <= prof.core


def test_signed_domination_size_caps():
    with pytest.raises(SizeCapError):
        signed_domination(cycle_graph(21), "oracle")
    with pytest.raises(SizeCapError):
        signed_domination(cycle_graph(41), "branch_and_bound")
    with pytest.raises(ValueError, match="unknown mode"):
        signed_domination(cycle_graph(4), "magic")


# -- subset solvers --------------------------------------------------------------


@pytest.mark.parametrize(
    "g,expected",
    [(complete_graph(6), 1), (path_graph(7), 3), (cycle_graph(6), 2)],
    ids=["K6", "P7", "C6"],
)
def test_domination_fixed_values(g, expected):
    value, witness = domination_number(g)
    assert value == expected
    assert vertex_set_violations(g, witness) == []


def test_domination_isolated_vertices_are_members():
    g = Graph(4, [(0, 1)])
    value, witness = domination_number(g)
    assert {2, 3} <= witness.members
    assert value == 3


def test_tuple_domination_fixed_values():
    c6 = cycle_graph(6)
    value, witness = tuple_domination_number(c6, 2)
    assert value == 4
    assert vertex_set_violations(c6, witness) == []
    assert tuple_domination_number(complete_graph(5), 1)[0] == 1
    # k = delta + 1 always has V as a feasible set
    g = cycle_graph(5)
    value, witness = tuple_domination_number(g, 3)
    assert value == 5 and witness.members == frozenset(range(5))


def test_tuple_domination_k_range():
    g = path_graph(5)
    with pytest.raises(ValueError, match="delta"):
        tuple_domination_number(g, 3)
    with pytest.raises(ValueError, match="delta"):
        tuple_domination_number(g, 0)


def test_limited_packing_fixed_values():
    c6 = cycle_graph(6)
    assert limited_packing_number(c6, 2)[0] == 4
    assert limited_packing_number(c6, 1)[0] == 2
    assert limited_packing_number(complete_graph(6), 2)[0] == 2
    with pytest.raises(ValueError, match="k must be"):
        limited_packing_number(c6, 0)


def test_packing_fixed_values():
    for n in (3, 5, 8):
        assert packing_number(complete_graph(n))[0] == 1
    assert packing_number(cycle_graph(6))[0] == 2
    value, witness = packing_number(path_graph(7))
    assert value == 3
    assert witness.members == frozenset({0, 3, 6})


def test_subset_solvers_match_brute_force():
    for g in _small_corpus():
        if g.n > 8:
            continue
        delta = min(g.deg) if g.n else 0
        bg, bw = oracles.brute_min_tuple_dominating(g, 1)
        value, witness = domination_number(g)
        assert (value, witness.sorted_members()) == (bg, bw)
        for k in (1, 2):
            if k <= delta + 1:
                bv, bs = oracles.brute_min_tuple_dominating(g, k)
                value, witness = tuple_domination_number(g, k)
                assert (value, witness.sorted_members()) == (bv, bs)
            bv, bs = oracles.brute_max_limited_packing(g, k)
            value, witness = limited_packing_number(g, k)
            assert (value, witness.sorted_members()) == (bv, bs)
        bv, bs = oracles.brute_max_packing(g)
        value, witness = packing_number(g)
        assert (value, witness.sorted_members()) == (bv, bs)
        assert value == limited_packing_number(g, 1)[0]


def test_subset_solver_cap():
    with pytest.raises(SizeCapError):
        domination_number(cycle_graph(41))
    with pytest.raises(SizeCapError):
        limited_packing_number(cycle_graph(41), 1)


def test_vertex_set_violations_roles():
    g = cycle_graph(6)
    ok = VertexSet(frozenset({0, 3}), "packing")
    assert vertex_set_violations(g, ok) == []
    bad = VertexSet(frozenset({0, 1}), "packing")
    assert vertex_set_violations(g, bad) != []
    assert vertex_set_violations(g, VertexSet(frozenset({0}), "dominating")) == [2, 3, 4]
    with pytest.raises(ValueError, match="unknown vertex-set role"):
        vertex_set_violations(g, VertexSet(frozenset(), "clique"))
    with pytest.raises(ValueError, match="outside"):
        vertex_set_violations(g, VertexSet(frozenset({9}), "packing"))


def test_exhaustive_all_small_graphs():
    # every labeled graph on up to 5 vertices, including disconnected ones
    from itertools import combinations

    for n in (1, 2, 3, 4, 5):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            expect_w, expect_assign = oracles.brute_signed_domination(g)
            for mode in ("oracle", "branch_and_bound"):
                value, witness = signed_domination(g, mode)
                assert value == expect_w
                assert witness.assignment == expect_assign
            assert domination_number(g)[0] == oracles.brute_min_tuple_dominating(g, 1)[0]
            assert packing_number(g)[0] == oracles.brute_max_packing(g)[0]
            assert limited_packing_number(g, 2)[0] == oracles.brute_max_limited_packing(g, 2)[0]


def test_monotone_chains_small():
    for i in range(10):
        g = random_connected(4 + i % 5, 0.55, derive_seed(77, i))
        delta = min(g.deg)
        Delta = max(g.deg)
        prev = None
        for k in range(1, Delta // 2 + 2):
            value, _ = limited_packing_number(g, k)
            if prev is not None and prev < g.n:
                assert value >= prev + 1
            prev = value
            if value == g.n:
                break
        prev = None
        for k in range(1, delta + 2):
            value, _ = tuple_domination_number(g, k)
            if prev is not None:
                assert value >= prev + 1
            prev = value
