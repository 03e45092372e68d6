"""Verification complexity: brute certificates, the path DP, constructions."""

import math
import random

import pytest

from majority_game.adversary import eventrees_coloring
from majority_game.core import coloring_outcome
from majority_game.generators import free_trees, path_graph, random_graph, star_graph
from majority_game.graphsolver import solve_graph
from majority_game.nondet import (
    cert,
    induced_outcome,
    m_nd,
    nondet_hard_coloring,
    nondet_query_set,
    path_cert,
)


def test_cert_examples():
    report = cert(path_graph(3), "RRB")
    assert report.size == 1
    assert report.outcome.majority is not None
    report = cert(path_graph(5), "RRBRR")
    assert report.size == 2


def test_single_edge_certificate_isolating_a_vertex():
    # asking only (1, 2) of RRB leaves components of weight (1, 0)
    out = induced_outcome(path_graph(3), "RRB", [(1, 2)])
    assert out is not None and out.majority == 0


def test_path_cert_matches_brute_force_small():
    for n in range(1, 10):
        g = path_graph(n)
        for bits in range(2 ** max(0, n - 1)):
            c = "R" + "".join("R" if (bits >> i) & 1 else "B" for i in range(n - 1))
            assert path_cert(c).size == cert(g, c).size, c


def test_path_cert_monochromatic():
    # a dominant prefix plus singleton remainders: floor(n/2) queries suffice
    for n in (3, 5, 8, 13):
        report = path_cert("R" * n)
        assert report.size == n - math.ceil(n / 2) == n // 2
        assert report.size == cert(path_graph(n), "R" * n).size if n <= 11 else True


def test_path_cert_alternating():
    report = path_cert("RBRBR")
    assert report.size == cert(path_graph(5), "RBRBR").size
    assert report.outcome.majority is not None


def test_path_cert_report_is_a_real_certificate():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 14)
        c = "".join(rng.choice("RB") for _ in range(n))
        report = path_cert(c)
        out = induced_outcome(path_graph(n), c, report.query_set)
        assert out is not None
        truth = coloring_outcome(c)
        assert (out.majority is None) == (truth.majority is None)


def test_mnd_examples():
    assert m_nd(path_graph(3)) == 1
    assert m_nd(path_graph(4)) == 3
    assert m_nd(path_graph(9)) == 5  # recorded exact value


def test_mnd_even_trees_via_witness_coloring():
    # m_nd(T) <= n-1 always (query everything); the balanced coloring with
    # unbalanced edge-cuts needs all n-1 queries, pinning m_nd(T) = n-1
    for n in (4, 6, 8, 10):
        for tree in free_trees(n):
            witness = eventrees_coloring(tree)
            assert cert(tree, witness).size == n - 1


def test_mnd_equals_full_enumeration_on_small_trees():
    for n in (4, 6):
        for tree in free_trees(n):
            assert m_nd(tree) == n - 1


def test_mnd_below_game_value():
    rng = random.Random(8)
    done = 0
    while done < 10:
        n = rng.randint(2, 8)
        g = random_graph(n, 0.6, seed=rng.randrange(10 ** 6))
        if not g.is_majority_solvable():
            continue
        done += 1
        assert m_nd(g) <= solve_graph(g).value


def test_hard_coloring_construction():
    assert nondet_hard_coloring(2) == "RRBBB"
    c = nondet_hard_coloring(4)
    assert len(c) == 17
    assert c == "RRRR" + "BBBB" + "RRRR" + "BBBB" + "B"
    assert path_cert(c).size >= 17 - 2 * 4 - 1
    with pytest.raises(ValueError):
        nondet_hard_coloring(3)


def test_query_set_large_surplus_rule():
    # d = n: the first n - ceil(n/2) edges certify
    for n in (5, 9, 13):
        qs = nondet_query_set("R" * n)
        assert len(qs) == n - math.ceil(n / 2)
        assert qs == frozenset((i, i + 1) for i in range(n - n // 2 - 1))


def test_query_set_certifies_random_colorings():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.choice(range(3, 102, 2))
        c = "".join(rng.choice("RB") for _ in range(n))
        qs = nondet_query_set(c)  # construction self-validates by replay
        assert len(qs) <= n - math.isqrt(n) / 5


def test_query_set_never_smaller_than_optimal():
    rng = random.Random(6)
    for _ in range(30):
        n = rng.choice(range(3, 12, 2))
        c = "".join(rng.choice("RB") for _ in range(n))
        assert len(nondet_query_set(c)) >= path_cert(c).size


def test_query_set_rejects_even_paths():
    with pytest.raises(ValueError):
        nondet_query_set("RRBB")


def test_mnd_rejects_unsolvable_and_oversized():
    from majority_game.core import Graph, UnsolvableGraphError

    with pytest.raises(UnsolvableGraphError):
        m_nd(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        cert(star_graph(26), "R" * 26)
