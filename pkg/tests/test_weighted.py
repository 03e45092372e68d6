"""Weighted-game solver against an independent brute-force oracle."""

import itertools
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from majority_game.bounds import popcount
from majority_game.weighted import (
    adversarial_merge_weight,
    optimal_query,
    relevance_threshold,
    relevant,
    relevant_indices,
    solve_weighted,
    weighted_terminal,
)


@lru_cache(maxsize=None)
def naive_value(w: tuple) -> int:
    """Reference minimax over index pairs, no state reductions at all."""
    total = sum(w)
    if total == 0:
        return 0
    if max(w) > total - max(w):
        return 0
    best = None
    for i, j in itertools.combinations(range(len(w)), 2):
        rest = tuple(w[t] for t in range(len(w)) if t not in (i, j))
        down = max(
            naive_value(tuple(sorted(rest + (w[i] + w[j],)))),
            naive_value(tuple(sorted(rest + (abs(w[i] - w[j]),)))),
        )
        best = down if best is None else min(best, down)
    return 1 + best


def all_vectors(max_sum):
    for s in range(max_sum + 1):
        for k in range(1, s + 1):
            for combo in itertools.combinations_with_replacement(range(1, s + 1), k):
                if sum(combo) == s:
                    yield tuple(sorted(combo, reverse=True))


def test_solver_matches_naive_oracle():
    for w in all_vectors(9):
        assert solve_weighted(w) == naive_value(w), w
    # a few vectors with zero-weight balls
    for w in [(0,), (0, 0), (3, 0), (2, 1, 0), (1, 1, 1, 0, 0)]:
        assert solve_weighted(w) == naive_value(tuple(sorted(w)))


@pytest.mark.parametrize("k", range(1, 13))
def test_all_ones_value(k):
    assert solve_weighted((1,) * k) == k - popcount(k)


def test_paper_vectors():
    assert solve_weighted((1, 2, 3, 4, 5, 6, 7)) == 5
    assert solve_weighted((3, 3, 7, 8, 9)) == 4


def test_small_vector_by_full_minimax():
    assert solve_weighted((2, 1, 1)) == 2
    assert naive_value((1, 1, 2)) == 2


def test_terminal_classification():
    assert weighted_terminal((0, 0)).winner is None
    assert weighted_terminal((5, 1, 1, 1)).winner == 0
    assert weighted_terminal((3, 1, 1, 1)) is None  # 3 equals the rest
    assert weighted_terminal(()).winner is None


def test_relevance_examples():
    assert not relevant((3, 1), 1)
    assert relevant((3, 1), 0)
    assert all(relevant((2, 1, 1), i) for i in range(3))
    assert relevant((4, 2, 2), 0)


def test_relevance_by_enumeration():
    # brute-force the definition: some coloring of the others flips the outcome
    def brute(w, i):
        others = [w[t] for t in range(len(w)) if t != i]
        for signs in itertools.product((1, -1), repeat=len(others)):
            s = sum(a * b for a, b in zip(others, signs))
            red, blue = s + w[i], s - w[i]
            if (red > 0) != (blue > 0) or (red == 0) != (blue == 0):
                return True
        return False

    for w in all_vectors(9):
        for i in range(len(w)):
            assert relevant(w, i) == brute(w, i), (w, i)


def test_relevance_threshold_examples():
    assert relevance_threshold((3, 1)) == 1
    assert relevance_threshold((1, 1, 1)) == 0
    assert relevance_threshold((0, 0)) == 0
    assert relevant_indices((0, 0)) == ()


def test_optimal_query_is_smallest_optimal_pair():
    assert optimal_query((1, 1, 1, 1)) == (0, 1)
    assert optimal_query((5, 1, 1, 1)) is None


def test_adversarial_merge_is_a_legal_choice():
    w = (3, 2, 2, 1)
    got = adversarial_merge_weight(w, 2, 2)
    assert got in (4, 0)


@given(st.lists(st.integers(min_value=0, max_value=8), min_size=1, max_size=6))
def test_permutation_invariance(ws):
    base = solve_weighted(tuple(ws))
    assert solve_weighted(tuple(reversed(ws))) == base
    assert solve_weighted(tuple(sorted(ws))) == base


@given(st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=6))
def test_upper_bounds(ws):
    w = tuple(ws)
    k = len(w)
    m = solve_weighted(w)
    assert 0 <= m <= max(0, k - 1)
    if sum(w) % 2 == 1 and k >= 2:
        assert m <= k - 2


@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=5),
       st.integers(min_value=2, max_value=3))
def test_scale_invariance(ws, c):
    w = tuple(ws)
    assert solve_weighted(tuple(c * x for x in w)) == solve_weighted(w)


@given(st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=5))
def test_zero_removal(ws):
    w = tuple(ws)
    assert solve_weighted(w + (0,)) == solve_weighted(w)


@given(st.lists(st.integers(min_value=0, max_value=6), min_size=2, max_size=6))
def test_relevant_ball_stays_relevant_after_same(ws):
    # a SAME answer folds a relevant queried ball into a still-relevant one
    w = tuple(ws)
    for i in range(len(w)):
        if not relevant(w, i):
            continue
        for j in range(len(w)):
            if j == i:
                continue
            rest = tuple(w[t] for t in range(len(w)) if t not in (i, j))
            succ = rest + (w[i] + w[j],)
            assert relevant(succ, len(rest))
