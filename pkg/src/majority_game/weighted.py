"""Exact solver for the weighted majority game, plus relevance analysis.

Balls carry non-negative integer weights.  A query compares two balls and
merges them into one of weight w_i + w_j (SAME) or |w_i - w_j| (DIFF); the
adversary picks the answer.  The game ends when either all weights are zero
(no majority) or one ball outweighs all others combined (that ball's color
class is the majority).  `solve_weighted` computes the exact worst-case
query count by memoized minimax over weight multisets.
"""

from __future__ import annotations

from dataclasses import dataclass

WeightVector = tuple[int, ...]


def normalize(weights) -> WeightVector:
    w = tuple(sorted((int(x) for x in weights), reverse=True))
    if w and w[-1] < 0:
        raise ValueError("weights must be non-negative")
    return w


def strip_zeros(w: WeightVector) -> WeightVector:
    return tuple(x for x in w if x > 0)


@dataclass(frozen=True)
class WeightedOutcome:
    """Winner index into the given vector, or None for 'no majority'."""

    winner: int | None


def weighted_terminal(w) -> WeightedOutcome | None:
    """Terminal classification: all zeros, or one dominant ball, else None."""
    w = tuple(w)
    total = sum(w)
    if total == 0:
        return WeightedOutcome(None)
    i = max(range(len(w)), key=w.__getitem__)
    if w[i] > total - w[i]:
        return WeightedOutcome(i)
    return None


def successors(w: WeightVector, a: int, b: int) -> tuple[WeightVector, WeightVector]:
    """The two merge results of querying one ball of weight a against one of
    weight b: weights add, or cancel to the absolute difference."""
    rest = list(w)
    rest.remove(a)
    rest.remove(b)
    plus = tuple(sorted(rest + [a + b], reverse=True))
    d = abs(a - b)
    minus = tuple(sorted(rest + ([d] if d else []), reverse=True))
    return plus, minus


def _value_pairs(w: WeightVector):
    """Unordered pairs of weight values present in w, each once.

    Distinct indices with equal weights give identical successors, so moves
    are generated per value pair.  Zero-weight balls are never queried:
    both answers give the same successor.
    """
    values = sorted(set(w), reverse=True)
    for i, a in enumerate(values):
        if a == 0:
            continue
        for b in values[i:]:
            if b == 0:
                continue
            if a == b and w.count(a) < 2:
                continue
            yield a, b


_memo: dict[WeightVector, int] = {}


def _solve(w: WeightVector) -> int:
    """Minimax value on a sorted, zero-free weight multiset.

    The memo tolerates concurrent duplicate inserts: values are
    deterministic, so racing writers store the same number.
    """
    cached = _memo.get(w)
    if cached is not None:
        return cached
    if weighted_terminal(w) is not None:
        _memo[w] = 0
        return 0
    best = len(w) - 1  # query everything but one ball always suffices
    for a, b in _value_pairs(w):
        plus, minus = successors(w, a, b)
        v = 1 + max(_solve(strip_zeros(plus)), _solve(strip_zeros(minus)))
        if v < best:
            best = v
    _memo[w] = best
    return best


def solve_weighted(weights) -> int:
    """Exact m(w): optimal worst-case query count for the weight multiset."""
    return _solve(strip_zeros(normalize(weights)))


def optimal_query(weights) -> tuple[int, int] | None:
    """Lexicographically smallest optimal index pair into the sorted vector,
    or None on terminal vectors."""
    w = normalize(weights)
    if weighted_terminal(w) is not None:
        return None
    target = solve_weighted(w)
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] == 0 or w[j] == 0:
                continue
            plus, minus = successors(w, w[i], w[j])
            if 1 + max(_solve(strip_zeros(plus)), _solve(strip_zeros(minus))) == target:
                return (i, j)
    return None


def adversarial_merge_weight(w, a: int, b: int) -> int:
    """Merged weight an exact-minimax adversary chooses when weights a and b
    are queried within multiset w: the successor of larger game value wins,
    ties keep the sum (no weight is given away)."""
    w = normalize(w)
    plus, minus = successors(w, a, b)
    if _solve(strip_zeros(minus)) > _solve(strip_zeros(plus)):
        return abs(a - b)
    return a + b


def _reachable_signed_sums(weights) -> int:
    """Bitset of achievable signed sums of `weights`, offset by their total."""
    total = sum(weights)
    bits = 1 << total
    for x in weights:
        if x:
            bits = (bits << x) | (bits >> x)
    return bits


def relevant(weights, i: int) -> bool:
    """A ball is relevant iff some coloring of the others lets its color
    change the outcome.  Equivalently (for weight v > 0): the others admit a
    signed sum S with |S| <= v."""
    w = tuple(weights)
    v = w[i]
    if v == 0:
        return False
    others = w[:i] + w[i + 1:]
    total = sum(others)
    if total <= v:
        return True
    bits = _reachable_signed_sums(others)
    window = ((1 << (2 * v + 1)) - 1) << (total - v)
    return bits & window != 0


def relevant_indices(weights) -> tuple[int, ...]:
    w = tuple(weights)
    return tuple(i for i in range(len(w)) if relevant(w, i))


def relevance_threshold(weights) -> int:
    """Threshold t with: ball i relevant iff w_i > t.

    t is the largest weight among non-relevant balls, 0 when every
    positive-weight ball is relevant.
    """
    w = tuple(weights)
    if not w:
        raise ValueError("empty weight vector")
    non_rel = [w[i] for i in range(len(w)) if not relevant(w, i)]
    return max(non_rel, default=0)
