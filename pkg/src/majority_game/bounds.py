"""Counting lower bounds and lemma-based hardness certificates.

Certificates are hypothesis checkers: each evaluates the premise of one
lower-bound lemma on a weight vector and, when it holds, records the
concluded bound.  Bounds are always sound (testable against the exact
solver); the lemmas themselves are not re-proved here.

All counting uses unbounded integers.  Zero-weight balls are stripped
before any lemma hypothesis is evaluated: removing a weight-0 ball never
changes the game value, and the lemma premises silently assume positive
weights (a zero ball breaks their parity counts).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .weighted import (
    WeightVector,
    normalize,
    solve_weighted,
    strip_zeros,
    weighted_terminal,
)

MU_INFINITE = math.inf


class CertificateSource(str, enum.Enum):
    DECTREE_P = "DECTREE_P"
    DECTREE_PI = "DECTREE_PI"
    SULY1_I = "SULY1_I"
    SULY1_II = "SULY1_II"
    SULY1FORMA_I = "SULY1FORMA_I"
    SULY1FORMA_II = "SULY1FORMA_II"
    SULY1COR_I = "SULY1COR_I"
    SULY1COR_II = "SULY1COR_II"
    SULY2_I = "SULY2_I"
    SULY2_II = "SULY2_II"
    SULY2COR = "SULY2COR"
    O1G = "O1G"
    OBS_REDUCTION = "OBS_REDUCTION"
    TRIVIAL = "TRIVIAL"


@dataclass(frozen=True)
class Certificate:
    bound: int
    source: CertificateSource
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"bound": self.bound, "source": self.source.value, "witness": self.witness}


def popcount(n: int) -> int:
    """Number of 1 bits in the binary representation."""
    if n < 0:
        raise ValueError("popcount is defined for non-negative integers")
    return bin(n).count("1")


def two_adic_valuation(k: int):
    """Largest l with 2^l dividing k; infinite for k = 0."""
    if k == 0:
        return MU_INFINITE
    return (k & -k).bit_length() - 1


def signed_sum_counts(weights) -> dict[int, int]:
    """Count, for every achievable signed sum, the number of sign vectors
    producing it.  A zero weight doubles every count."""
    counts = {0: 1}
    for x in weights:
        nxt: dict[int, int] = {}
        for s, c in counts.items():
            nxt[s + x] = nxt.get(s + x, 0) + c
            nxt[s - x] = nxt.get(s - x, 0) + c
        counts = nxt
    return counts


def count_balanced(weights) -> int:
    """Number p of balanced colorings (sign vectors summing to zero)."""
    return signed_sum_counts(normalize(weights)).get(0, 0)


def count_majority_with(weights, i: int) -> int:
    """Number p_i of colorings in which ball i sits in the strict-majority
    class, both colors of ball i counted."""
    w = tuple(weights)
    others = w[:i] + w[i + 1:]
    counts = signed_sum_counts(others)
    above = sum(c for s, c in counts.items() if w[i] + s > 0)
    return 2 * above


def dectree_bound(weights) -> Certificate:
    """Best counting bound: k - mu(p), or k - 1 - mu(p_i) over all i.

    An infinite valuation makes its route non-informative (bound 0).
    """
    w = normalize(weights)
    k = len(w)
    candidates: list[Certificate] = []
    p = count_balanced(w)
    mu_p = two_adic_valuation(p)
    if mu_p is not MU_INFINITE:
        candidates.append(Certificate(max(0, k - mu_p), CertificateSource.DECTREE_P, {"p": p, "mu": mu_p}))
    seen_vals = set()
    for i, wi in enumerate(w):
        if wi in seen_vals:
            continue
        seen_vals.add(wi)
        pi = count_majority_with(w, i)
        mu_pi = two_adic_valuation(pi)
        if mu_pi is not MU_INFINITE:
            candidates.append(
                Certificate(max(0, k - 1 - mu_pi), CertificateSource.DECTREE_PI, {"i": i, "p_i": pi, "mu": mu_pi})
            )
    best = max(candidates, key=lambda c: c.bound, default=None)
    if best is None or best.bound <= 0:
        return best if best is not None else Certificate(0, CertificateSource.TRIVIAL, {})
    return best


def _powers_of_two_up_to(limit: int):
    p = 1
    while p <= limit:
        yield p
        p *= 2


def _subset_sum_multiset(values, target: int):
    """A sub-multiset of `values` summing to `target`, or None."""
    if target == 0:
        return []
    reach: dict[int, list[int]] = {0: []}
    for v in sorted(values, reverse=True):
        for s in sorted(reach):
            t = s + v
            if t <= target and t not in reach:
                reach[t] = reach[s] + [v]
        if target in reach:
            return sorted(reach[target], reverse=True)
    return reach.get(target)


def _suly1(w: WeightVector, certs: list[Certificate]) -> None:
    k, total = len(w), sum(w)
    ones = w.count(1)
    for p2 in _powers_of_two_up_to(max(ones, 1)):
        n = p2.bit_length() - 1
        if ones >= p2 and k > p2 and total == 2 * p2:
            certs.append(Certificate(k - 1, CertificateSource.SULY1_I, {"n": n}))
            break
    for p2 in _powers_of_two_up_to(max(ones, 1)):
        n = p2.bit_length() - 1
        if ones >= p2 and k > p2 and k != p2 + 1 and total == 2 * p2 + 1:
            certs.append(Certificate(k - 2, CertificateSource.SULY1_II, {"n": n}))
            break


def _suly1forma(w: WeightVector, certs: list[Certificate]) -> None:
    """Equal-head lemma.  Part (i): an odd number of signed partitions of
    the remaining balls hits difference a*2^n.  Part (ii): with one ball
    held fixed, an odd number of signed sums of the rest lands in the
    half-open window (-a*2^n, a*2^n]; this is the exact condition under
    which the proof's majority count is odd."""
    k, total = len(w), sum(w)
    distinct = sorted(set(w), reverse=True)
    got_i = got_ii = False
    for a in distinct:
        cnt_a = w.count(a)
        for p2 in _powers_of_two_up_to(cnt_a):
            n = p2.bit_length() - 1
            if k <= p2 + 1:
                continue
            rest = list(w)
            for _ in range(p2):
                rest.remove(a)
            counts = signed_sum_counts(rest)
            if not got_i and counts.get(a * p2, 0) % 2 == 1:
                certs.append(Certificate(k - 1, CertificateSource.SULY1FORMA_I, {"n": n, "head": a}))
                got_i = True
            if not got_ii:
                lo, hi = -a * p2, a * p2
                for t in sorted(set(rest), reverse=True):
                    others = list(rest)
                    others.remove(t)
                    inside = sum(
                        c for s, c in signed_sum_counts(others).items() if lo < t + s <= hi
                    )
                    if inside % 2 == 1:
                        certs.append(
                            Certificate(
                                k - 2,
                                CertificateSource.SULY1FORMA_II,
                                {"n": n, "head": a, "fixed_ball": t},
                            )
                        )
                        got_ii = True
                        break
            if got_i and got_ii:
                return


def _suly1cor(w: WeightVector, certs: list[Certificate]) -> None:
    """Reveal 2s unit balls in color-balanced pairs, then fall back to the
    unit-head lemma on the remainder."""
    k, total = len(w), sum(w)
    ones = w.count(1)
    best_i = best_ii = None
    for p2 in _powers_of_two_up_to(max(ones, 1)):
        n = p2.bit_length() - 1
        rem = total - 2 * p2
        if rem >= 2 and rem % 2 == 0:
            s = rem // 2
            if ones >= p2 + 2 * s:
                cand = Certificate(k - 1 - s, CertificateSource.SULY1COR_I, {"n": n, "s": s})
                if best_i is None or cand.bound > best_i.bound:
                    best_i = cand
        rem = total - 2 * p2 - 1
        if rem >= 2 and rem % 2 == 0:
            s = rem // 2
            if ones >= p2 + 2 * s and (not w or w[0] != p2 + 1):
                cand = Certificate(k - 2 - s, CertificateSource.SULY1COR_II, {"n": n, "s": s})
                if best_ii is None or cand.bound > best_ii.bound:
                    best_ii = cand
    for cand in (best_i, best_ii):
        if cand is not None and cand.bound > 0:
            certs.append(cand)


def _suly2(w: WeightVector, certs: list[Certificate]) -> None:
    k, total = len(w), sum(w)
    pow2_balls = [x for x in w if x & (x - 1) == 0]
    if total >= 2 and total & (total - 1) == 0:
        p2 = total // 2
        head = _subset_sum_multiset(pow2_balls, p2)
        if head is not None:
            certs.append(
                Certificate(k - 1, CertificateSource.SULY2_I, {"n": p2.bit_length() - 1, "head": head})
            )
    if total >= 3 and (total - 1) & (total - 2) == 0:
        p2 = (total - 1) // 2
        if k > p2 + 1:
            head = _subset_sum_multiset(pow2_balls, p2)
            if head is not None:
                certs.append(
                    Certificate(k - 2, CertificateSource.SULY2_II, {"n": p2.bit_length() - 1, "head": head})
                )


def _suly2cor(w: WeightVector, certs: list[Certificate]) -> None:
    k, total = len(w), sum(w)
    if total < 5 or (total - 3) & (total - 4) != 0:
        return
    p2 = (total - 3) // 2
    if k <= p2 + 2 or 1 not in w:
        return
    # one unit ball must stay outside the power-of-two head
    pow2_balls = [x for x in w if x & (x - 1) == 0]
    pow2_balls.remove(1)
    head = _subset_sum_multiset(pow2_balls, p2)
    if head is not None:
        certs.append(
            Certificate(k - 3, CertificateSource.SULY2COR, {"n": p2.bit_length() - 1, "head": head})
        )


def _o1g(w: WeightVector, certs: list[Certificate]) -> None:
    k, total = len(w), sum(w)
    if total < 5 or (total - 3) & (total - 4) != 0:
        return
    p2 = (total - 3) // 2
    if k <= p2 + 2:
        return
    small = [x for x in w if x in (1, 2)]
    head = _subset_sum_multiset(small, p2)
    if head is not None:
        certs.append(
            Certificate(k - 3, CertificateSource.O1G, {"n": p2.bit_length() - 1, "head": head})
        )


def _base_hard_certificate(w: WeightVector) -> Certificate | None:
    """A certificate proving the zero-free vector w is hard, if one of the
    equality-grade lemma hypotheses holds."""
    certs: list[Certificate] = []
    _suly1(w, certs)
    _suly1forma(w, certs)
    _suly2(w, certs)
    total = sum(w)
    hard_level = len(w) - 1 if total % 2 == 0 else len(w) - 2
    for c in certs:
        if c.bound == hard_level:
            return c
    return None


def _obs_reduction(w: WeightVector, certs: list[Certificate], max_states: int = 4000) -> None:
    """Forward hardness propagation: splitting a ball of weight 2a into two
    balls of weight a undoes one merge of equal weights, and hardness of the
    split vector implies hardness of the merged one.  Search split chains of
    w for a vector certified hard by the base lemmas."""
    start = tuple(sorted(w, reverse=True))
    if not start:
        return
    total = sum(start)
    hard_level = len(start) - 1 if total % 2 == 0 else len(start) - 2
    frontier = [(start, [])]
    seen = {start}
    while frontier and len(seen) < max_states:
        vec, chain = frontier.pop(0)
        if chain:  # the unsplit vector is covered by the direct lemma checks
            base = _base_hard_certificate(vec)
            if base is not None:
                certs.append(
                    Certificate(
                        hard_level,
                        CertificateSource.OBS_REDUCTION,
                        {"chain": [list(v) for v in chain + [vec]], "base": base.source.value},
                    )
                )
                return
        for x in sorted(set(vec), reverse=True):
            if x % 2 != 0 or x == 0:
                continue
            nxt = list(vec)
            nxt.remove(x)
            nxt.extend([x // 2, x // 2])
            nv = tuple(sorted(nxt, reverse=True))
            if nv not in seen:
                seen.add(nv)
                frontier.append((nv, chain + [vec]))


def certify_lower_bound(weights) -> list[Certificate]:
    """Certificates from every satisfied lemma hypothesis, best bound per
    source.  Empty when nothing applies."""
    w = strip_zeros(normalize(weights))
    if not w:
        return []
    certs: list[Certificate] = []
    _suly1(w, certs)
    _suly1forma(w, certs)
    _suly1cor(w, certs)
    _suly2(w, certs)
    _suly2cor(w, certs)
    _o1g(w, certs)
    _obs_reduction(w, certs)
    best: dict[CertificateSource, Certificate] = {}
    for c in certs:
        if c.source not in best or c.bound > best[c.source].bound:
            best[c.source] = c
    return sorted(best.values(), key=lambda c: (-c.bound, c.source.value))


def is_hard(weights) -> bool:
    """A vector is hard when it attains the trivial upper bound: k-1 for an
    even total, k-2 for an odd total."""
    w = normalize(weights)
    if not w:
        raise ValueError("hardness needs at least one ball")
    m = solve_weighted(w)
    total = sum(w)
    return m == (len(w) - 1 if total % 2 == 0 else len(w) - 2)


def hardness_upper_bound(weights) -> int:
    """Trivial upper bound m(w) <= k-1, improved to k-2 for odd totals."""
    w = normalize(weights)
    k = len(w)
    if k == 0:
        return 0
    if sum(w) % 2 == 1 and k >= 2:
        return k - 2
    return max(0, k - 1)


def search_obs_reverse_counterexample(max_total: int = 14, allow_terminal: bool = True):
    """Search for a counterexample to the reverse of the pair-merge
    observation: a non-hard (a, a, rest) whose merge (2a, rest) is hard.
    Returns the first one found, or None.  Terminal merges are vacuously
    hard for odd totals; pass allow_terminal=False to skip those degenerate
    witnesses.  The toolkit takes no position on the open question; this is
    evidence-gathering only."""
    from itertools import combinations_with_replacement

    for total in range(2, max_total + 1):
        for k in range(2, total + 1):
            for combo in combinations_with_replacement(range(1, total + 1), k):
                if sum(combo) != total:
                    continue
                w = tuple(sorted(combo, reverse=True))
                for a in set(w):
                    if w.count(a) < 2:
                        continue
                    merged = tuple(
                        sorted(list(w[: w.index(a)] + w[w.index(a) + 2:]) + [2 * a], reverse=True)
                    )
                    if not allow_terminal and weighted_terminal(strip_zeros(merged)) is not None:
                        continue
                    if is_hard(merged) and not is_hard(w):
                        return w, merged
    return None
