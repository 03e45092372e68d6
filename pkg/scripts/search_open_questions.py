#!/usr/bin/env python3
"""Evidence gathering for the open questions.  Takes no position; reports
whatever the search finds.

  * reverse pair-merge: a non-hard (a, a, rest) whose merge (2a, rest) is
    hard would refute the reverse of the forward hardness propagation;
  * tree floor: search small odd trees for m(T) < n - 3;
  * sparse optima: exact values of the hub construction vs its edge count.

Usage: python3 scripts/search_open_questions.py [--max-tree-n 11]
"""

import argparse
import time

from majority_game.bounds import popcount, search_obs_reverse_counterexample
from majority_game.constructions import build_minedge_graph
from majority_game.generators import free_trees
from majority_game.graphsolver import solve_graph


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-tree-n", type=int, default=11)
    parser.add_argument("--max-total", type=int, default=12)
    args = parser.parse_args()

    t0 = time.time()
    print(f"reverse pair-merge search (totals <= {args.max_total}):")
    for allow, label in ((True, "any"), (False, "non-terminal merges only")):
        found = search_obs_reverse_counterexample(max_total=args.max_total, allow_terminal=allow)
        if found is None:
            print(f"  [{label}] no counterexample found")
        else:
            w, merged = found
            print(f"  [{label}] counterexample: {w} is not hard but its merge {merged} is")

    print(f"\nodd-tree floor search (n <= {args.max_tree_n}):")
    worst = None
    for n in range(3, args.max_tree_n + 1, 2):
        for tree in free_trees(n):
            m = solve_graph(tree).value
            gap = n - m
            if worst is None or gap > worst[0]:
                worst = (gap, n, tuple(tree.sorted_edges))
            if m < n - 3:
                print(f"  n={n}: m(T) = {m} < n-3 for {tree.sorted_edges}")
        print(f"  n={n}: worst gap so far n - m = {worst[0]}")

    print("\nhub construction sizes (value = n - b(n) throughout):")
    for n in range(4, 13):
        built = build_minedge_graph(n)
        m = solve_graph(built.graph).value
        print(f"  n={n}: edges {len(built.graph.edges)} <= {n * (1 + popcount(n))},"
              f" m = {m} = n - b(n): {m == n - popcount(n)}")
    print(f"\ntotal {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
