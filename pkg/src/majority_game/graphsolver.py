"""Exact m(G) by canonicalized minimax with a transposition table.

States are kept as sorted tuples of packed components (vertex bitmask plus
component weight).  Two successor weights are reachable from any
cross-component query (the sum and the absolute difference), and the game
value of a state depends only on the component partition and the weights,
so states that differ in their internal splits share one table entry.

Pruning: the weighted game on the current component weights is a
relaxation of the graph game (it allows every pair), so its exact value is
a lower bound; the querier loop stops as soon as a move meets it.
Evaluation of a move's second answer is skipped when its first answer
already makes the move no better than the current best.  Both cuts leave
table entries exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import weighted
from .core import (
    Answer,
    Edge,
    Graph,
    IllegalQueryError,
    Outcome,
    QueryState,
    StrategyError,
    UnsolvableGraphError,
    apply_query,
    initial_state,
    normalize_edge,
    terminal_outcome,
)
from .generators import is_path_in_order

SHIFT = 7  # weight field below the vertex mask; requires n < 2**SHIFT
WMASK = (1 << SHIFT) - 1


def _weighted_value(ws) -> int:
    return weighted._solve(tuple(sorted((x for x in ws if x > 0), reverse=True)))


def check_solvable(graph: Graph) -> None:
    if not graph.is_majority_solvable():
        raise UnsolvableGraphError(
            "majority is not determinable: graph must be connected (even n) "
            "or have at most two components (odd n)"
        )


@dataclass
class SolveResult:
    value: int
    nodes_expanded: int
    runtime_ms: float
    canonical: str
    table_entries: int


@dataclass(frozen=True)
class Transcript:
    graph: Graph
    moves: tuple[tuple[Edge, Answer], ...]
    outcome: Outcome

    def __len__(self) -> int:
        return len(self.moves)

    def to_text(self) -> str:
        lines = [f"QUERY {u} {v} -> {a.value}" for (u, v), a in self.moves]
        lines.append(str(self.outcome))
        return "\n".join(lines) + "\n"

    def replay(self) -> QueryState:
        state = initial_state(self.graph)
        for edge, ans in self.moves:
            state = apply_query(state, edge, ans)
        return state


class GameView:
    """Cheap read-only snapshot of a state for strategy code: component
    bitmasks and weights, no splits."""

    __slots__ = ("graph", "masks", "weights", "vertex_comp", "total")

    def __init__(self, graph: Graph, masks, weights):
        self.graph = graph
        self.masks = tuple(masks)
        self.weights = tuple(weights)
        vc = [-1] * graph.n
        for i, m in enumerate(self.masks):
            mm = m
            while mm:
                v = (mm & -mm).bit_length() - 1
                vc[v] = i
                mm &= mm - 1
        self.vertex_comp = tuple(vc)
        self.total = sum(self.weights)

    def comp_of(self, v: int) -> int:
        return self.vertex_comp[v]

    def size(self, i: int) -> int:
        return bin(self.masks[i]).count("1")

    @staticmethod
    def from_state(state: QueryState) -> "GameView":
        masks, ws = [], []
        for comp in state.components:
            m = 0
            for v in comp.side_a + comp.side_b:
                m |= 1 << v
            masks.append(m)
            ws.append(comp.weight)
        return GameView(state.graph, masks, ws)


def encode_state(state: QueryState) -> tuple[int, ...]:
    codes = []
    for comp in state.components:
        m = 0
        for v in comp.side_a + comp.side_b:
            m |= 1 << v
        codes.append((m << SHIFT) | comp.weight)
    return tuple(sorted(codes))


class GraphSolver:
    def __init__(self, graph: Graph, canonical: str = "auto", table_cap: int | None = None):
        check_solvable(graph)
        if graph.n >= (1 << SHIFT):
            raise ValueError(f"solver supports n < {1 << SHIFT}")
        self.graph = graph
        self.n = graph.n
        self.edges = graph.sorted_edges
        if canonical == "path" and not is_path_in_order(graph):
            raise ValueError("path canonical mode requires the 0-1-...-(n-1) path")
        if canonical == "auto":
            canonical = "path" if is_path_in_order(graph) else "generic"
        if canonical not in ("path", "generic"):
            raise ValueError(f"unknown canonical mode: {canonical}")
        self.canonical = canonical
        self.table: dict[tuple[int, ...], int] = {}
        self.table_cap = table_cap
        self.nodes = 0

    # -- state plumbing ------------------------------------------------

    def root_codes(self) -> tuple[int, ...]:
        return tuple(sorted(((1 << v) << SHIFT) | 1 for v in range(self.n)))

    def _mirror_mask(self, mask: int) -> int:
        out, top = 0, self.n - 1
        while mask:
            v = (mask & -mask).bit_length() - 1
            out |= 1 << (top - v)
            mask &= mask - 1
        return out

    def _key(self, codes: tuple[int, ...]) -> tuple[int, ...]:
        if self.canonical == "generic":
            return codes
        mirrored = tuple(
            sorted((self._mirror_mask(c >> SHIFT) << SHIFT) | (c & WMASK) for c in codes)
        )
        return codes if codes <= mirrored else mirrored

    @staticmethod
    def _terminal(codes) -> bool:
        total = wmax = 0
        for c in codes:
            w = c & WMASK
            total += w
            if w > wmax:
                wmax = w
        return total == 0 or wmax > total - wmax

    def _cross_pairs(self, codes):
        vc = [0] * self.n
        for i, c in enumerate(codes):
            m = c >> SHIFT
            while m:
                v = (m & -m).bit_length() - 1
                vc[v] = i
                m &= m - 1
        pairs = set()
        for u, v in self.edges:
            a, b = vc[u], vc[v]
            if a != b:
                pairs.add((a, b) if a < b else (b, a))
        return pairs

    @staticmethod
    def _merge_codes(codes, i: int, j: int, w: int) -> tuple[int, ...]:
        merged = (((codes[i] >> SHIFT) | (codes[j] >> SHIFT)) << SHIFT) | w
        rest = [c for t, c in enumerate(codes) if t != i and t != j]
        rest.append(merged)
        rest.sort()
        return tuple(rest)

    # -- search --------------------------------------------------------

    def _value(self, codes: tuple[int, ...]) -> int:
        key = self._key(codes)
        hit = self.table.get(key)
        if hit is not None:
            return hit
        if self._terminal(codes):
            self.table[key] = 0
            return 0
        self.nodes += 1
        weights = [c & WMASK for c in codes]
        lb = _weighted_value(weights)
        moves = []
        for i, j in self._cross_pairs(codes):
            wi, wj = weights[i], weights[j]
            rest = list(weights)
            rest.remove(wi)
            rest.remove(wj)
            lb_plus = _weighted_value(rest + [wi + wj])
            lb_minus = _weighted_value(rest + [abs(wi - wj)])
            est = 1 + max(lb_plus, lb_minus)
            moves.append((est, -(wi + wj), i, j, lb_plus, lb_minus))
        moves.sort()
        best = self.n  # any value is below n
        for est, _, i, j, lb_plus, lb_minus in moves:
            if est >= best:  # ordered by est: no later move can improve
                break
            wi, wj = weights[i], weights[j]
            plus = self._merge_codes(codes, i, j, wi + wj)
            minus = self._merge_codes(codes, i, j, abs(wi - wj))
            first, second = (minus, plus) if lb_minus >= lb_plus else (plus, minus)
            v1 = self._value(first)
            if 1 + v1 >= best:
                continue
            v2 = self._value(second)
            mv = 1 + max(v1, v2)
            if mv < best:
                best = mv
                if best <= lb:
                    break
        if self.table_cap is None or len(self.table) < self.table_cap:
            self.table[key] = best
        return best

    def solve(self) -> SolveResult:
        t0 = time.perf_counter()
        value = self._value(self.root_codes())
        ms = (time.perf_counter() - t0) * 1000.0
        return SolveResult(value, self.nodes, ms, self.canonical, len(self.table))

    def best_query(self, state: QueryState) -> Edge:
        """Optimal move in a state; ties go to the smallest canonical edge."""
        codes = encode_state(state)
        if self._terminal(codes):
            raise StrategyError("state is terminal; no query needed")
        weights = [c & WMASK for c in codes]
        pair_value: dict[tuple[int, int], int] = {}
        for i, j in self._cross_pairs(codes):
            wi, wj = weights[i], weights[j]
            plus = self._value(self._merge_codes(codes, i, j, wi + wj))
            minus = self._value(self._merge_codes(codes, i, j, abs(wi - wj)))
            pair_value[(i, j)] = 1 + max(plus, minus)
        target = min(pair_value.values())
        vc = [0] * self.n
        for i, c in enumerate(codes):
            m = c >> SHIFT
            while m:
                v = (m & -m).bit_length() - 1
                vc[v] = i
                m &= m - 1
        for u, v in self.edges:
            a, b = vc[u], vc[v]
            if a == b:
                continue
            if pair_value[(a, b) if a < b else (b, a)] == target:
                return (u, v)
        raise StrategyError("no optimal edge found")  # pragma: no cover


def solve_graph(graph: Graph, canonical: str = "auto", table_cap: int | None = None) -> SolveResult:
    """Exact minimum worst-case query count for the majority game on G."""
    return GraphSolver(graph, canonical, table_cap).solve()


def optimal_querier(graph: Graph, canonical: str = "auto"):
    """A deterministic querier achieving m(G) against every adversary."""
    solver = GraphSolver(graph, canonical)
    solver.solve()
    return solver.best_query


def answer_for_target(state: QueryState, edge: Edge, target: int) -> Answer:
    """Translate an adversary's chosen merge weight into SAME or DIFF for
    the concrete splits of the state; SAME is preferred on ties."""
    u, v = edge
    cu = state.component_of(u)
    cv = state.component_of(v)
    du = (len(cu.side_a) - len(cu.side_b)) * (1 if u in cu.side_a else -1)
    dv = (len(cv.side_a) - len(cv.side_b)) * (1 if v in cv.side_a else -1)
    if abs(du + dv) == target:
        return Answer.SAME
    if abs(du - dv) == target:
        return Answer.DIFF
    raise StrategyError(f"merge weight {target} unreachable for query {edge}")


def play(graph: Graph, querier, adversary) -> Transcript:
    """Run a full deterministic game; terminates because every query merges
    two components."""
    state = initial_state(graph)
    moves: list[tuple[Edge, Answer]] = []
    outcome = terminal_outcome(state)
    while outcome is None:
        edge = normalize_edge(*querier(state))
        view = GameView.from_state(state)
        if view.comp_of(edge[0]) == view.comp_of(edge[1]):
            raise IllegalQueryError(f"edge {edge} lies inside one q-component")
        target = adversary.choose_merge(view, edge)
        ans = answer_for_target(state, edge, target)
        state = apply_query(state, edge, ans)
        moves.append((edge, ans))
        outcome = terminal_outcome(state)
    return Transcript(graph, tuple(moves), outcome)


def forced_queries(graph: Graph, adversary) -> int:
    """Fewest queries any querier needs against the fixed adversary.

    Memoized on the packed state; sound because every adversary here
    answers as a function of the component partition and weights alone.
    """
    check_solvable(graph)
    memo: dict[tuple[int, ...], int] = {}
    edges = graph.sorted_edges

    def rec(codes: tuple[int, ...]) -> int:
        if GraphSolver._terminal(codes):
            return 0
        hit = memo.get(codes)
        if hit is not None:
            return hit
        masks = [c >> SHIFT for c in codes]
        ws = [c & WMASK for c in codes]
        view = GameView(graph, masks, ws)
        best = graph.n
        for u, v in edges:
            a, b = view.vertex_comp[u], view.vertex_comp[v]
            if a == b:
                continue
            target = adversary.choose_merge(view, (u, v))
            i, j = (a, b) if a < b else (b, a)
            succ = GraphSolver._merge_codes(codes, i, j, target)
            best = min(best, 1 + rec(succ))
        memo[codes] = best
        return best

    root = tuple(sorted(((1 << v) << SHIFT) | 1 for v in range(graph.n)))
    return rec(root)
