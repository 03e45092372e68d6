"""Game-state semantics for the majority query game.

Vertices of a graph carry an unknown red/blue coloring.  The querier asks
edges and learns whether the endpoints share a color (SAME) or not (DIFF).
The answered queries partition the vertices into q-components; inside each
component the color classes are known up to a global flip, so a component
is stored as an unordered split into two sides.  The weight of a component
is the size difference of its sides.  All types here are immutable values
and all operations are pure functions.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property

RED = "R"
BLUE = "B"


class GameError(Exception):
    pass


class IllegalQueryError(GameError):
    pass


class UnsolvableGraphError(GameError):
    pass


class StrategyError(GameError):
    pass


class Answer(enum.Enum):
    SAME = "SAME"
    DIFF = "DIFF"


Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add(normalize_edge(u, v))
        return Graph(n, frozenset(norm))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def components(self) -> list[frozenset[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], {s}
            seen[s] = True
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.add(y)
                        stack.append(y)
            out.append(frozenset(comp))
        return out

    def is_majority_solvable(self) -> bool:
        """The game has an answer for every coloring iff the graph is
        connected (n even) or has at most two components (n odd)."""
        k = len(self.components())
        return k == 1 if self.n % 2 == 0 else k <= 2

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines += [f"{u} {v}" for u, v in self.sorted_edges]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "Graph":
        tokens = text.split()
        if len(tokens) < 2:
            raise ValueError("graph text needs a header line 'n m'")
        n, m = int(tokens[0]), int(tokens[1])
        vals = tokens[2:]
        if len(vals) != 2 * m:
            raise ValueError(f"expected {m} edges, found {len(vals) // 2}")
        edges = [(int(vals[2 * i]), int(vals[2 * i + 1])) for i in range(m)]
        return Graph.from_edges(n, edges)


def parse_coloring(text: str, n: int | None = None) -> str:
    c = text.strip().upper()
    if n is not None and len(c) != n:
        raise ValueError(f"coloring has length {len(c)}, expected {n}")
    if set(c) - {RED, BLUE}:
        raise ValueError("coloring must use only characters R and B")
    return c


def is_balanced(coloring: str) -> bool:
    return 2 * coloring.count(RED) == len(coloring)


@dataclass(frozen=True)
class Component:
    """A q-component: the two color-class sides, stored canonically.

    Canonical form puts the lexicographically smaller side first (the
    empty side, if any, sorts first), so states equal up to a color flip
    compare equal.
    """

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    @staticmethod
    def make(side1, side2) -> "Component":
        a, b = tuple(sorted(side1)), tuple(sorted(side2))
        if b < a:
            a, b = b, a
        return Component(a, b)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.side_a + self.side_b))

    @property
    def weight(self) -> int:
        return abs(len(self.side_a) - len(self.side_b))

    @property
    def heavy_side(self) -> tuple[int, ...]:
        if self.weight == 0:
            raise ValueError("balanced component has no heavy side")
        return self.side_a if len(self.side_a) > len(self.side_b) else self.side_b

    def min_vertex(self) -> int:
        return min(itertools.chain(self.side_a, self.side_b))


@dataclass(frozen=True)
class Outcome:
    """Either a majority vertex or the statement that none exists."""

    majority: int | None

    @staticmethod
    def majority_vertex(v: int) -> "Outcome":
        return Outcome(v)

    @staticmethod
    def no_majority() -> "Outcome":
        return Outcome(None)

    def __str__(self) -> str:
        return "OUTCOME NONE" if self.majority is None else f"OUTCOME MAJORITY {self.majority}"


@dataclass(frozen=True)
class QueryState:
    """Partition into q-components plus the set of answered queries."""

    graph: Graph
    components: tuple[Component, ...]
    queried: frozenset[Edge]

    def component_of(self, v: int) -> Component:
        return self.components[self.component_index(v)]

    def component_index(self, v: int) -> int:
        for i, comp in enumerate(self.components):
            if v in comp.side_a or v in comp.side_b:
                return i
        raise ValueError(f"vertex {v} not in any component")


def initial_state(graph: Graph) -> QueryState:
    comps = tuple(Component.make((v,), ()) for v in range(graph.n))
    return QueryState(graph, comps, frozenset())


def _canon_components(comps) -> tuple[Component, ...]:
    return tuple(sorted(comps, key=lambda c: c.min_vertex()))


def apply_query(state: QueryState, edge: Edge, answer: Answer) -> QueryState:
    """Merge the two endpoint components according to the answer.

    SAME unions the sides containing the endpoints; DIFF unions each with
    the opposite side.  Queries inside one component are rejected: their
    answer is already forced by transitivity.
    """
    u, v = edge
    e = normalize_edge(u, v)
    if e not in state.graph.edges:
        raise IllegalQueryError(f"edge {e} is not in the graph")
    iu = state.component_index(u)
    iv = state.component_index(v)
    if iu == iv:
        raise IllegalQueryError(f"edge {e} lies inside one q-component")
    cu, cv = state.components[iu], state.components[iv]
    u_side, u_other = (cu.side_a, cu.side_b) if u in cu.side_a else (cu.side_b, cu.side_a)
    v_side, v_other = (cv.side_a, cv.side_b) if v in cv.side_a else (cv.side_b, cv.side_a)
    if answer is Answer.SAME:
        merged = Component.make(u_side + v_side, u_other + v_other)
    else:
        merged = Component.make(u_side + v_other, u_other + v_side)
    rest = [c for i, c in enumerate(state.components) if i not in (iu, iv)]
    rest.append(merged)
    return QueryState(state.graph, _canon_components(rest), state.queried | {e})


def component_weights(state: QueryState) -> tuple[int, ...]:
    """Multiset of component weights, sorted descending.

    The sum is congruent to n mod 2 after every query.
    """
    return tuple(sorted((c.weight for c in state.components), reverse=True))


def count_consistent(state: QueryState) -> int:
    return 2 ** len(state.components)

def consistent_colorings(state: QueryState):
    """Yield every coloring consistent with the answers, each exactly once.

    One coloring per per-component flip choice; 2^(#components) in total.
    """
    comps = state.components
    for flips in itertools.product((False, True), repeat=len(comps)):
        colors = [RED] * state.graph.n
        for comp, flip in zip(comps, flips):
            a_color, b_color = (BLUE, RED) if flip else (RED, BLUE)
            for x in comp.side_a:
                colors[x] = a_color
            for x in comp.side_b:
                colors[x] = b_color
        yield "".join(colors)


def terminal_outcome(state: QueryState) -> Outcome | None:
    """The game's outcome if it is decided, else None.

    NoMajority iff every component is balanced; a majority vertex exists
    iff one component outweighs all others combined, in which case any
    vertex of its heavy side works (we return the smallest).
    """
    weights = [c.weight for c in state.components]
    total = sum(weights)
    if total == 0:
        return Outcome.no_majority()
    i = max(range(len(weights)), key=weights.__getitem__)
    if weights[i] > total - weights[i]:
        return Outcome.majority_vertex(min(state.components[i].heavy_side))
    return None


def coloring_outcome(coloring: str) -> Outcome:
    """True outcome of a fully known coloring."""
    r = coloring.count(RED)
    b = len(coloring) - r
    if r == b:
        return Outcome.no_majority()
    want = RED if r > b else BLUE
    return Outcome.majority_vertex(coloring.index(want))


def outcome_valid(state: QueryState, outcome: Outcome) -> bool:
    """Check an outcome claim against every consistent coloring."""
    n = state.graph.n
    for coloring in consistent_colorings(state):
        r = coloring.count(RED)
        if outcome.majority is None:
            if 2 * r != n:
                return False
        else:
            mine = coloring[outcome.majority]
            cnt = r if mine == RED else n - r
            if 2 * cnt <= n:
                return False
    return True
