"""Exact cyclic chromatic numbers via proper coloring of the cyclic-adjacency graph.

The search is a DSATUR branch and bound: the largest clique found greedily
is pre-colored ``0..q-1`` (breaking palette symmetry), vertices are then
picked by saturation, ties by degree and id, and a new color is only ever
opened as ``max_used + 1``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .plane_graph import PlaneGraph


class Exceeded(RuntimeError):
    """The node or time budget ran out before the search finished."""

    def __init__(self, best_upper: Optional[int], best_lower: int, nodes: int):
        super().__init__(
            f"search budget exceeded after {nodes} nodes "
            f"(bounds {best_lower}..{best_upper})"
        )
        self.best_upper = best_upper
        self.best_lower = best_lower
        self.nodes = nodes


class Infeasible(RuntimeError):
    """No proper coloring exists within the cap."""


@dataclass(frozen=True)
class CyclicAdjacencyGraph:
    vertex_count: int
    adjacency: tuple[frozenset[int], ...]
    clique_bound: int

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


@dataclass(frozen=True)
class OracleResult:
    """``chromatic_number`` is ``None`` when only a ``<= cap`` coloring was sought."""

    chromatic_number: Optional[int]
    coloring: tuple[int, ...]
    nodes: int

    @property
    def colors_used(self) -> int:
        return len(set(self.coloring))


def cyclic_adjacency_graph(G: PlaneGraph) -> CyclicAdjacencyGraph:
    return CyclicAdjacencyGraph(G.vertex_count, G.cyclic_adjacency, G.max_face_size)


def greedy_clique(adj: Sequence[frozenset[int]]) -> list[int]:
    best: list[int] = []
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    for seed in order:
        if len(adj[seed]) + 1 <= len(best):
            break
        clique = [seed]
        cand = set(adj[seed])
        while cand:
            v = min(cand, key=lambda x: (-len(adj[x] & cand), x))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def dsatur_greedy(adj: Sequence[frozenset[int]]) -> list[int]:
    n = len(adj)
    color = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (x for x in range(n) if color[x] < 0),
            key=lambda x: (len(seen[x]), len(adj[x]), -x),
        )
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for u in adj[v]:
            seen[u].add(c)
    return color


class _Budget:
    def __init__(self, node_budget: Optional[int], deadline: Optional[float]):
        self.nodes = 0
        self.node_budget = node_budget
        # node budget wins when both are given: reproducible runs
        self.deadline = None if node_budget is not None else deadline
        self.start = time.monotonic()

    def tick(self) -> bool:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            return False
        if self.deadline is not None and (self.nodes & 1023) == 0:
            if time.monotonic() - self.start > self.deadline:
                return False
        return True


class _OutOfBudget(Exception):
    pass


def _k_color(
    adj: Sequence[frozenset[int]], k: int, clique: Sequence[int], budget: _Budget
) -> Optional[list[int]]:
    n = len(adj)
    if len(clique) > k:
        return None
    color = [-1] * n
    # forb[v][c] = number of colored neighbors of v that carry c
    forb = [[0] * k for _ in range(n)]
    sat = [0] * n
    degree = [len(a) for a in adj]

    def assign(v: int, c: int) -> None:
        color[v] = c
        for u in adj[v]:
            row = forb[u]
            if row[c] == 0:
                sat[u] += 1
            row[c] += 1

    def unassign(v: int) -> None:
        c = color[v]
        color[v] = -1
        for u in adj[v]:
            row = forb[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1

    for c, v in enumerate(clique):
        assign(v, c)
    remaining = n - len(clique)

    def search(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        if not budget.tick():
            raise _OutOfBudget
        best = -1
        key = (-1, -1)
        for x in range(n):
            if color[x] < 0:
                kx = (sat[x], degree[x])
                if kx > key:
                    key, best = kx, x
        v = best
        if sat[v] >= k:
            return False
        row = forb[v]
        for c in range(min(k, used + 1)):
            if row[c]:
                continue
            assign(v, c)
            if search(remaining - 1, max(used, c + 1)):
                return True
            unassign(v)
        return False

    if search(remaining, len(clique)):
        return color
    return None


def exact_color(
    graph: CyclicAdjacencyGraph | Sequence[frozenset[int]],
    cap: Optional[int] = None,
    deadline: Optional[float] = None,
    node_budget: Optional[int] = None,
    minimize: bool = True,
) -> OracleResult:
    """Color ``graph`` properly with as few colors as possible (or ``<= cap``).

    Args:
        graph: a :class:`CyclicAdjacencyGraph` or plain adjacency sets.
        cap: largest palette allowed; ``None`` means unlimited.
        deadline: wall-clock budget in seconds.
        node_budget: search-node budget; overrides ``deadline``.
        minimize: when ``False`` any coloring within ``cap`` is accepted
            and ``chromatic_number`` is left unset.

    Raises:
        Infeasible: no coloring within ``cap`` exists.
        Exceeded: the budget ran out.
    """
    if isinstance(graph, CyclicAdjacencyGraph):
        adj = graph.adjacency
        hint = graph.clique_bound
    else:
        adj = tuple(frozenset(a) for a in graph)
        hint = 1 if adj else 0
    n = len(adj)
    if n == 0:
        return OracleResult(0, (), 0)
    clique = greedy_clique(adj)
    lower = max(len(clique), hint)
    greedy = dsatur_greedy(adj)
    upper = max(greedy) + 1
    if cap is not None and lower > cap:
        raise Infeasible(f"clique of size {lower} exceeds cap {cap}")
    if not minimize and cap is not None and upper <= cap:
        return OracleResult(None, tuple(greedy), 0)

    budget = _Budget(node_budget, deadline)
    best = greedy
    if minimize:
        targets = list(range(lower, upper))
    else:
        targets = [cap] if cap is not None and cap < upper else []
    for k in targets:
        if cap is not None and k > cap:
            break
        try:
            found = _k_color(adj, k, clique, budget)
        except _OutOfBudget:
            raise Exceeded(upper, k if minimize else lower, budget.nodes) from None
        if found is not None:
            return OracleResult(k if minimize else None, tuple(found), budget.nodes)
    if cap is not None and upper > cap:
        raise Infeasible(f"no proper coloring with {cap} colors")
    return OracleResult(upper if minimize else None, tuple(best), budget.nodes)


def cyclic_chromatic_number(
    G: PlaneGraph,
    cap: Optional[int] = None,
    deadline: Optional[float] = None,
    node_budget: Optional[int] = None,
) -> OracleResult:
    return exact_color(cyclic_adjacency_graph(G), cap, deadline, node_budget)
