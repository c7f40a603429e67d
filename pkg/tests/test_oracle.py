import itertools

import pytest
from hypothesis import given

from cyclic_coloring.coloring import verify
from cyclic_coloring.generator import cube, icosahedron, k4, octahedron, wheel
from cyclic_coloring.oracle import (
    Exceeded,
    Infeasible,
    cyclic_adjacency_graph,
    cyclic_chromatic_number,
    dsatur_greedy,
    exact_color,
    greedy_clique,
)

from conftest import class_graphs


def brute_force_chi(adj):
    n = len(adj)
    for k in range(1, n + 1):
        for colors in itertools.product(range(k), repeat=n):
            if all(colors[u] != colors[v] for u in range(n) for v in adj[u]):
                return k
    return n


def test_k4_graph_is_k4():
    H = cyclic_adjacency_graph(k4())
    assert H.edge_count == 6


def test_w5_graph_is_k6():
    H = cyclic_adjacency_graph(wheel(5))
    assert H.edge_count == 15


def test_cube_graph_misses_antipodal_matching():
    H = cyclic_adjacency_graph(cube())
    missing = {(u, v) for u in range(8) for v in range(u + 1, 8) if v not in H.adjacency[u]}
    assert missing == {(v, v ^ 7) for v in range(4)}


@pytest.mark.parametrize("G,chi", [(k4(), 4), (octahedron(), 3), (cube(), 4)])
def test_known_values(G, chi):
    res = cyclic_chromatic_number(G)
    assert res.chromatic_number == chi
    assert verify(G, res.coloring, chi) == []


@pytest.mark.parametrize("G", [octahedron(), cube()])
def test_agrees_with_brute_force(G):
    assert brute_force_chi(G.cyclic_adjacency) == cyclic_chromatic_number(G).chromatic_number


@pytest.mark.parametrize("n", range(5, 13))
def test_wheels(n):
    assert cyclic_chromatic_number(wheel(n)).chromatic_number == n + 1


def test_cap_below_clique_is_infeasible():
    with pytest.raises(Infeasible):
        cyclic_chromatic_number(wheel(6), cap=6)


def test_cap_without_clique_certificate():
    # Every 4-face of the cube is a 4-clique of its cyclic graph.
    with pytest.raises(Infeasible):
        exact_color(cyclic_adjacency_graph(cube()), cap=3)


def test_budget_exhaustion_reports_bounds():
    # C7: clique bound 2, chromatic number 3, so proving it needs search.
    adj = [frozenset({(i + 1) % 7, (i - 1) % 7}) for i in range(7)]
    with pytest.raises(Exceeded) as info:
        exact_color(adj, node_budget=0)
    assert info.value.best_lower <= 3 <= info.value.best_upper


def test_non_minimizing_accepts_any_coloring_under_cap():
    res = exact_color(cyclic_adjacency_graph(icosahedron()), cap=6, minimize=False)
    assert res.chromatic_number is None
    assert verify(icosahedron(), res.coloring, 6) == []


def test_empty_graph():
    assert exact_color([]).chromatic_number == 0


def test_greedy_helpers():
    adj = cyclic_adjacency_graph(wheel(6)).adjacency
    clique = greedy_clique(adj)
    assert len(clique) == 7
    colors = dsatur_greedy(adj)
    assert all(colors[u] != colors[v] for u in range(7) for v in adj[u])


@given(class_graphs(max_n=14))
def test_bounds_on_class_graphs(G):
    res = cyclic_chromatic_number(G, node_budget=10**6)
    D = max(G.max_face_size, 5)
    assert G.max_face_size <= res.chromatic_number <= D + 1
    assert verify(G, res.coloring, res.chromatic_number) == []
