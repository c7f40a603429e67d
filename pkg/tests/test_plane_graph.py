import pytest
from hypothesis import given

from cyclic_coloring.generator import cube, k4, octahedron, stacked_k4, wheel
from cyclic_coloring.plane_graph import (
    DanglingEdgeEnd,
    Disconnects,
    EulerViolation,
    LoopEdge,
    NotOnFace,
    ShortCycle,
    WouldCreateLoop,
    add_edge_in_face,
    build,
    class_check,
    cyclic_degree,
    cyclic_neighbors,
    delete_vertex,
    find_separating_short_cycle,
    from_faces,
    identify_vertices,
    in_class,
    is_separating,
    split_along_cycle,
    triangulate_face_fan,
)

from conftest import class_graphs, triangulations


def face_sizes(G):
    return sorted(len(f) for f in G.faces)


class TestBuild:
    def test_k4_faces(self):
        G = k4()
        assert (G.vertex_count, G.edge_count, G.face_count) == (4, 6, 4)
        assert face_sizes(G) == [3, 3, 3, 3]

    def test_w5_faces(self):
        assert face_sizes(wheel(5)) == [3, 3, 3, 3, 3, 5]

    def test_loop_rejected(self):
        with pytest.raises(LoopEdge):
            build(2, [(0, 1), (1, 1)], [[0], [0, 1, 1]])

    def test_unknown_edge_in_rotation(self):
        with pytest.raises(DanglingEdgeEnd):
            build(2, [(0, 1)], [[0], [0, 3]])

    def test_missing_edge_end(self):
        with pytest.raises(DanglingEdgeEnd):
            build(3, [(0, 1), (1, 2)], [[0], [0, 1], []])

    def test_disconnected(self):
        with pytest.raises(EulerViolation):
            build(4, [(0, 1), (2, 3)], [[0], [0], [1], [1]])

    def test_non_planar_rotation(self):
        # K4 with one rotation reversed is a torus embedding.
        G = k4()
        rots = [list(r) for r in G.rotations]
        rots[0].reverse()
        with pytest.raises(EulerViolation):
            build(4, list(G.edges), rots)

    def test_edge_triples_sorted_by_id(self):
        G = build(2, [(1, 0, 1), (0, 0, 1)], [[0, 1], [1, 0]])
        assert G.edge_count == 2
        assert face_sizes(G) == [2, 2]

    def test_degree_counts_parallel_edges(self):
        G = build(2, [(0, 1), (0, 1)], [[0, 1], [1, 0]])
        assert G.degree(0) == 2
        assert G.neighbors(0) == [1, 1]


class TestCyclicAdjacency:
    def test_k4(self):
        G = k4()
        assert all(cyclic_degree(G, v) == 3 for v in range(4))

    def test_w5_hub_and_rim(self):
        G = wheel(5)
        assert [cyclic_degree(G, v) for v in range(6)] == [5] * 6

    def test_cube_misses_only_antipode(self):
        G = cube()
        for v in range(8):
            assert cyclic_neighbors(G, v) == frozenset(range(8)) - {v, v ^ 7}


class TestClassCheck:
    def test_w6(self):
        r = class_check(wheel(6))
        assert (r.max_face_size, r.D) == (6, 6)
        assert r.in_class and r.minimal_preconditions

    def test_cube_big_faces_touch(self):
        r = class_check(cube())
        assert not r.big_faces_disjoint and not r.in_class

    def test_stacked_k4_separating_triangle(self):
        r = class_check(stacked_k4())
        assert r.in_class and r.separating_short_cycle is not None
        assert set(r.separating_short_cycle.vertices) == {0, 1, 2}

    def test_small_face_gives_D5(self):
        assert class_check(octahedron()).D == 5

    def test_in_class_agrees(self, fx):
        for G in fx.values():
            assert in_class(G) == class_check(G).in_class

    def test_facial_triangle_not_separating(self):
        G = k4()
        e = {frozenset(uv): i for i, uv in enumerate(G.edges)}
        cyc = ShortCycle((0, 1, 2), (e[frozenset((0, 1))], e[frozenset((1, 2))], e[frozenset((0, 2))]))
        assert not is_separating(G, cyc)


class TestSurgery:
    def test_delete_rim_vertex_of_w5(self):
        H = delete_vertex(wheel(5), 0)
        assert H.vertex_count == 5
        # Hole corners 1, 2, 3, 4 and the hub: (3-2) + (3-2) + (5-2) = 5.
        assert face_sizes(H) == [3, 3, 3, 5]
        assert sum(face_sizes(H)) == 2 * H.edge_count

    def test_delete_from_k4(self):
        H = delete_vertex(k4(), 3)
        assert (H.vertex_count, face_sizes(H)) == (3, [3, 3])

    def test_delete_cut_vertex(self):
        path = build(3, [(0, 1), (1, 2)], [[0], [0, 1], [1]])
        with pytest.raises(Disconnects):
            delete_vertex(path, 1)

    def test_chord_in_w5_outer_face(self):
        G = wheel(5)
        f = next(i for i, w in enumerate(G.faces) if len(w) == 5)
        H = add_edge_in_face(G, 0, 2, f)
        assert face_sizes(H) == [3] * 6 + [4]

    def test_chord_parallel_to_existing_edge(self):
        G = wheel(5)
        f = next(i for i, w in enumerate(G.faces) if len(w) == 5)
        H = add_edge_in_face(G, 0, 1, f)
        assert 2 in face_sizes(H)
        assert not class_check(H).in_class

    def test_chord_loop(self):
        G = wheel(5)
        with pytest.raises(WouldCreateLoop):
            add_edge_in_face(G, 1, 1, 0)

    def test_chord_off_face(self):
        G = wheel(5)
        tri = next(i for i, w in enumerate(G.face_vertices) if 5 in w and 0 in w)
        with pytest.raises(NotOnFace):
            add_edge_in_face(G, 0, 3, tri)

    @pytest.mark.parametrize("size", [3, 5, 8])
    def test_fan(self, size):
        G = wheel(size)
        f = next(i for i, w in enumerate(G.faces) if len(w) == size)
        H = triangulate_face_fan(G, f, 0)
        assert H.edge_count - G.edge_count == size - 3
        assert face_sizes(H) == [3] * (2 * size - 2)

    def test_identify_adjacent(self):
        with pytest.raises(WouldCreateLoop):
            identify_vertices(wheel(5), 0, 1)

    def test_identify_across_four_cycle(self):
        # a=0, x=1, a2=2, y=3 on a square; delete x, identify a with a2.
        C4 = from_faces(4, [(0, 1, 2, 3), (3, 2, 1, 0)])
        P = delete_vertex(C4, 1)
        H = identify_vertices(P, 0, 1)
        assert H.vertex_count == 2 and H.edge_count == 2
        assert all(u != v for u, v in H.edges)


class TestSplit:
    def test_stacked_k4_parts(self):
        G = stacked_k4()
        cyc = find_separating_short_cycle(G)
        parts = split_along_cycle(G, cyc)
        assert [p.vertex_count for p, _ in parts] == [4, 4]
        for part, orig in parts:
            assert set(cyc.vertices) <= set(orig)
            assert all(len(w) == 3 for w in part.faces)

    def test_digon_parts_collapse(self, fx):
        G = fx["digon_separator"]
        cyc = find_separating_short_cycle(G)
        assert len(cyc) == 2
        for part, orig in split_along_cycle(G, cyc):
            assert part.vertex_count == 3
            assert class_check(part).no_two_faces


@given(triangulations())
def test_face_size_sum_and_euler(G):
    assert sum(len(f) for f in G.faces) == 2 * G.edge_count
    assert G.vertex_count - G.edge_count + G.face_count == 2


@given(class_graphs())
def test_cyclic_adjacency_symmetric(G):
    for v in range(G.vertex_count):
        for u in cyclic_neighbors(G, v):
            assert v in cyclic_neighbors(G, u)


@given(triangulations())
def test_triangulation_cyclic_degree_is_degree(G):
    assert all(cyclic_degree(G, v) == G.degree(v) for v in range(G.vertex_count))


@given(triangulations(min_n=5))
def test_delete_vertex_keeps_invariants(G):
    H = delete_vertex(G, 0)
    assert sum(len(f) for f in H.faces) == 2 * H.edge_count
    assert H.vertex_count - H.edge_count + H.face_count == 2
    assert max(len(f) for f in H.faces) == G.degree(0)


@given(class_graphs())
def test_split_parts_cover_graph(G):
    cyc = find_separating_short_cycle(G)
    if cyc is None:
        return
    parts = split_along_cycle(G, cyc)
    seen = set()
    for part, orig in parts:
        assert part.vertex_count < G.vertex_count
        seen |= set(orig)
    assert seen == set(range(G.vertex_count))
