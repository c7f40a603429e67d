import pytest
from hypothesis import given

from cyclic_coloring.configurations import Kind
from cyclic_coloring.discharging import (
    NotTwoConnected,
    PreconditionFailed,
    apply_rules,
    audit,
    face_intervals,
    final_charges,
    initial_charges,
    rule_transfer,
)
from cyclic_coloring.generator import cube, icosahedron, k4, octahedron, ring_fixture, stacked_k4, wheel
from cyclic_coloring.plane_graph import build, class_check

from conftest import class_graphs, triangulations


def test_k4_initial():
    L = initial_charges(k4())
    assert L.vertex_charge == (-3,) * 4 and L.face_charge == (0,) * 4 and L.total == -12


def test_octahedron_initial():
    L = initial_charges(octahedron())
    assert L.vertex_charge == (-2,) * 6 and L.total == -12


def test_w5_initial():
    L = initial_charges(wheel(5))
    assert L.vertex_charge[5] == -1 and L.vertex_charge[:5] == (-3,) * 5
    assert sorted(L.face_charge) == [0, 0, 0, 0, 0, 4]


def test_w5_rules_do_nothing():
    G = wheel(5)
    assert final_charges(G).vertex_charge == initial_charges(G).vertex_charge


def test_transfer_amounts():
    assert [rule_transfer(d) for d in range(3, 8)] == [0, 2, 1, 0, 0]


def test_five_face_with_one_4_and_one_5_vertex():
    G = ring_fixture((4, 5, 6, 6, 6))
    end = final_charges(G)
    f = next(i for i, w in enumerate(G.faces) if len(w) == 5)
    assert end.face_charge[f] == 4 - 2 - 1 == 1


def test_rules_need_initial_phase():
    G = wheel(5)
    with pytest.raises(ValueError):
        apply_rules(G, final_charges(G))


def test_rules_need_two_connected():
    star = build(3, [(0, 1), (0, 2)], [[0, 1], [0], [1]])
    with pytest.raises(NotTwoConnected):
        final_charges(star)


class TestIntervals:
    def test_mixed_runs(self):
        G = ring_fixture((4, 6, 5, 5, 6, 6))
        f = next(i for i, w in enumerate(G.faces) if len(w) == 6)
        iv = face_intervals(G, f)
        assert sorted(len(r) for r in iv.runs) == [1, 2]
        assert not iv.full_boundary and iv.inequality_holds

    def test_no_receivers(self):
        G = wheel(6)
        f = next(i for i, w in enumerate(G.faces) if len(w) == 6)
        assert face_intervals(G, f).runs == ()

    def test_all_five_vertices(self):
        G = icosahedron()
        iv = face_intervals(G, 0)
        assert iv.full_boundary and iv.inequality_holds


def test_audit_octahedron_with_D5():
    rep = audit(octahedron(), 5)
    assert rep.D == 5 and len(rep.entries) == 6
    assert all(e.final == -2 and e.witness.kind is Kind.DEG45_ALL_TRIANGLES
               for e in rep.entries)
    assert rep.unexplained_negatives == []


def test_audit_w5():
    rep = audit(wheel(5))
    rim = [e for e in rep.entries if e.element == "v" and e.ident < 5]
    assert len(rim) == 5
    assert all(e.final == -3 and e.witness.kind is Kind.MIN_DEG for e in rim)
    assert rep.unexplained_negatives == []


def test_audit_line_format():
    line = audit(wheel(5)).entries[0].line()
    assert line == "v 0 -3 -3 MinDeg"


@pytest.mark.parametrize("G", [cube(), stacked_k4()])
def test_audit_refuses_bad_inputs(G):
    with pytest.raises(PreconditionFailed):
        audit(G)


def test_audit_refuses_small_D():
    with pytest.raises(PreconditionFailed):
        audit(wheel(7), 6)


def test_fixture_audits(fx):
    for name in ("CFG4", "CFG5", "run44", "run454", "run455", "run545"):
        G = fx[name]
        if class_check(G).minimal_preconditions:
            assert audit(G).unexplained_negatives == [], name


@given(triangulations())
def test_total_is_minus_twelve(G):
    assert initial_charges(G).total == -12
    assert final_charges(G).total == -12


@given(class_graphs())
def test_rules_conserve_charge_and_spare_big_degrees(G):
    if not class_check(G).is_two_connected:
        return
    start, end = initial_charges(G), final_charges(G)
    assert start.total == end.total == -12
    on_big = {v for w in G.face_vertices if len(w) >= 4 for v in w}
    for v, d in enumerate(G.degrees):
        if d >= 6:
            assert end.vertex_charge[v] == start.vertex_charge[v]
        elif d in (4, 5) and v in on_big:
            assert end.vertex_charge[v] >= 0


@given(class_graphs())
def test_interval_inequality(G):
    for f, w in enumerate(G.faces):
        if len(w) >= 4 and len(set(G.face_vertices[f])) == len(w):
            assert face_intervals(G, f).inequality_holds


@given(class_graphs())
def test_audit_explains_everything(G):
    if class_check(G).minimal_preconditions:
        assert audit(G).unexplained_negatives == []
