"""Reductions for each configuration kind, and replay of their extension plans.

A reduction turns ``G`` into a smaller ``G'`` plus an :class:`ExtensionPlan`.
Given any cyclic coloring of ``G'`` the plan projects colors back through
the vertex map and runs its directives in order; every directive picks its
color at run time against the colored cyclic neighbors in ``G``, and the
result only leaves :func:`extend_coloring` after passing the verifier.

``G'`` is always passed through digon collapse (a 2-face keeps only one of
its two edges; every face size and cyclic adjacency is unchanged) and must
stay in the class with maximum face size at most ``D``, otherwise the match
is :class:`Inapplicable`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .coloring import NoColorAvailable, lowest_available, verify
from .configurations import ConfigurationMatch, Kind
from .plane_graph import Dart, Editor, PlaneGraph, PlaneGraphError, in_class


class Inapplicable(Exception):
    """The match cannot be reduced on this graph (loops, repeated corners...)."""


class ReductionExtensionFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class AssignLowest:
    v: int
    extra_forbidden: tuple[int, ...] = ()


@dataclass(frozen=True)
class AssignPreferredElseLowest:
    v: int
    source: int
    guards: tuple[int, ...]


@dataclass(frozen=True)
class RecolorIfConflict:
    v: int
    conflict_set: tuple[int, ...]


@dataclass(frozen=True)
class CopyColor:
    v: int
    source: int


Directive = Union[AssignLowest, AssignPreferredElseLowest, RecolorIfConflict, CopyColor]


@dataclass
class ExtensionPlan:
    """How to lift a coloring of ``G'`` back to ``G``.

    ``vertex_map`` sends each surviving vertex of ``G`` (identified pairs
    included) to its id in ``G'``; ``removed`` vertices are colored by the
    directives.
    """

    directives: list[Directive]
    removed: tuple[int, ...]
    vertex_map: dict[int, int] = field(default_factory=dict)
    identified: dict[int, tuple[int, int]] = field(default_factory=dict)


@dataclass
class Reduction:
    match: ConfigurationMatch
    reduced: PlaneGraph
    plan: ExtensionPlan
    original: PlaneGraph

    def log_line(self) -> str:
        roles = " ".join(f"{k}={v}" for k, v in self.match.roles.items())
        return (f"reduce {self.match.kind} {roles} "
                f"n={self.original.vertex_count} n'={self.reduced.vertex_count}")


# -- surgery helpers --------------------------------------------------------------


def _face_with(faces: Sequence[list[Dart]], *vertices: int) -> list[Dart]:
    for face in faces:
        xs = [x for _, x in face]
        if all(xs.count(v) == 1 for v in vertices):
            return face
    raise Inapplicable(f"no face carries {vertices} exactly once each")


def _finish(
    G: PlaneGraph, ed: Editor, match: ConfigurationMatch, plan: ExtensionPlan,
    aliases: Optional[dict[int, int]] = None,
) -> Reduction:
    ed.collapse_digons()
    try:
        Gp, vmap = ed.to_graph()
    except PlaneGraphError as exc:
        raise Inapplicable(str(exc)) from exc
    if not in_class(Gp) or Gp.max_face_size > match.D:
        raise Inapplicable("reduced graph left the class")
    if Gp.vertex_count >= G.vertex_count:
        raise Inapplicable("reduction did not shrink the graph")
    plan.vertex_map = dict(vmap)
    for merged_away, keeper in (aliases or {}).items():
        plan.vertex_map[merged_away] = vmap[keeper]
        plan.identified[vmap[keeper]] = (keeper, merged_away)
    return Reduction(match, Gp, plan, G)


def _delete_then_fan(G: PlaneGraph, match: ConfigurationMatch, gone: list[int],
                     apex: int, chord: Optional[tuple[int, int]] = None) -> Editor:
    ed = Editor.from_graph(G)
    holes = ed.delete_vertices(gone)
    if chord is None:
        face = _face_with(holes, apex)
    else:
        u, w = chord
        if u == w:
            raise Inapplicable("chord would be a loop")
        hole = _face_with(holes, u, w, apex)
        _, first, second = ed.add_edge(u, w, hole)
        face = _face_with([first, second], apex)
    try:
        ed.fan(face, apex)
    except PlaneGraphError as exc:
        raise Inapplicable(str(exc)) from exc
    return ed


# -- reductions -------------------------------------------------------------------


def reduce_min_degree(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    v = match["v"]
    ed = Editor.from_graph(G)
    holes = ed.delete_vertices([v])
    if match.case == "big-face" and G.degree(v) == 3:
        w, w2 = match["w"], match["w'"]
        if w == w2:
            raise Inapplicable("w and w' coincide")
        try:
            ed.add_edge(w, w2, _face_with(holes, w, w2))
        except PlaneGraphError as exc:
            raise Inapplicable(str(exc)) from exc
    return _finish(G, ed, match, ExtensionPlan([AssignLowest(v)], (v,)))


def reduce_deg45_triangulated(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    v = match["v"]
    ed = Editor.from_graph(G)
    holes = ed.delete_vertices([v])
    if len(holes) != 1:
        raise Inapplicable("deletion did not leave a single hole")
    hole = holes[0]
    xs = [x for _, x in hole]
    for apex in sorted(set(xs)):
        if xs.count(apex) == 1:
            ed.fan(hole, apex)
            return _finish(G, ed, match, ExtensionPlan([AssignLowest(v)], (v,)))
    raise Inapplicable("no loop-free fan apex")


def reduce_4face_4vertex(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    """Delete ``v``, cut the triangle ``w v' w'`` off the hole, fan the rest from ``w``.

    A plain fan from ``v'`` would leave ``w`` and ``w'`` (which share the
    4-face in ``G``) without a common face in ``G'``, so their colors could
    collide after the lift.  The chord ``w w'`` keeps them apart.
    """
    v, w, w2, apex = match["v"], match["w"], match["w'"], match["v'"]
    ed = Editor.from_graph(G)
    holes = ed.delete_vertices([v])
    try:
        _, first, second = ed.add_edge(w, w2, _face_with(holes, w, w2, apex))
        rest = first if apex not in Editor.corners(first) else second
        if apex in Editor.corners(rest):
            raise Inapplicable("chord did not cut off the apex")
        ed.fan(rest, w)
    except PlaneGraphError as exc:
        raise Inapplicable(str(exc)) from exc
    return _finish(G, ed, match, ExtensionPlan([AssignLowest(v)], (v,)))


def reduce_4face_three5(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    v1, v2, v3 = match["v1"], match["v2"], match["v3"]
    apex = match["v'"]
    if apex in (v1, v2, v3):
        raise Inapplicable("apex lies on the removed run")
    ed = _delete_then_fan(G, match, [v1, v2, v3], apex)
    plan = ExtensionPlan(
        [CopyColor(v3, apex), AssignLowest(v1), AssignLowest(v2)], (v1, v2, v3))
    return _finish(G, ed, match, plan)


def reduce_5face_adjacent_low(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    x, a, a2, b, b2 = match["x"], match["a"], match["a'"], match["b"], match["b'"]
    c, d = match["c"], match["d"]
    if len({x, a, a2, b, b2, c, d}) != 7:
        raise Inapplicable("roles are not distinct")
    ed = Editor.from_graph(G)
    holes = ed.delete_vertices([x])
    try:
        ed.identify(a, a2, _face_with(holes, a, a2))
        ed.identify(b, b2, _face_with(ed.faces(), b, b2, c))
    except PlaneGraphError as exc:
        raise Inapplicable(str(exc)) from exc
    plan = ExtensionPlan([RecolorIfConflict(c, (a2, d)), AssignLowest(x)], (x,))
    return _finish(G, ed, match, plan, aliases={a2: a, b2: b})


def _reduce_run(G: PlaneGraph, match: ConfigurationMatch, width: int,
                order: Sequence[int]) -> Reduction:
    vs = match.boundary()
    apex = match["v'"]
    gone = vs[:width]
    if apex in vs:
        raise Inapplicable("apex lies on the face")
    ed = _delete_then_fan(G, match, gone, apex, chord=(vs[width], vs[-1]))
    a_target = vs[width - 1]
    directives: list[Directive] = [
        AssignPreferredElseLowest(a_target, apex, tuple(vs[width:]))]
    directives += [AssignLowest(vs[i]) for i in order]
    return _finish(G, ed, match, ExtensionPlan(directives, tuple(gone)))


def reduce_run_44(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    return _reduce_run(G, match, 2, [0])


def reduce_run_45x(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    return _reduce_run(G, match, 3, [1, 0])


def reduce_run_545(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    return _reduce_run(G, match, 3, [0, 1])


REDUCERS = {
    Kind.MIN_DEG: reduce_min_degree,
    Kind.DEG45_ALL_TRIANGLES: reduce_deg45_triangulated,
    Kind.FOUR_FACE_4VERTEX: reduce_4face_4vertex,
    Kind.FOUR_FACE_THREE5: reduce_4face_three5,
    Kind.FIVE_FACE_ADJ_LOW: reduce_5face_adjacent_low,
    Kind.RUN44: reduce_run_44,
    Kind.RUN454_OR_455: reduce_run_45x,
    Kind.RUN545: reduce_run_545,
}


def reduce(G: PlaneGraph, match: ConfigurationMatch) -> Reduction:
    return REDUCERS[match.kind](G, match)


# -- extension ----------------------------------------------------------------------


def extend_coloring(
    G: PlaneGraph, plan: ExtensionPlan, reduced_coloring: Sequence[int], k: int
) -> list[int]:
    """Lift a coloring of the reduced graph to ``G`` by replaying ``plan``.

    Raises:
        ReductionExtensionFailure: a directive found no usable color, or the
            lifted coloring failed verification.
    """
    colors: list[Optional[int]] = [None] * G.vertex_count
    for v, w in plan.vertex_map.items():
        colors[v] = reduced_coloring[w]

    def taken_by_neighbors(v: int) -> set[int]:
        return {colors[u] for u in G.cyclic_adjacency[v] if colors[u] is not None}

    try:
        for step in plan.directives:
            if isinstance(step, AssignLowest):
                colors[step.v] = lowest_available(G, colors, step.v, k, step.extra_forbidden)
            elif isinstance(step, AssignPreferredElseLowest):
                a = colors[step.source]
                guard = {colors[u] for u in step.guards}
                if a is not None and a not in guard and a not in taken_by_neighbors(step.v):
                    colors[step.v] = a
                else:
                    colors[step.v] = lowest_available(G, colors, step.v, k)
            elif isinstance(step, RecolorIfConflict):
                mine = colors[step.v]
                if mine is None or mine in {colors[u] for u in step.conflict_set}:
                    colors[step.v] = None
                    colors[step.v] = lowest_available(G, colors, step.v, k)
            elif isinstance(step, CopyColor):
                a = colors[step.source]
                if a is None or a in taken_by_neighbors(step.v):
                    raise ReductionExtensionFailure(
                        f"cannot copy color of {step.source} to {step.v}")
                colors[step.v] = a
            else:  # pragma: no cover
                raise TypeError(f"unknown directive {step!r}")
    except NoColorAvailable as exc:
        raise ReductionExtensionFailure(str(exc)) from exc
    if any(c is None for c in colors):
        raise ReductionExtensionFailure("plan left vertices uncolored")
    bad = verify(G, colors, k)
    if bad:
        raise ReductionExtensionFailure(f"lifted coloring has {len(bad)} violations")
    return colors  # type: ignore[return-value]
