"""Plane graphs stored as rotation systems over darts.

Edge ``e = (u, v)`` owns two darts: ``2*e`` leaves ``u`` and ``2*e + 1``
leaves ``v``.  ``rotations[v]`` lists the edge ids around ``v`` in clockwise
order.  Faces are traced with the usual rule: the dart following ``d`` on
its face is the rotation successor of ``reverse(d)`` at the head of ``d``.

Graphs are immutable.  Every surgery returns a fresh :class:`PlaneGraph`;
vertex ids are re-packed so that surviving vertices keep their relative
order.  Multi-step surgeries go through :class:`Editor`, which keeps the
original labels until :meth:`Editor.to_graph` compacts them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence


class PlaneGraphError(ValueError):
    """Base class for invalid embeddings and refused surgeries."""


class LoopEdge(PlaneGraphError):
    pass


class DanglingEdgeEnd(PlaneGraphError):
    pass


class EulerViolation(PlaneGraphError):
    pass


class Disconnects(PlaneGraphError):
    pass


class NotOnFace(PlaneGraphError):
    pass


class WouldCreateLoop(PlaneGraphError):
    pass


@dataclass(frozen=True)
class PlaneGraph:
    """A connected, loopless plane multigraph given by its rotation system.

    Use :func:`build` (or :func:`from_faces`) rather than calling the
    constructor directly; those validate the embedding.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]

    # -- darts ---------------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def dart(self, e: int, v: int) -> int:
        """The dart of edge ``e`` leaving ``v``."""
        return 2 * e if self.edges[e][0] == v else 2 * e + 1

    def origin(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    def head(self, d: int) -> int:
        return self.edges[d >> 1][1 - (d & 1)]

    @cached_property
    def _position(self) -> list[int]:
        pos = [0] * (2 * len(self.edges))
        for v, rot in enumerate(self.rotations):
            for i, e in enumerate(rot):
                pos[self.dart(e, v)] = i
        return pos

    def next_dart(self, d: int) -> int:
        r = d ^ 1
        h = self.edges[r >> 1][r & 1]
        rot = self.rotations[h]
        e = rot[(self._position[r] + 1) % len(rot)]
        return self.dart(e, h)

    # -- faces ---------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Faces as dart cycles, numbered by their smallest dart."""
        seen = [False] * (2 * len(self.edges))
        faces = []
        for start in range(len(seen)):
            if seen[start]:
                continue
            walk = []
            d = start
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = self.next_dart(d)
            faces.append(tuple(walk))
        return tuple(faces)

    @cached_property
    def dart_face(self) -> list[int]:
        out = [0] * (2 * len(self.edges))
        for f, walk in enumerate(self.faces):
            for d in walk:
                out[d] = f
        return out

    @cached_property
    def face_vertices(self) -> tuple[tuple[int, ...], ...]:
        """Boundary corners of every face, in tracing order."""
        return tuple(tuple(self.origin(d) for d in walk) for walk in self.faces)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    @cached_property
    def max_face_size(self) -> int:
        return max(len(walk) for walk in self.faces)

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        """Faces around each vertex, one entry per corner, in rotation order."""
        out = []
        for v, rot in enumerate(self.rotations):
            out.append(tuple(self.dart_face[self.dart(e, v)] for e in rot))
        return tuple(out)

    # -- vertex queries ------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(rot) for rot in self.rotations)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors in rotation order; repeated for parallel edges."""
        return [self.head(self.dart(e, v)) for e in self.rotations[v]]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def cyclic_adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for corners in self.face_vertices:
            members = set(corners)
            for v in members:
                adj[v] |= members
        for v in range(self.vertex_count):
            adj[v].discard(v)
        return tuple(frozenset(s) for s in adj)

    def apex(self, d: int) -> Optional[int]:
        """Third corner of the face holding dart ``d``, if it is a 3-face."""
        walk = self.faces[self.dart_face[d]]
        if len(walk) != 3:
            return None
        i = walk.index(d)
        return self.origin(walk[(i + 2) % 3])

    def edge_records(self) -> list[tuple[int, int, int]]:
        return [(e, u, v) for e, (u, v) in enumerate(self.edges)]


def cyclic_neighbors(G: PlaneGraph, v: int) -> frozenset[int]:
    """Vertices other than ``v`` sharing a face with ``v``."""
    return G.cyclic_adjacency[v]


def cyclic_degree(G: PlaneGraph, v: int) -> int:
    return len(G.cyclic_adjacency[v])


# -- construction -------------------------------------------------------------


def _is_connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == n


def build(
    vertex_count: int,
    edges: Iterable[Sequence[int]],
    rotations: Sequence[Sequence[int]],
) -> PlaneGraph:
    """Validate rotation data and return the embedded graph.

    ``edges`` holds ``(eid, u, v)`` records (plain ``(u, v)`` pairs are
    accepted and numbered in order).  Edge ids must be dense ``0..m-1``.

    Raises:
        LoopEdge: an edge has equal endpoints.
        DanglingEdgeEnd: rotations do not list every edge end exactly once.
        EulerViolation: the data is not a sphere embedding of a connected
            graph.
    """
    records = [tuple(r) for r in edges]
    pairs: list[tuple[int, int]]
    if records and len(records[0]) == 3:
        records.sort()
        if [r[0] for r in records] != list(range(len(records))):
            raise DanglingEdgeEnd("edge ids must be dense 0..m-1")
        pairs = [(int(r[1]), int(r[2])) for r in records]
    else:
        pairs = [(int(r[0]), int(r[1])) for r in records]
    n = int(vertex_count)
    if n < 2:
        raise EulerViolation("a plane graph needs at least one edge")
    if len(rotations) != n:
        raise DanglingEdgeEnd(f"expected {n} rotations, got {len(rotations)}")
    for e, (u, v) in enumerate(pairs):
        if not (0 <= u < n and 0 <= v < n):
            raise DanglingEdgeEnd(f"edge {e} has an endpoint out of range")
        if u == v:
            raise LoopEdge(f"edge {e} is a loop at vertex {u}")

    seen = [[False, False] for _ in pairs]
    for v, rot in enumerate(rotations):
        for e in rot:
            if not 0 <= e < len(pairs):
                raise DanglingEdgeEnd(f"rotation of {v} references unknown edge {e}")
            a, b = pairs[e]
            if v not in (a, b):
                raise DanglingEdgeEnd(f"edge {e} is not incident with {v}")
            side = 0 if v == a else 1
            if seen[e][side]:
                raise DanglingEdgeEnd(f"edge {e} appears twice around {v}")
            seen[e][side] = True
    for e, (s0, s1) in enumerate(seen):
        if not (s0 and s1):
            raise DanglingEdgeEnd(f"edge {e} is missing from a rotation")

    if not _is_connected(n, pairs):
        raise EulerViolation("graph is disconnected")
    G = PlaneGraph(n, tuple(pairs), tuple(tuple(int(e) for e in rot) for rot in rotations))
    if n - len(pairs) + len(G.faces) != 2:
        raise EulerViolation(
            f"V - E + F = {n} - {len(pairs)} + {len(G.faces)} != 2"
        )
    return G


def from_faces(vertex_count: int, faces: Iterable[Sequence[int]]) -> PlaneGraph:
    """Build a simple plane graph from consistently oriented face cycles.

    Every directed boundary step ``x -> y`` must occur in exactly one face
    and its reverse in another.  Edge ids follow the sorted order of the
    vertex pairs, and each rotation starts at its smallest neighbor.
    """
    succ: list[dict[int, int]] = [{} for _ in range(vertex_count)]
    directed: set[tuple[int, int]] = set()
    for cyc in faces:
        k = len(cyc)
        for i in range(k):
            x, y = cyc[i], cyc[(i + 1) % k]
            if x == y:
                raise LoopEdge(f"face step {x} -> {y} is a loop")
            if (x, y) in directed:
                raise EulerViolation(f"directed step {x} -> {y} used twice")
            directed.add((x, y))
            succ[y][x] = cyc[(i + 2) % k]
    for x, y in directed:
        if (y, x) not in directed:
            raise EulerViolation(f"step {x} -> {y} has no reverse")
    pairs = sorted({(min(x, y), max(x, y)) for x, y in directed})
    eid = {p: i for i, p in enumerate(pairs)}
    rotations = []
    for v in range(vertex_count):
        if not succ[v]:
            raise EulerViolation(f"vertex {v} lies on no face")
        start = min(succ[v])
        order = [start]
        w = succ[v][start]
        while w != start:
            order.append(w)
            if len(order) > len(succ[v]):
                break
            w = succ[v][w]
        if len(order) != len(succ[v]):
            raise EulerViolation(f"faces around vertex {v} do not form a disk")
        rotations.append([eid[(min(v, u), max(v, u))] for u in order])
    return build(vertex_count, pairs, rotations)


# -- structural checks ---------------------------------------------------------


@dataclass(frozen=True)
class ShortCycle:
    """A closed walk ``vertices[0] -> vertices[1] -> ...`` along ``edges``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ClassReport:
    max_face_size: int
    D: int
    loopless: bool
    no_two_faces: bool
    big_faces_disjoint: bool
    is_two_connected: bool
    separating_short_cycle: Optional[ShortCycle]

    @property
    def in_class(self) -> bool:
        """Loopless, no 2-faces, faces of size >= 4 pairwise vertex-disjoint."""
        return self.loopless and self.no_two_faces and self.big_faces_disjoint

    @property
    def minimal_preconditions(self) -> bool:
        """The structure a smallest counterexample would have to have."""
        return (
            self.in_class
            and self.is_two_connected
            and self.separating_short_cycle is None
        )


def is_two_connected(G: PlaneGraph) -> bool:
    """A connected plane graph is 2-connected iff every face is a cycle."""
    return all(len(set(c)) == len(c) for c in G.face_vertices)


def big_faces_disjoint(G: PlaneGraph) -> bool:
    owner: dict[int, int] = {}
    for f, corners in enumerate(G.face_vertices):
        if len(corners) < 4:
            continue
        for v in corners:
            if owner.setdefault(v, f) != f:
                return False
    return True


def cycle_sides(G: PlaneGraph, cycle: ShortCycle) -> tuple[list[list[int]], list[list[int]]]:
    """Split each cycle vertex's rotation into the edges on either side.

    Returns two lists indexed like ``cycle.vertices``: the edges strictly
    clockwise between the outgoing and incoming cycle edge (side A), and
    those between incoming and outgoing (side B).
    """
    k = len(cycle.vertices)
    side_a: list[list[int]] = []
    side_b: list[list[int]] = []
    for i, x in enumerate(cycle.vertices):
        e_out = cycle.edges[i]
        e_in = cycle.edges[i - 1]
        rot = G.rotations[x]
        m = len(rot)
        p_out, p_in = rot.index(e_out), rot.index(e_in)
        a, b = [], []
        j = (p_out + 1) % m
        while j != p_in:
            a.append(rot[j])
            j = (j + 1) % m
        j = (p_in + 1) % m
        while j != p_out:
            b.append(rot[j])
            j = (j + 1) % m
        side_a.append(a)
        side_b.append(b)
    assert k == len(side_a)
    return side_a, side_b


def is_separating(G: PlaneGraph, cycle: ShortCycle) -> bool:
    """True iff both open regions bounded by the cycle hold a vertex."""
    members = set(cycle.vertices)
    side_a, side_b = cycle_sides(G, cycle)

    def occupied(sides: list[list[int]]) -> bool:
        for x, arc in zip(cycle.vertices, sides):
            for e in arc:
                if G.head(G.dart(e, x)) not in members:
                    return True
        return False

    return occupied(side_a) and occupied(side_b)


def short_cycles(G: PlaneGraph) -> Iterable[ShortCycle]:
    """All 2-cycles, then all triangles, in canonical id order."""
    between: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in enumerate(G.edges):
        between.setdefault((min(u, v), max(u, v)), []).append(e)
    for (u, v), es in sorted(between.items()):
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                yield ShortCycle((u, v), (es[i], es[j]))
    adj = G.adjacency
    for u in range(G.vertex_count):
        for v in sorted(w for w in adj[u] if w > u):
            for w in sorted(x for x in adj[u] & adj[v] if x > v):
                for e1 in between[(u, v)]:
                    for e2 in between[(v, w)]:
                        for e3 in between[(u, w)]:
                            yield ShortCycle((u, v, w), (e1, e2, e3))


def find_separating_short_cycle(G: PlaneGraph) -> Optional[ShortCycle]:
    for cyc in short_cycles(G):
        if is_separating(G, cyc):
            return cyc
    return None


def in_class(G: PlaneGraph) -> bool:
    """Class membership alone, skipping the separating-cycle search."""
    return (
        all(u != v for u, v in G.edges)
        and all(len(w) != 2 for w in G.faces)
        and big_faces_disjoint(G)
    )


def class_check(G: PlaneGraph) -> ClassReport:
    """Report face-size, disjointness and connectivity structure of ``G``."""
    delta = G.max_face_size
    return ClassReport(
        max_face_size=delta,
        D=max(delta, 5),
        loopless=all(u != v for u, v in G.edges),
        no_two_faces=all(len(w) != 2 for w in G.faces),
        big_faces_disjoint=big_faces_disjoint(G),
        is_two_connected=is_two_connected(G),
        separating_short_cycle=find_separating_short_cycle(G),
    )


# -- surgery -----------------------------------------------------------------

Dart = tuple[int, int]  # (edge id, origin vertex)


class Editor:
    """Mutable rotation system used to chain surgeries.

    Vertices keep the labels of the graph they came from; darts are
    ``(edge, origin)`` pairs.  Call :meth:`to_graph` to validate and
    re-pack ids.
    """

    def __init__(self, edges: dict[int, tuple[int, int]], rot: dict[int, list[int]]):
        self.edges = edges
        self.rot = rot
        self.next_eid = max(edges, default=-1) + 1

    @classmethod
    def from_graph(cls, G: PlaneGraph) -> "Editor":
        return cls(
            {e: uv for e, uv in enumerate(G.edges)},
            {v: list(r) for v, r in enumerate(G.rotations)},
        )

    def other(self, e: int, x: int) -> int:
        u, v = self.edges[e]
        return v if x == u else u

    def adjacent(self, u: int, v: int) -> bool:
        return any(self.other(e, u) == v for e in self.rot[u])

    def faces(self) -> list[list[Dart]]:
        seen: set[Dart] = set()
        out = []
        for v in sorted(self.rot):
            for e in self.rot[v]:
                start = (e, v)
                if start in seen:
                    continue
                walk = []
                d = start
                while d not in seen:
                    seen.add(d)
                    walk.append(d)
                    h = self.other(d[0], d[1])
                    rot = self.rot[h]
                    d = (rot[(rot.index(d[0]) + 1) % len(rot)], h)
                out.append(walk)
        return out

    @staticmethod
    def corners(face: Sequence[Dart]) -> list[int]:
        return [x for _, x in face]

    def delete_vertices(self, vs: Iterable[int]) -> list[list[Dart]]:
        """Remove vertices; return the faces that absorbed their surroundings."""
        gone = set(vs)
        marks: set[Dart] = set()
        for face in self.faces():
            xs = self.corners(face)
            if gone.intersection(xs):
                for e, x in face:
                    if x not in gone and self.other(e, x) not in gone:
                        marks.add((e, x))
        for v in gone:
            for e in self.rot.pop(v):
                if e not in self.edges:
                    continue
                w = self.other(e, v)
                if w not in gone:
                    self.rot[w].remove(e)
                del self.edges[e]
        return [f for f in self.faces() if marks.intersection(f)]

    def delete_edge(self, e: int) -> None:
        u, v = self.edges.pop(e)
        self.rot[u].remove(e)
        self.rot[v].remove(e)

    @staticmethod
    def _corner(face: Sequence[Dart], x: int) -> int:
        idx = [i for i, (_, y) in enumerate(face) if y == x]
        if not idx:
            raise NotOnFace(f"vertex {x} is not on the face")
        return idx[0]

    def add_edge(self, u: int, w: int, face: Sequence[Dart]) -> tuple[int, list[Dart], list[Dart]]:
        """Add ``uw`` across ``face``.

        Returns the new edge id and the two faces it creates, each listed
        starting with the new edge: the first starts at ``u``'s corner side
        and continues from ``w``; the second the other way round.
        """
        if u == w:
            raise WouldCreateLoop(f"edge {u}{w} would be a loop")
        i = self._corner(face, u)
        j = self._corner(face, w)
        k = len(face)
        e_in_u = face[i - 1][0]
        e_in_w = face[j - 1][0]
        new = self.next_eid
        self.next_eid += 1
        self.edges[new] = (u, w)
        ru = self.rot[u]
        ru.insert(ru.index(e_in_u) + 1, new)
        rw = self.rot[w]
        rw.insert(rw.index(e_in_w) + 1, new)
        first = [(new, u)] + [face[(j + t) % k] for t in range((i - j) % k)]
        second = [(new, w)] + [face[(i + t) % k] for t in range((j - i) % k)]
        return new, first, second

    def fan(self, face: Sequence[Dart], apex: int) -> list[int]:
        """Triangulate ``face`` with edges from ``apex``; return new edges."""
        i = self._corner(face, apex)
        xs = self.corners(face)
        if xs.count(apex) > 1:
            raise WouldCreateLoop(f"apex {apex} occurs twice on the face")
        cur = list(face[i:]) + list(face[:i])
        added = []
        while len(cur) > 3:
            target = cur[2][1]
            e, rest, _tri = self.add_edge(apex, target, cur)
            added.append(e)
            cur = rest
        return added

    def identify(self, a: int, a2: int, face: Sequence[Dart]) -> None:
        """Merge ``a2`` into ``a`` by splicing rotations at their corners on ``face``."""
        if a == a2:
            raise WouldCreateLoop("cannot identify a vertex with itself")
        if self.adjacent(a, a2):
            raise WouldCreateLoop(f"vertices {a} and {a2} are adjacent")
        i = self._corner(face, a)
        j = self._corner(face, a2)

        def cut(x: int, idx: int) -> list[int]:
            rot = self.rot[x]
            p = rot.index(face[idx][0])
            return rot[p:] + rot[:p]

        merged = cut(a, i) + cut(a2, j)
        for e in self.rot.pop(a2):
            u, v = self.edges[e]
            self.edges[e] = (a if u == a2 else u, a if v == a2 else v)
        self.rot[a] = merged

    def collapse_digons(self) -> int:
        """Drop one edge of every 2-face; face sizes elsewhere are unchanged."""
        removed = 0
        while True:
            for face in self.faces():
                if len(face) == 2 and face[0][0] != face[1][0]:
                    self.delete_edge(max(face[0][0], face[1][0]))
                    removed += 1
                    break
            else:
                return removed

    def to_graph(self) -> tuple[PlaneGraph, dict[int, int]]:
        """Validate and compact; returns the graph and ``label -> new id``."""
        labels = sorted(self.rot)
        vmap = {x: i for i, x in enumerate(labels)}
        eids = sorted(self.edges)
        emap = {e: i for i, e in enumerate(eids)}
        pairs = [(vmap[self.edges[e][0]], vmap[self.edges[e][1]]) for e in eids]
        rotations = [[emap[e] for e in self.rot[x]] for x in labels]
        for u, v in pairs:
            if u == v:
                raise LoopEdge("surgery produced a loop")
        if len(labels) > 1 and not _is_connected(len(labels), pairs):
            raise Disconnects("surgery disconnected the graph")
        return build(len(labels), pairs, rotations), vmap


def _face_walk(G: PlaneGraph, ed: Editor, f: int) -> list[Dart]:
    return [(d >> 1, G.origin(d)) for d in G.faces[f]]


def delete_vertex(G: PlaneGraph, v: int) -> PlaneGraph:
    """Remove ``v``; its surrounding faces merge into one hole face.

    Raises:
        Disconnects: ``G - v`` is disconnected.
    """
    ed = Editor.from_graph(G)
    ed.delete_vertices([v])
    return ed.to_graph()[0]


def add_edge_in_face(G: PlaneGraph, u: int, v: int, f: int) -> PlaneGraph:
    """Split face ``f`` with a new edge between corners ``u`` and ``v``."""
    if u == v:
        raise WouldCreateLoop(f"edge {u}{v} would be a loop")
    ed = Editor.from_graph(G)
    ed.add_edge(u, v, _face_walk(G, ed, f))
    return ed.to_graph()[0]


def triangulate_face_fan(G: PlaneGraph, f: int, apex: int) -> PlaneGraph:
    """Fan-triangulate face ``f`` from ``apex`` (size(f) - 3 new edges)."""
    ed = Editor.from_graph(G)
    ed.fan(_face_walk(G, ed, f), apex)
    return ed.to_graph()[0]


def identify_vertices(G: PlaneGraph, a: int, a2: int) -> PlaneGraph:
    """Merge ``a2`` into ``a`` across the first face holding both.

    Parallel edges are kept.  The merged vertex takes ``a``'s place in the
    id order.
    """
    ed = Editor.from_graph(G)
    if a == a2 or a2 in G.adjacency[a]:
        raise WouldCreateLoop(f"vertices {a} and {a2} are adjacent")
    for f, corners in enumerate(G.face_vertices):
        if a in corners and a2 in corners:
            ed.identify(a, a2, _face_walk(G, ed, f))
            return ed.to_graph()[0]
    raise NotOnFace(f"vertices {a} and {a2} share no face")


def split_along_cycle(
    G: PlaneGraph, cycle: ShortCycle
) -> list[tuple[PlaneGraph, list[int]]]:
    """Cut ``G`` along a separating short cycle.

    Each side is returned together with the cycle, which bounds a face in
    that part; 2-faces created this way are collapsed.  The list pairs each
    part with ``orig[i]`` = id in ``G`` of the part's vertex ``i``.
    """
    members = set(cycle.vertices)
    parts = []
    for which, sides in enumerate(cycle_sides(G, cycle)):
        seeds = []
        for x, arc in zip(cycle.vertices, sides):
            for e in arc:
                w = G.head(G.dart(e, x))
                if w not in members:
                    seeds.append(w)
        inside = set(seeds)
        queue = deque(seeds)
        while queue:
            x = queue.popleft()
            for y in G.adjacency[x]:
                if y not in members and y not in inside:
                    inside.add(y)
                    queue.append(y)
        rot: dict[int, list[int]] = {x: list(G.rotations[x]) for x in inside}
        for i, x in enumerate(cycle.vertices):
            e_out, e_in = cycle.edges[i], cycle.edges[i - 1]
            if which == 0:
                rot[x] = [e_out] + sides[i] + [e_in]
            else:
                rot[x] = [e_in] + sides[i] + [e_out]
        keep = {e for r in rot.values() for e in r}
        ed = Editor({e: G.edges[e] for e in keep}, rot)
        ed.collapse_digons()
        part, vmap = ed.to_graph()
        orig = [0] * part.vertex_count
        for x, i in vmap.items():
            orig[i] = x
        parts.append((part, orig))
    return parts
