"""Detectors for the eight reducible configurations.

Detectors are local pattern matchers: they check degrees, face sizes and
the triangles needed to bind every role, but not global structure
(2-connectivity, separating cycles); the colorer owns that.

Face corners ``v1..vl`` are listed along the traced boundary, or against it
when a pattern is only found in reverse (``5,5,4`` read backwards is
``4,5,5``).  Role names: ``f`` face id, ``v``, ``w``, ``w'``, ``v'``,
``v1``...``vl``, ``x``, ``a``, ``a'``, ``b``, ``b'``, ``c``, ``d``, ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional

from .plane_graph import PlaneGraph


class Kind(str, Enum):
    MIN_DEG = "MinDeg"
    DEG45_ALL_TRIANGLES = "Deg45AllTriangles"
    FOUR_FACE_4VERTEX = "FourFace4Vertex"
    FOUR_FACE_THREE5 = "FourFaceThree5"
    FIVE_FACE_ADJ_LOW = "FiveFaceAdjLow"
    RUN44 = "Run44"
    RUN454_OR_455 = "Run454or455"
    RUN545 = "Run545"

    def __str__(self) -> str:
        return self.value


PRIORITY = tuple(Kind)


@dataclass(frozen=True, eq=False)
class ConfigurationMatch:
    kind: Kind
    roles: dict[str, int]
    D: int
    case: str = ""

    def __getitem__(self, role: str) -> int:
        return self.roles[role]

    def boundary(self) -> list[int]:
        """``v1..vl`` for face-run kinds."""
        out = []
        i = 1
        while f"v{i}" in self.roles:
            out.append(self.roles[f"v{i}"])
            i += 1
        return out

    def describe(self) -> str:
        parts = " ".join(f"{k}={v}" for k, v in self.roles.items())
        case = f" case={self.case}" if self.case else ""
        return f"{self.kind}{case} {parts}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConfigurationMatch):
            return NotImplemented
        return (self.kind, self.roles, self.D, self.case) == (
            other.kind, other.roles, other.D, other.case)


def default_D(G: PlaneGraph) -> int:
    return max(G.max_face_size, 5)


# -- helpers -------------------------------------------------------------------


def _step_dart(G: PlaneGraph, f: int, i: int, j: int) -> int:
    """Dart of face ``f`` on the boundary edge between corner positions i, j."""
    walk = G.faces[f]
    k = len(walk)
    return walk[i % k] if (j - i) % k == 1 else walk[j % k]


def _across(G: PlaneGraph, f: int, i: int, j: int) -> Optional[int]:
    """Apex of the 3-face on the far side of the boundary edge (i, j) of ``f``."""
    return G.apex(_step_dart(G, f, i, j) ^ 1)


def _oriented(G: PlaneGraph, f: int, start: int, step: int) -> list[int]:
    corners = G.face_vertices[f]
    k = len(corners)
    return [corners[(start + step * t) % k] for t in range(k)]


def _simple_face(G: PlaneGraph, f: int) -> bool:
    corners = G.face_vertices[f]
    return len(set(corners)) == len(corners)


# -- detectors -----------------------------------------------------------------


def detect_min_degree(G: PlaneGraph, D: Optional[int] = None) -> list[ConfigurationMatch]:
    D = default_D(G) if D is None else D
    out = []
    for v in range(G.vertex_count):
        d = G.degree(v)
        if d > 3:
            continue
        faces = G.vertex_faces[v]
        big = [f for f in faces if G.face_size(f) >= 4]
        if not big:
            out.append(ConfigurationMatch(Kind.MIN_DEG, {"v": v}, D, "triangles"))
            continue
        f = min(big)
        corners = G.face_vertices[f]
        i = corners.index(v)
        k = len(corners)
        roles = {"v": v, "f": f, "w": corners[(i + 1) % k], "w'": corners[i - 1]}
        out.append(ConfigurationMatch(Kind.MIN_DEG, roles, D, "big-face"))
    return out


def detect_deg45_all_triangles(G: PlaneGraph, D: Optional[int] = None) -> list[ConfigurationMatch]:
    D = default_D(G) if D is None else D
    out = []
    for v in range(G.vertex_count):
        if G.degree(v) in (4, 5) and all(G.face_size(f) == 3 for f in G.vertex_faces[v]):
            out.append(ConfigurationMatch(Kind.DEG45_ALL_TRIANGLES, {"v": v}, D))
    return out


def _four_face_4vertex(G: PlaneGraph, f: int, D: int) -> list[ConfigurationMatch]:
    corners = G.face_vertices[f]
    if len(corners) != 4 or not _simple_face(G, f):
        return []
    out = []
    for i, v in enumerate(corners):
        if G.degree(v) == 4:
            roles = {"f": f, "v": v, "v'": corners[(i + 2) % 4],
                     "w": corners[(i + 1) % 4], "w'": corners[(i + 3) % 4]}
            out.append(ConfigurationMatch(Kind.FOUR_FACE_4VERTEX, roles, D))
    return out


def _four_face_three5(G: PlaneGraph, f: int, D: int) -> list[ConfigurationMatch]:
    corners = G.face_vertices[f]
    if len(corners) != 4 or not _simple_face(G, f):
        return []
    out = []
    for i in range(4):
        vs = [corners[(i + t) % 4] for t in range(4)]
        if all(G.degree(x) == 5 for x in vs[:3]):
            apex = _across(G, f, i, i + 1)
            if apex is None:
                continue
            roles = {"f": f, "v1": vs[0], "v2": vs[1], "v3": vs[2], "v4": vs[3], "v'": apex}
            out.append(ConfigurationMatch(Kind.FOUR_FACE_THREE5, roles, D))
    return out


def _five_face_adj_low(G: PlaneGraph, f: int, D: int) -> list[ConfigurationMatch]:
    corners = G.face_vertices[f]
    if len(corners) != 5 or not _simple_face(G, f):
        return []
    out = []
    seen_pairs = set()
    for i in range(5):
        x = corners[i]
        if G.degree(x) != 5:
            continue
        for step in (1, -1):
            c = corners[(i + step) % 5]
            if G.degree(c) not in (4, 5):
                continue
            pair = frozenset((x, c))
            if pair in seen_pairs:
                continue
            b = _across(G, f, i, i + step)
            e = _across(G, f, i, i - step)
            if b is None or e is None:
                continue
            ring = _oriented(G, f, i, step)  # x, c, b', d, a'
            a = _remaining_neighbor(G, x, {ring[1], ring[4], b, e})
            if a is None:
                continue
            seen_pairs.add(pair)
            roles = {"f": f, "x": x, "c": ring[1], "b'": ring[2], "d": ring[3],
                     "a'": ring[4], "b": b, "e": e, "a": a}
            out.append(ConfigurationMatch(Kind.FIVE_FACE_ADJ_LOW, roles, D))
    return out


def _remaining_neighbor(G: PlaneGraph, x: int, known: set[int]) -> Optional[int]:
    others = [w for w in G.neighbors(x) if w not in known]
    if len(known) != 4 or len(others) != 1:
        return None
    return others[0]


_RUN_PATTERNS = {
    Kind.RUN44: ((4, 4),),
    Kind.RUN454_OR_455: ((4, 5, 4), (4, 5, 5)),
    Kind.RUN545: ((5, 4, 5),),
}


def _runs(G: PlaneGraph, f: int, kind: Kind, D: int) -> list[ConfigurationMatch]:
    corners = G.face_vertices[f]
    k = len(corners)
    if k < 5 or not _simple_face(G, f):
        return []
    degs = [G.degree(v) for v in corners]
    out = []
    for i in range(k):
        for pattern in _RUN_PATTERNS[kind]:
            p = len(pattern)
            window = tuple(degs[(i + t) % k] for t in range(p))
            if window == pattern:
                start, step = i, 1
            elif window == pattern[::-1] and pattern != pattern[::-1]:
                start, step = i + p - 1, -1
            else:
                continue
            ring = _oriented(G, f, start, step)
            if kind is Kind.RUN44:
                apex = _across(G, f, start, start - step)  # over v_l v1
            else:
                apex = _across(G, f, start, start + step)  # over v1 v2
            if apex is None:
                continue
            roles = {"f": f, "v'": apex}
            roles.update({f"v{t + 1}": ring[t] for t in range(k)})
            case = "".join(map(str, pattern)) if kind is Kind.RUN454_OR_455 else ""
            out.append(ConfigurationMatch(kind, roles, D, case))
    return out


_FACE_DETECTORS: dict[Kind, Callable[[PlaneGraph, int, int], list[ConfigurationMatch]]] = {
    Kind.FOUR_FACE_4VERTEX: _four_face_4vertex,
    Kind.FOUR_FACE_THREE5: _four_face_three5,
    Kind.FIVE_FACE_ADJ_LOW: _five_face_adj_low,
    Kind.RUN44: lambda G, f, D: _runs(G, f, Kind.RUN44, D),
    Kind.RUN454_OR_455: lambda G, f, D: _runs(G, f, Kind.RUN454_OR_455, D),
    Kind.RUN545: lambda G, f, D: _runs(G, f, Kind.RUN545, D),
}


def face_matches(G: PlaneGraph, f: int, kinds: Iterable[Kind], D: Optional[int] = None) -> list[ConfigurationMatch]:
    """Matches of the given face-based kinds on face ``f``, in priority order."""
    D = default_D(G) if D is None else D
    out = []
    for kind in kinds:
        out.extend(_FACE_DETECTORS[kind](G, f, D))
    return out


def _all_faces(kind: Kind) -> Callable[..., list[ConfigurationMatch]]:
    def detect(G: PlaneGraph, D: Optional[int] = None) -> list[ConfigurationMatch]:
        D = default_D(G) if D is None else D
        out = []
        for f in range(G.face_count):
            out.extend(_FACE_DETECTORS[kind](G, f, D))
        return out

    detect.__name__ = f"detect_{kind.value}"
    return detect


detect_4face_4vertex = _all_faces(Kind.FOUR_FACE_4VERTEX)
detect_4face_three5 = _all_faces(Kind.FOUR_FACE_THREE5)
detect_5face_adjacent_low = _all_faces(Kind.FIVE_FACE_ADJ_LOW)
detect_run_44 = _all_faces(Kind.RUN44)
detect_run_454_455 = _all_faces(Kind.RUN454_OR_455)
detect_run_545 = _all_faces(Kind.RUN545)

DETECTORS: dict[Kind, Callable[..., list[ConfigurationMatch]]] = {
    Kind.MIN_DEG: detect_min_degree,
    Kind.DEG45_ALL_TRIANGLES: detect_deg45_all_triangles,
    Kind.FOUR_FACE_4VERTEX: detect_4face_4vertex,
    Kind.FOUR_FACE_THREE5: detect_4face_three5,
    Kind.FIVE_FACE_ADJ_LOW: detect_5face_adjacent_low,
    Kind.RUN44: detect_run_44,
    Kind.RUN454_OR_455: detect_run_454_455,
    Kind.RUN545: detect_run_545,
}


def iter_configurations(G: PlaneGraph, D: Optional[int] = None):
    """Every match, kinds in priority order, ids ascending within a kind."""
    D = default_D(G) if D is None else D
    for kind in PRIORITY:
        yield from DETECTORS[kind](G, D)


def find_first_configuration(G: PlaneGraph, D: Optional[int] = None) -> Optional[ConfigurationMatch]:
    return next(iter(iter_configurations(G, D)), None)


# -- re-validation ---------------------------------------------------------------


def _consecutive(G: PlaneGraph, f: int, seq: list[int]) -> bool:
    corners = G.face_vertices[f]
    k = len(corners)
    if len(seq) != k or sorted(seq) != sorted(corners):
        return False
    i = corners.index(seq[0])
    fwd = [corners[(i + t) % k] for t in range(k)]
    bwd = [corners[(i - t) % k] for t in range(k)]
    return seq in (fwd, bwd)


def _triangle(G: PlaneGraph, x: int, y: int, z: int) -> bool:
    want = {x, y, z}
    return any(set(G.face_vertices[f]) == want and G.face_size(f) == 3
               for f in G.vertex_faces[x])


def revalidate(G: PlaneGraph, m: ConfigurationMatch) -> bool:
    """Re-check every degree, face-size and incidence claim of a match."""
    deg = G.degree
    r = m.roles
    try:
        if m.kind is Kind.MIN_DEG:
            if deg(r["v"]) > 3:
                return False
            if m.case == "triangles":
                return all(G.face_size(f) == 3 for f in G.vertex_faces[r["v"]])
            corners = G.face_vertices[r["f"]]
            return (len(corners) >= 4 and r["v"] in corners
                    and {r["w"], r["w'"]} <= set(G.neighbors(r["v"])))
        if m.kind is Kind.DEG45_ALL_TRIANGLES:
            return deg(r["v"]) in (4, 5) and all(
                G.face_size(f) == 3 for f in G.vertex_faces[r["v"]])
        if m.kind is Kind.FOUR_FACE_4VERTEX:
            return (deg(r["v"]) == 4
                    and _consecutive(G, r["f"], [r["v"], r["w"], r["v'"], r["w'"]]))
        if m.kind is Kind.FOUR_FACE_THREE5:
            vs = m.boundary()
            return (_consecutive(G, r["f"], vs) and all(deg(x) == 5 for x in vs[:3])
                    and _triangle(G, vs[0], vs[1], r["v'"]))
        if m.kind is Kind.FIVE_FACE_ADJ_LOW:
            ring = [r["x"], r["c"], r["b'"], r["d"], r["a'"]]
            return (_consecutive(G, r["f"], ring) and deg(r["x"]) == 5
                    and deg(r["c"]) in (4, 5)
                    and _triangle(G, r["x"], r["c"], r["b"])
                    and _triangle(G, r["x"], r["a'"], r["e"])
                    and r["a"] in G.adjacency[r["x"]]
                    and len({r["a"], r["b"], r["e"], r["c"], r["a'"]}) == 5)
        vs = m.boundary()
        if len(vs) < 5 or not _consecutive(G, r["f"], vs):
            return False
        ds = [deg(x) for x in vs]
        if m.kind is Kind.RUN44:
            return ds[:2] == [4, 4] and _triangle(G, vs[0], vs[-1], r["v'"])
        if m.kind is Kind.RUN454_OR_455:
            ok = ds[:3] in ([4, 5, 4], [4, 5, 5])
        else:
            ok = ds[:3] == [5, 4, 5]
        return ok and _triangle(G, vs[0], vs[1], r["v'"])
    except (KeyError, IndexError, ValueError):
        return False
