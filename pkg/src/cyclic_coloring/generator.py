"""Deterministic constructions: wheels, solids, random triangulations, carved
class graphs, configuration fixtures and the seeded test corpus.

Randomness comes from :class:`XorShift64Star` only, seeded through
:func:`splitmix64`, so corpora are reproducible bit for bit anywhere:

* splitmix64: ``z += 0x9E3779B97F4A7C15``;
  ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``;
  ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``; ``z ^ (z >> 31)``.
* xorshift64*: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27``;
  output ``x * 0x2545F4914F6CDD1D`` (all mod 2**64).
* ``below(n)`` takes the top 32 bits of an output times ``n``, shifted
  right by 32.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .plane_graph import Editor, PlaneGraph, class_check, from_faces

MASK = (1 << 64) - 1


def splitmix64(state: int) -> int:
    z = (state + 0x9E3779B97F4A7C15) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK

    def below(self, n: int) -> int:
        return ((self.next_u64() >> 32) * n) >> 32

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]


class CarveFailed(RuntimeError):
    pass


# -- fixed graphs ----------------------------------------------------------


def wheel(n: int) -> PlaneGraph:
    """Hub ``n`` joined to the rim cycle ``0..n-1``."""
    if n < 3:
        raise ValueError("a wheel needs at least 3 rim vertices")
    faces = [(i, (i + 1) % n, n) for i in range(n)]
    faces.append(tuple(range(n - 1, -1, -1)))
    return from_faces(n + 1, faces)


def k4() -> PlaneGraph:
    return from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])


def octahedron() -> PlaneGraph:
    return from_faces(6, [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
        (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
    ])


def octahedron_minus_edge() -> PlaneGraph:
    """Octahedron without edge 0-1: one 4-face with corners of degree 3, 4, 3, 4."""
    return from_faces(6, [
        (0, 4, 1, 2), (0, 2, 3), (0, 3, 4),
        (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
    ])


def icosahedron() -> PlaneGraph:
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [
            (0, up[i], up[j]),
            (up[i], lo[i], up[j]),
            (up[j], lo[i], lo[j]),
            (11, lo[j], lo[i]),
        ]
    return from_faces(12, faces)


def cube() -> PlaneGraph:
    """Q3 on bit-vector vertices 0..7."""
    return from_faces(8, [
        (0, 1, 3, 2), (4, 6, 7, 5), (0, 4, 5, 1),
        (2, 3, 7, 6), (0, 2, 6, 4), (1, 5, 7, 3),
    ])


def stacked_k4() -> PlaneGraph:
    """K4 with a vertex stacked into face (0, 1, 2): a separating triangle."""
    return from_faces(5, [
        (0, 1, 4), (1, 2, 4), (2, 0, 4), (0, 2, 3), (0, 3, 1), (1, 3, 2),
    ])


def ring_fixture(degrees: Sequence[int]) -> PlaneGraph:
    """A central face whose corners have the given degrees.

    Corner ``i`` (vertex ``i``) is joined to a run of ``degrees[i] - 2``
    vertices on an outer ring, consecutive corners sharing one ring vertex;
    a hub (the last vertex) caps the ring.  Everything but the central face
    is a triangle.
    """
    ell = len(degrees)
    ks = [d - 2 for d in degrees]
    if min(ks) < 1:
        raise ValueError("corner degrees must be at least 3")
    m = sum(k - 1 for k in ks)
    if m < 3:
        raise ValueError("outer ring too short")
    ring = lambda j: ell + (j % m)  # noqa: E731
    hub = ell + m
    faces: list[tuple[int, ...]] = [tuple(range(ell - 1, -1, -1))]
    s = 0
    for i in range(ell):
        for j in range(s, s + ks[i] - 1):
            faces.append((i, ring(j + 1), ring(j)))
        s += ks[i] - 1
        faces.append((i, (i + 1) % ell, ring(s)))
    for j in range(m):
        faces.append((hub, ring(j), ring(j + 1)))
    return from_faces(hub + 1, faces)


def digon_separator() -> PlaneGraph:
    """Two parallel edges 0-1 with vertex 2 on one side and 3 on the other."""
    from .plane_graph import build

    # e0, e1: 0-1 ; e2: 0-2 ; e3: 2-1 ; e4: 0-3 ; e5: 3-1
    return build(4, [(0, 1), (0, 1), (0, 2), (2, 1), (0, 3), (3, 1)],
                 [[0, 2, 1, 4], [0, 5, 1, 3], [2, 3], [4, 5]])


def fixtures() -> dict[str, PlaneGraph]:
    return {
        "K4": k4(),
        "octahedron": octahedron(),
        "icosahedron": icosahedron(),
        "Q3": cube(),
        "W5": wheel(5),
        "W6": wheel(6),
        "octahedron_minus_edge": octahedron_minus_edge(),
        "stacked_K4": stacked_k4(),
        "digon_separator": digon_separator(),
        "CFG4": ring_fixture((5, 5, 5, 6)),
        "CFG5": ring_fixture((5, 5, 6, 6, 6)),
        "run44": ring_fixture((4, 4, 6, 6, 6, 6)),
        "run454": ring_fixture((4, 5, 4, 6, 6, 6)),
        "run455": ring_fixture((4, 5, 5, 6, 6, 6)),
        "run545": ring_fixture((5, 4, 5, 6, 6, 6)),
    }


# -- random triangulations ------------------------------------------------


class _Triangulation:
    """Oriented triangle soup with the bookkeeping needed for flips."""

    def __init__(self) -> None:
        self.faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
        self.n = 4
        self.adj: list[set[int]] = [{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}]
        self.where: dict[tuple[int, int], int] = {}
        for i, f in enumerate(self.faces):
            self._index(i, f)

    def _index(self, i: int, f: tuple[int, int, int]) -> None:
        self.faces[i] = f
        for t in range(3):
            self.where[(f[t], f[(t + 1) % 3])] = i

    def insert(self, i: int) -> None:
        a, b, c = self.faces[i]
        x = self.n
        self.n += 1
        self.adj.append({a, b, c})
        for y in (a, b, c):
            self.adj[y].add(x)
        self._index(i, (a, b, x))
        self.faces.append((b, c, x))
        self._index(len(self.faces) - 1, (b, c, x))
        self.faces.append((c, a, x))
        self._index(len(self.faces) - 1, (c, a, x))

    def flip(self, u: int, v: int) -> bool:
        i, j = self.where[(u, v)], self.where[(v, u)]
        fi, fj = self.faces[i], self.faces[j]
        a = next(x for x in fi if x not in (u, v))
        b = next(x for x in fj if x not in (u, v))
        if a == b or b in self.adj[a]:
            return False
        del self.where[(u, v)], self.where[(v, u)]
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.adj[a].add(b)
        self.adj[b].add(a)
        self._index(i, (b, v, a))
        self._index(j, (a, u, b))
        return True

    def random_flip(self, rng: XorShift64Star) -> bool:
        f = self.faces[rng.below(len(self.faces))]
        t = rng.below(3)
        return self.flip(f[t], f[(t + 1) % 3])

    def separating_triangles(self) -> list[tuple[int, int, int]]:
        out = []
        for u in range(self.n):
            for v in sorted(w for w in self.adj[u] if w > u):
                for w in sorted(x for x in self.adj[u] & self.adj[v] if x > v):
                    if not self._is_face(u, v, w):
                        out.append((u, v, w))
        return out

    def _is_face(self, u: int, v: int, w: int) -> bool:
        for x, y in ((u, v), (v, u)):
            f = self.faces[self.where[(x, y)]]
            if w in f:
                return True
        return False

    def graph(self) -> PlaneGraph:
        return from_faces(self.n, self.faces)


def random_triangulation(
    n: int, seed: int, flips: int = 0, *, untangle: int = 0
) -> PlaneGraph:
    """Simple plane triangulation on ``n`` vertices.

    Starts from K4, inserts vertices into uniformly chosen faces, then tries
    ``flips`` random diagonal flips (flips that would create a multi-edge
    are skipped).  With ``untangle > 0`` up to that many extra flips are
    spent destroying separating triangles.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    rng = XorShift64Star(seed)
    tri = _Triangulation()
    while tri.n < n:
        tri.insert(rng.below(len(tri.faces)))
    for _ in range(flips):
        tri.random_flip(rng)
    for _ in range(untangle):
        bad = tri.separating_triangles()
        if not bad:
            break
        u, v, w = rng.choice(bad)
        pairs = [(u, v), (v, w), (w, u)]
        start = rng.below(3)
        for t in range(3):
            x, y = pairs[(start + t) % 3]
            if tri.flip(x, y):
                break
    return tri.graph()


def carve_big_faces(
    G: PlaneGraph, sizes: Iterable[int], seed: int, retries: int = 20
) -> PlaneGraph:
    """Delete vertices of the requested degrees to open vertex-disjoint big faces.

    Each chosen vertex has only triangles around it and a closed
    neighborhood avoiding every face carved so far.

    Raises:
        ValueError: a size below 4.
        CarveFailed: no choice sequence worked within ``retries`` attempts.
    """
    sizes = sorted(sizes, reverse=True)
    if any(s < 4 for s in sizes):
        raise ValueError("carved faces must have size at least 4")
    rng = XorShift64Star(seed)
    for _ in range(retries):
        ed = Editor.from_graph(G)
        blocked: set[int] = set()
        ok = True
        for s in sizes:
            faces = ed.faces()
            on_big = set()
            for face in faces:
                if len(face) > 3:
                    on_big.update(x for _, x in face)
            cands = []
            for u in sorted(ed.rot):
                if len(ed.rot[u]) != s or u in on_big or u in blocked:
                    continue
                nbrs = {ed.other(e, u) for e in ed.rot[u]}
                if len(nbrs) == s and not (nbrs & blocked) and not (nbrs & on_big):
                    cands.append(u)
            if not cands:
                ok = False
                break
            u = rng.choice(cands)
            nbrs = {ed.other(e, u) for e in ed.rot[u]}
            ed.delete_vertices([u])
            blocked |= nbrs | {u}
        if not ok:
            continue
        out, _ = ed.to_graph()
        report = class_check(out)
        big = sorted(len(w) for w in out.faces if len(w) > 3)
        if report.in_class and report.is_two_connected and big == sorted(sizes):
            return out
    raise CarveFailed(f"could not carve faces {sizes}")


# -- corpus -------------------------------------------------------------------


@dataclass
class CorpusEntry:
    name: str
    graph: PlaneGraph
    seed: int
    params: dict = field(default_factory=dict)

    def checksum(self) -> str:
        from .plg import emit_plg

        return hashlib.sha256(emit_plg(self.graph).encode()).hexdigest()


def _degree_targets(G: PlaneGraph) -> set[int]:
    return set(G.degrees)


def class_corpus(count: int = 200, seed: int = 20100101, max_vertices: int = 80) -> list[CorpusEntry]:
    """Seeded class graphs with max face size cycling through 5..10.

    Even entries come from plain stacked triangulations (many separating
    triangles), odd entries from flipped and untangled ones, which usually
    satisfy every structural precondition of a smallest counterexample.
    """
    out = []
    for idx in range(count):
        target = 5 + idx % 6
        untangled = idx % 2 == 1
        gseed = splitmix64(seed ^ (idx * 0x9E3779B97F4A7C15 & MASK))
        rng = XorShift64Star(gseed)
        for attempt in range(200):
            lo = max(target + 4, 8)
            n = lo + rng.below(max_vertices - lo + 1)
            tseed = rng.next_u64()
            if untangled:
                T = random_triangulation(n, tseed, flips=2 * n, untangle=20 * n)
            else:
                T = random_triangulation(n, tseed, flips=rng.below(n // 2 + 1))
            degs = _degree_targets(T)
            if target not in degs:
                continue
            extra = [d for d in sorted(degs) if 4 <= d <= target]
            sizes = [target]
            for _ in range(rng.below(4)):
                sizes.append(rng.choice(extra))
            try:
                G = carve_big_faces(T, sizes, rng.next_u64())
            except CarveFailed:
                continue
            if G.vertex_count < 6:
                continue
            params = {
                "n": n, "target": target, "sizes": sizes,
                "untangled": untangled, "attempt": attempt, "tseed": tseed,
            }
            out.append(CorpusEntry(f"class{idx:03d}", G, gseed, params))
            break
        else:
            raise CarveFailed(f"corpus entry {idx} could not be generated")
    return out
