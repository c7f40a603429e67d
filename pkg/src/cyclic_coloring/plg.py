"""PLG embedding files and coloring files.

PLG grammar, one record per line, ``#`` starts a comment::

    plg 1
    vertices <n>
    edges <m>
    e <eid> <u> <v>          # m lines
    rot <v> <eid> <eid> ...  # n lines, clockwise

Coloring files hold ``c <vertex> <color>`` lines.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .plane_graph import PlaneGraph, PlaneGraphError, build


class PLGSyntaxError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class PLGSemanticError(ValueError):
    pass


def _records(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(no: int, fields: Sequence[str]) -> list[int]:
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise PLGSyntaxError(no, "expected integers") from None


def parse_plg(text: str) -> PlaneGraph:
    """Parse PLG text; build errors surface as :class:`PLGSemanticError`."""
    recs = list(_records(text))
    if not recs or recs[0][1] != ["plg", "1"]:
        raise PLGSyntaxError(recs[0][0] if recs else 1, "missing 'plg 1' header")
    n = m = None
    edges: dict[int, tuple[int, int]] = {}
    rots: dict[int, list[int]] = {}
    for no, fields in recs[1:]:
        tag, rest = fields[0], fields[1:]
        if tag == "vertices" and len(rest) == 1 and n is None:
            (n,) = _ints(no, rest)
        elif tag == "edges" and len(rest) == 1 and m is None:
            (m,) = _ints(no, rest)
        elif tag == "e" and len(rest) == 3:
            eid, u, v = _ints(no, rest)
            if eid in edges:
                raise PLGSyntaxError(no, f"edge {eid} defined twice")
            if u == v:
                raise PLGSyntaxError(no, f"edge {eid} is a loop")
            edges[eid] = (u, v)
        elif tag == "rot" and rest:
            v, *eids = _ints(no, rest)
            if v in rots:
                raise PLGSyntaxError(no, f"rotation of {v} given twice")
            rots[v] = eids
        else:
            raise PLGSyntaxError(no, f"unexpected record {' '.join(fields)!r}")
    if n is None or m is None:
        raise PLGSyntaxError(recs[-1][0], "missing vertices/edges count")
    if sorted(edges) != list(range(m)):
        raise PLGSemanticError(f"expected edge ids 0..{m - 1}")
    if sorted(rots) != list(range(n)):
        raise PLGSemanticError(f"expected rotations for vertices 0..{n - 1}")
    try:
        return build(n, [(e, *edges[e]) for e in range(m)], [rots[v] for v in range(n)])
    except PlaneGraphError as exc:
        raise PLGSemanticError(str(exc)) from exc


def emit_plg(G: PlaneGraph, comment: Optional[str] = None) -> str:
    lines = ["plg 1"]
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"vertices {G.vertex_count}")
    lines.append(f"edges {G.edge_count}")
    lines.extend(f"e {e} {u} {v}" for e, (u, v) in enumerate(G.edges))
    for v, rot in enumerate(G.rotations):
        lines.append(" ".join(["rot", str(v), *map(str, rot)]))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, vertex_count: Optional[int] = None) -> list[Optional[int]]:
    colors: dict[int, int] = {}
    for no, fields in _records(text):
        if fields[0] != "c" or len(fields) != 3:
            raise PLGSyntaxError(no, "expected 'c <vertex> <color>'")
        v, c = _ints(no, fields[1:])
        colors[v] = c
    n = vertex_count if vertex_count is not None else (max(colors) + 1 if colors else 0)
    return [colors.get(v) for v in range(n)]


def emit_coloring(colors: Sequence[Optional[int]]) -> str:
    return "".join(f"c {v} {c}\n" for v, c in enumerate(colors) if c is not None)


def emit_dot(G: PlaneGraph) -> str:
    lines = ["graph G {"]
    for f, corners in enumerate(G.face_vertices):
        lines.append(f"  // face {f} size {len(corners)}: {' '.join(map(str, corners))}")
    for v in range(G.vertex_count):
        lines.append(f"  {v};")
    for e, (u, v) in enumerate(G.edges):
        lines.append(f"  {u} -- {v} [label={e}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
