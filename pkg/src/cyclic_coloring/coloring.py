"""Cyclic colorings: a face-based verifier and greedy color primitives."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .plane_graph import PlaneGraph


class PartialColoring(ValueError):
    pass


class NoColorAvailable(RuntimeError):
    pass


@dataclass(frozen=True)
class CyclicColoring:
    """Vertex colors in ``0..k-1``; ``None`` marks an uncolored vertex."""

    colors: tuple[Optional[int], ...]
    k: int

    def __post_init__(self) -> None:
        for c in self.colors:
            if c is not None and not 0 <= c < self.k:
                raise ValueError(f"color {c} outside palette of size {self.k}")

    @property
    def is_complete(self) -> bool:
        return all(c is not None for c in self.colors)

    @property
    def used(self) -> int:
        return len({c for c in self.colors if c is not None})

    def __getitem__(self, v: int) -> Optional[int]:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class Violation:
    """``kind`` is ``"clash"`` (two corners of ``face`` share ``color``) or ``"palette"``."""

    kind: str
    vertices: tuple[int, ...]
    color: int
    face: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "palette":
            return f"palette {self.vertices[0]} {self.color}"
        u, v = self.vertices
        return f"clash {self.face} {u} {v} {self.color}"


def verify(G: PlaneGraph, coloring: Sequence[Optional[int]], k: int) -> list[Violation]:
    """List every clashing vertex pair, plus out-of-palette colors.

    Works from the face boundaries directly so it can cross-check any
    adjacency-based search.  A pair sharing several faces is reported once,
    at the first face (by id) where it clashes.
    """
    colors = list(coloring)
    if len(colors) != G.vertex_count or any(c is None for c in colors):
        raise PartialColoring("coloring must assign every vertex")
    out = []
    for v, c in enumerate(colors):
        if not 0 <= c < k:
            out.append(Violation("palette", (v,), c))
    reported: set[tuple[int, int]] = set()
    for f, corners in enumerate(G.face_vertices):
        first: dict[int, int] = {}
        for v in corners:
            c = colors[v]
            u = first.setdefault(c, v)
            pair = (min(u, v), max(u, v))
            if u != v and pair not in reported:
                reported.add(pair)
                out.append(Violation("clash", pair, c, f))
    return out


def lowest_available(
    G: PlaneGraph,
    partial: Sequence[Optional[int]],
    v: int,
    k: int,
    extra_forbidden: Iterable[int] = (),
) -> int:
    """Smallest color not on a colored cyclic neighbor of ``v`` nor forbidden."""
    taken = set(extra_forbidden)
    for u in G.cyclic_adjacency[v]:
        c = partial[u]
        if c is not None:
            taken.add(c)
    for c in range(k):
        if c not in taken:
            return c
    raise NoColorAvailable(f"all {k} colors blocked at vertex {v}")


def permute_colors(
    coloring: Sequence[Optional[int]], permutation: Mapping[int, int] | Sequence[int]
) -> list[Optional[int]]:
    """Relabel colors through a palette bijection."""
    return [None if c is None else permutation[c] for c in coloring]
