"""Integer discharging: initial charges, the two face-to-vertex rules, and an
auditor that explains every negative final charge by a reducible
configuration sitting on that very element.

Vertices start with ``deg - 6`` and faces with ``2*size - 6``; by Euler the
total is -12.  Each face of size >= 4 then sends 2 to every incident
4-vertex and 1 to every incident 5-vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .configurations import (
    ConfigurationMatch,
    Kind,
    detect_deg45_all_triangles,
    detect_min_degree,
    face_matches,
)
from .plane_graph import PlaneGraph, class_check, is_two_connected


class NotTwoConnected(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


@dataclass(frozen=True)
class ChargeLedger:
    vertex_charge: tuple[int, ...]
    face_charge: tuple[int, ...]
    phase: str

    @property
    def total(self) -> int:
        return sum(self.vertex_charge) + sum(self.face_charge)


def initial_charges(G: PlaneGraph) -> ChargeLedger:
    return ChargeLedger(
        tuple(d - 6 for d in G.degrees),
        tuple(2 * len(w) - 6 for w in G.faces),
        "initial",
    )


def rule_transfer(degree: int) -> int:
    return {4: 2, 5: 1}.get(degree, 0)


def apply_rules(G: PlaneGraph, ledger: ChargeLedger) -> ChargeLedger:
    """Run both rules once over every face of size four or more.

    Raises:
        NotTwoConnected: some face meets a vertex twice, so how often a rule
            fires there would be ambiguous.
    """
    if ledger.phase != "initial":
        raise ValueError("rules apply to an initial ledger")
    if not is_two_connected(G):
        raise NotTwoConnected("a face visits some vertex twice")
    vc = list(ledger.vertex_charge)
    fc = list(ledger.face_charge)
    for f, corners in enumerate(G.face_vertices):
        if len(corners) < 4:
            continue
        for v in corners:
            amount = rule_transfer(G.degree(v))
            fc[f] -= amount
            vc[v] += amount
    return ChargeLedger(tuple(vc), tuple(fc), "final")


def final_charges(G: PlaneGraph) -> ChargeLedger:
    return apply_rules(G, initial_charges(G))


@dataclass(frozen=True)
class FaceIntervals:
    """Maximal runs of charge-receiving corners (degree 4 or 5) on a face."""

    runs: tuple[tuple[int, ...], ...]
    full_boundary: bool
    size: int

    @property
    def inequality_holds(self) -> bool:
        """Runs are separated, so total run length plus run count fits the face."""
        if self.full_boundary:
            return True
        return sum(len(r) for r in self.runs) + len(self.runs) <= self.size


def face_intervals(G: PlaneGraph, f: int) -> FaceIntervals:
    corners = G.face_vertices[f]
    k = len(corners)
    gets = [rule_transfer(G.degree(v)) > 0 for v in corners]
    if all(gets):
        return FaceIntervals((), True, k)
    start = gets.index(False)
    runs: list[tuple[int, ...]] = []
    cur: list[int] = []
    for t in range(1, k + 1):
        i = (start + t) % k
        if gets[i]:
            cur.append(corners[i])
        elif cur:
            runs.append(tuple(cur))
            cur = []
    return FaceIntervals(tuple(runs), False, k)


@dataclass(frozen=True)
class AuditEntry:
    element: str  # "v" or "f"
    ident: int
    initial: int
    final: int
    witness: Optional[ConfigurationMatch]

    def line(self) -> str:
        w = self.witness.kind.value if self.witness else "UNEXPLAINED"
        return f"{self.element} {self.ident} {self.initial} {self.final} {w}"


@dataclass
class AuditReport:
    D: int
    initial_total: int
    final_total: int
    entries: list[AuditEntry] = field(default_factory=list)

    @property
    def unexplained_negatives(self) -> list[AuditEntry]:
        return [e for e in self.entries if e.witness is None]


_FACE_WITNESS_KINDS = {
    4: (Kind.FOUR_FACE_4VERTEX, Kind.FOUR_FACE_THREE5),
    5: (Kind.FIVE_FACE_ADJ_LOW, Kind.RUN44, Kind.RUN454_OR_455, Kind.RUN545),
}
_LONG_FACE_KINDS = (Kind.RUN44, Kind.RUN454_OR_455, Kind.RUN545)


def _vertex_witnesses(G: PlaneGraph, D: int) -> dict[int, ConfigurationMatch]:
    out: dict[int, ConfigurationMatch] = {}
    for m in detect_min_degree(G, D) + detect_deg45_all_triangles(G, D):
        out.setdefault(m.roles["v"], m)
    return out


def _face_witness(G: PlaneGraph, f: int, D: int) -> Optional[ConfigurationMatch]:
    kinds = _FACE_WITNESS_KINDS.get(G.face_size(f), _LONG_FACE_KINDS)
    if G.face_size(f) < 4:
        return None
    found = face_matches(G, f, kinds, D)
    return found[0] if found else None


def audit(G: PlaneGraph, D: Optional[int] = None) -> AuditReport:
    """Find a configuration behind every element left with negative charge.

    Raises:
        PreconditionFailed: ``G`` is outside the class, not 2-connected, has
            a separating cycle of length at most three, or a face larger
            than ``D``.
    """
    report = class_check(G)
    D = report.D if D is None else D
    if not report.minimal_preconditions:
        raise PreconditionFailed("graph does not satisfy the structural preconditions")
    if report.max_face_size > D:
        raise PreconditionFailed(f"face of size {report.max_face_size} exceeds D={D}")
    start = initial_charges(G)
    end = apply_rules(G, start)
    out = AuditReport(D, start.total, end.total)
    witnesses = _vertex_witnesses(G, D)
    for v, charge in enumerate(end.vertex_charge):
        if charge < 0:
            out.entries.append(AuditEntry("v", v, start.vertex_charge[v], charge,
                                          witnesses.get(v)))
    for f, charge in enumerate(end.face_charge):
        if charge < 0:
            out.entries.append(AuditEntry("f", f, start.face_charge[f], charge,
                                          _face_witness(G, f, D)))
    return out
