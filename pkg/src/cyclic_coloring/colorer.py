"""End-to-end cyclic coloring with at most ``max(Δ*, 5) + 1`` colors.

The pipeline on a graph ``G`` at palette size ``K``:

1. small graphs (``|V| <= base_threshold``) go straight to the exact search;
2. a separating 2- or 3-cycle splits ``G`` into two parts that are colored
   independently and glued after a palette permutation;
3. graphs that are not 2-connected go to the exact search;
4. otherwise the first applicable configuration is reduced, the smaller
   graph is colored, and the extension plan lifts the coloring back;
5. if no configuration applies or the lift fails, the exact search runs
   with a node budget.

Reduction chains are unrolled iteratively; only splits recurse.  Every
coloring handed back passes :func:`verify`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import oracle
from .coloring import CyclicColoring, verify
from .configurations import iter_configurations
from .plane_graph import (
    PlaneGraph,
    ShortCycle,
    class_check,
    find_separating_short_cycle,
    is_two_connected,
    split_along_cycle,
)
from .reductions import (
    ExtensionPlan,
    Inapplicable,
    Reduction,
    ReductionExtensionFailure,
    extend_coloring,
    reduce,
)

STRATEGIES = ("auto", "reduce", "oracle")


class NotInClass(ValueError):
    """The input violates the class requirements and ``force`` was not set."""


class Infeasible(RuntimeError):
    """The exact search proved that no coloring with ``K`` colors exists."""


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Step:
    """One pipeline step.  ``action`` is Reduce, SplitCycle, OracleBase or Fallback."""

    action: str
    detail: str
    n: int
    depth: int

    def line(self) -> str:
        return f"{'  ' * self.depth}{self.action} {self.detail} n={self.n}".rstrip()


@dataclass
class Stats:
    max_depth: int = 0
    reductions: Counter = field(default_factory=Counter)
    splits: int = 0
    fallbacks: Counter = field(default_factory=Counter)


@dataclass
class ColoringResult:
    coloring: CyclicColoring
    k: int
    trace: list[Step]
    stats: Stats

    @property
    def colors(self) -> tuple[int, ...]:
        return self.coloring.colors  # type: ignore[return-value]


Observer = Callable[[Reduction], None]


@dataclass
class _Run:
    k: int
    D: int
    base_threshold: int
    node_budget: Optional[int]
    strategy: str
    observer: Optional[Observer]
    trace: list[Step] = field(default_factory=list)
    stats: Stats = field(default_factory=Stats)

    def log(self, action: str, detail: str, G: PlaneGraph, depth: int) -> None:
        self.trace.append(Step(action, detail, G.vertex_count, depth))
        self.stats.max_depth = max(self.stats.max_depth, depth)

    # -- exact search ------------------------------------------------------------

    def exact(self, G: PlaneGraph, minimize: bool = False) -> list[int]:
        try:
            res = oracle.exact_color(oracle.cyclic_adjacency_graph(G), cap=self.k,
                                     node_budget=self.node_budget, minimize=minimize)
        except oracle.Infeasible as exc:
            raise Infeasible(str(exc)) from exc
        except oracle.Exceeded as exc:
            raise BudgetExceeded(str(exc)) from exc
        return list(res.coloring)

    def fallback(self, G: PlaneGraph, reason: str, depth: int) -> list[int]:
        self.log("Fallback", reason, G, depth)
        self.stats.fallbacks[reason] += 1
        return self.exact(G)

    # -- pipeline ------------------------------------------------------------------

    def color(self, G: PlaneGraph, depth: int = 0) -> list[int]:
        # Each entry is (graph, plan) awaiting a lift once the graph below it
        # is colored.
        pending: list[tuple[PlaneGraph, ExtensionPlan]] = []
        current = G
        colors: Optional[list[int]] = None
        while colors is None:
            d = depth + len(pending)
            if current.vertex_count <= self.base_threshold:
                self.log("OracleBase", "", current, d)
                colors = self.exact(current)
                break
            cycle = find_separating_short_cycle(current)
            if cycle is not None:
                colors = self.split(current, cycle, d)
                break
            if not is_two_connected(current):
                colors = self.fallback(current, "not-2-connected", d)
                break
            red = self.first_reduction(current)
            if isinstance(red, str):
                colors = self.fallback(current, red, d)
                break
            if self.observer is not None:
                self.observer(red)
            self.log("Reduce", str(red.match.kind), current, d)
            self.stats.reductions[red.match.kind.value] += 1
            pending.append((current, red.plan))
            current = red.reduced
        while pending:
            host, plan = pending.pop()
            try:
                colors = extend_coloring(host, plan, colors, self.k)
            except ReductionExtensionFailure:
                colors = self.fallback(host, "extension-failed", depth + len(pending))
        return colors

    def first_reduction(self, G: PlaneGraph) -> Reduction | str:
        """The first match in priority order that reduces, or why none did."""
        seen = False
        for match in iter_configurations(G, self.D):
            seen = True
            try:
                return reduce(G, match)
            except Inapplicable:
                continue
        return "inapplicable" if seen else "no-configuration"

    def split(self, G: PlaneGraph, cycle: ShortCycle, depth: int) -> list[int]:
        self.log("SplitCycle", str(len(cycle)), G, depth)
        self.stats.splits += 1
        return split_merge(G, cycle, self.k, lambda part: self.color(part, depth + 1))


def split_merge(
    G: PlaneGraph,
    cycle: ShortCycle,
    k: int,
    recurse: Callable[[PlaneGraph], Sequence[int]],
) -> list[int]:
    """Color both sides of a separating 2- or 3-cycle and glue the results.

    The cycle vertices are pairwise adjacent, so each side gives them
    distinct colors; the second side's palette is permuted to agree with
    the first on the cycle.

    Raises:
        ValueError: ``cycle`` does not separate ``G``.
    """
    from .plane_graph import is_separating

    if len(cycle) not in (2, 3) or not is_separating(G, cycle):
        raise ValueError("cycle is not a separating 2- or 3-cycle")
    merged: list[Optional[int]] = [None] * G.vertex_count
    for part, orig in split_along_cycle(G, cycle):
        part_colors = recurse(part)
        local = {x: part_colors[i] for i, x in enumerate(orig)}
        if merged[cycle.vertices[0]] is not None:
            perm: dict[int, int] = {local[x]: merged[x] for x in cycle.vertices}  # type: ignore[misc]
            free = iter(c for c in range(k) if c not in perm.values())
            for c in range(k):
                if c not in perm:
                    perm[c] = next(free)
            local = {x: perm[c] for x, c in local.items()}
        for x, c in local.items():
            merged[x] = c
    bad = verify(G, merged, k)
    if bad:  # pragma: no cover - would mean a part was colored wrongly
        raise AssertionError(f"merged coloring has {len(bad)} violations")
    return merged  # type: ignore[return-value]


def cyclic_color(
    G: PlaneGraph,
    colors: Optional[int] = None,
    *,
    force: bool = False,
    strategy: str = "auto",
    base_threshold: int = 12,
    node_budget: Optional[int] = 10**7,
    observer: Optional[Observer] = None,
) -> ColoringResult:
    """Cyclically color ``G`` with at most ``colors`` (default ``max(Δ*,5)+1``) colors.

    ``strategy="oracle"`` skips the pipeline and runs the exact search;
    ``"reduce"`` keeps the exact search only for graphs of at most three
    vertices.  With ``force`` a graph outside the class is colored by the
    minimizing exact search alone.  ``observer`` sees every reduction
    before the pipeline recurses on it.

    Raises:
        NotInClass: ``G`` is outside the class and ``force`` is off.
        Infeasible: the exact search ruled out a ``K``-coloring.
        BudgetExceeded: the exact search ran out of nodes.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    report = class_check(G)
    D = report.D
    k = D + 1 if colors is None else colors
    if k < 1:
        raise ValueError("need at least one color")
    threshold = 3 if strategy == "reduce" else base_threshold
    run = _Run(k, D, threshold, node_budget, strategy, observer)
    if not report.in_class:
        if not force:
            raise NotInClass("graph is outside the class (loops, 2-faces or touching big faces)")
        run.log("Fallback", "forced", G, 0)
        run.stats.fallbacks["forced"] += 1
        result = run.exact(G, minimize=True)
    elif strategy == "oracle":
        run.log("OracleBase", "", G, 0)
        result = run.exact(G)
    else:
        result = run.color(G)
    bad = verify(G, result, k)
    if bad:  # pragma: no cover - every branch above already verifies
        raise AssertionError(f"coloring has {len(bad)} violations")
    return ColoringResult(CyclicColoring(tuple(result), k), k, run.trace, run.stats)


@dataclass(frozen=True)
class BoundReport:
    lower: int
    upper: int
    colors_used: int
    result: ColoringResult

    @property
    def certified(self) -> bool:
        return self.lower <= self.colors_used <= self.upper

    def line(self) -> str:
        return f"bounds [{self.lower}, {self.upper}] colored with {self.result.k}"


def prove_bound(G: PlaneGraph, **options) -> BoundReport:
    """Certify ``max face <= chi_c <= Δ*+1`` on ``G`` by coloring it.

    Raises:
        NotInClass: ``G`` is outside the class or has ``Δ* < 5``.
    """
    report = class_check(G)
    if not report.in_class:
        raise NotInClass("graph is outside the class")
    if report.max_face_size < 5:
        raise NotInClass(f"maximum face size {report.max_face_size} is below 5")
    res = cyclic_color(G, report.max_face_size + 1, **options)
    used = len(set(res.colors))
    return BoundReport(report.max_face_size, report.max_face_size + 1, used, res)
