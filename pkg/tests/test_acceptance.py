"""Acceptance criteria AC-1 .. AC-8.

Each test prints (and records for the terminal summary) one line
``AC-n PASS|FAIL <detail>`` before asserting.
"""

import time

import pytest

from cyclic_coloring.coloring import verify
from cyclic_coloring.colorer import cyclic_color
from cyclic_coloring.configurations import find_first_configuration
from cyclic_coloring.discharging import audit, final_charges, initial_charges
from cyclic_coloring.generator import (
    class_corpus,
    cube,
    icosahedron,
    k4,
    octahedron,
    wheel,
)
from cyclic_coloring.oracle import cyclic_adjacency_graph, cyclic_chromatic_number, exact_color
from cyclic_coloring.plane_graph import class_check, in_class
from cyclic_coloring.reductions import extend_coloring

from conftest import ACCEPTANCE_LINES

CORPUS_SEED = 20100101
SMALL_SEED = 12


def report(ac: str, ok: bool, detail: str) -> None:
    line = f"{ac} {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


@pytest.fixture(scope="module")
def main_corpus():
    return class_corpus(200, seed=CORPUS_SEED)


@pytest.fixture(scope="module")
def small_graphs():
    """A second seeded corpus of small class graphs for the exact-search checks."""
    return [e for e in class_corpus(60, seed=SMALL_SEED, max_vertices=14)
            if e.graph.vertex_count <= 12]


@pytest.fixture(scope="module")
def minimal_graphs(main_corpus):
    return [e for e in main_corpus if class_check(e.graph).minimal_preconditions]


@pytest.fixture(scope="module")
def coloring_runs(main_corpus):
    """Color the whole corpus once, logging every reduction for AC-5."""
    reductions = []
    results = []
    start = time.perf_counter()
    for e in main_corpus:
        results.append(cyclic_color(e.graph, observer=reductions.append))
    return results, reductions, time.perf_counter() - start


def test_ac1_charge_totals(main_corpus):
    graphs = [e.graph for e in main_corpus]
    graphs += [k4(), octahedron(), icosahedron()] + [wheel(n) for n in range(5, 13)]
    start = time.perf_counter()
    bad = [G for G in graphs
           if initial_charges(G).total != -12 or final_charges(G).total != -12]
    elapsed = time.perf_counter() - start
    sizes = [e.graph.vertex_count for e in main_corpus]
    ok = not bad and elapsed < 5 and len(main_corpus) >= 200 and min(sizes) >= 6 \
        and max(sizes) <= 80
    report("AC-1", ok, f"{len(graphs)} graphs, {len(bad)} off -12, {elapsed:.2f}s")
    assert ok


def test_ac2_wheel_tightness():
    start = time.perf_counter()
    failures = []
    for n in range(5, 13):
        G = wheel(n)
        chi = cyclic_chromatic_number(G).chromatic_number
        res = cyclic_color(G, strategy="reduce")
        if chi != n + 1 or verify(G, res.colors, n + 1) or res.k > n + 1:
            failures.append(n)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10
    report("AC-2", ok, f"wheels 5..12 chi = n+1, failures {failures}, {elapsed:.2f}s")
    assert ok


def test_ac3_corpus_colored_within_bound(main_corpus, coloring_runs):
    results, _, elapsed = coloring_runs
    targets = {e.graph.max_face_size for e in main_corpus}
    good = 0
    for e, res in zip(main_corpus, results):
        k = e.graph.max_face_size + 1
        if res.k == k and not verify(e.graph, res.colors, k):
            good += 1
    ok = good == len(main_corpus) >= 200 and targets == set(range(5, 11)) and elapsed < 60
    report("AC-3", ok, f"{good}/{len(main_corpus)} verified at K = D*+1, {elapsed:.2f}s")
    assert ok


def test_ac4_no_minimal_graph(minimal_graphs):
    missing = [e.name for e in minimal_graphs if find_first_configuration(e.graph) is None]
    ok = not missing and len(minimal_graphs) > 0
    report("AC-4", ok, f"{len(minimal_graphs)} precondition graphs, "
                       f"{len(missing)} without a configuration")
    assert ok


def test_ac5_reduction_soundness(coloring_runs):
    _, reductions, _ = coloring_runs
    failures = 0
    lifted = 0
    for red in reductions:
        G, H = red.original, red.reduced
        if not in_class(H) or H.vertex_count >= G.vertex_count:
            failures += 1
            continue
        if H.vertex_count <= 14:
            k = red.match.D + 1
            colors = exact_color(cyclic_adjacency_graph(H), cap=k, minimize=False).coloring
            try:
                out = extend_coloring(G, red.plan, colors, k)
            except Exception:
                failures += 1
                continue
            failures += bool(verify(G, out, k))
            lifted += 1
    ok = failures == 0 and len(reductions) > 0
    report("AC-5", ok, f"{len(reductions)} reductions, {lifted} oracle lifts, "
                       f"{failures} failures")
    assert ok


def test_ac6_discharging_audit(minimal_graphs):
    unexplained = sum(len(audit(e.graph).unexplained_negatives) for e in minimal_graphs)
    ok = unexplained == 0 and len(minimal_graphs) > 0
    report("AC-6", ok, f"{len(minimal_graphs)} graphs audited, {unexplained} unexplained")
    assert ok


def test_ac7_oracle_cross_checks(small_graphs):
    start = time.perf_counter()
    fixed = [cyclic_chromatic_number(G).chromatic_number for G in (k4(), octahedron(), cube())]
    bad = 0
    for e in small_graphs:
        G = e.graph
        chi = cyclic_chromatic_number(G).chromatic_number
        bad += not (G.max_face_size <= chi <= G.max_face_size + 1)
    elapsed = time.perf_counter() - start
    ok = fixed == [4, 3, 4] and bad == 0 and len(small_graphs) > 0 and elapsed < 30
    report("AC-7", ok, f"K4/octahedron/Q3 = {fixed}, {len(small_graphs)} small graphs, "
                       f"{bad} out of bounds, {elapsed:.2f}s")
    assert ok


def test_ac8_determinism(main_corpus, coloring_runs):
    results, _, _ = coloring_runs
    again = class_corpus(200, seed=CORPUS_SEED)
    same_corpus = [e.checksum() for e in again] == [e.checksum() for e in main_corpus]
    same_runs = True
    for e, res in zip(again, results):
        rerun = cyclic_color(e.graph)
        if rerun.colors != res.colors or rerun.trace != res.trace:
            same_runs = False
            break
    ok = same_corpus and same_runs
    report("AC-8", ok, f"corpus identical {same_corpus}, traces and colorings identical {same_runs}")
    assert ok
