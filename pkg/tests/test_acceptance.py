"""Acceptance criteria, one test per criterion at the stated scale.

Each test prints a single pass/fail line (visible with pytest -s) and
asserts the criterion exactly as stated, including its time budget
where one is given.

Criterion 11 is expected to fail on its plain-pattern leg: the 6-cycle
admits an order avoiding {P5, P6, P9} while not being independent
2-thin, so the three-route equivalence cannot hold; the sound routes
(bipartite patterns vs solver) do agree everywhere.  The analysis
lives in the decisions log; the criterion is asserted as stated rather
than weakened.
"""

import time

from thinness import sweeps


def _finish(num: int, name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:2d} ({name}): {status}" + (f" {detail}" if detail else ""))
    assert ok, f"criterion {num} ({name}) failed {detail}"


def _run(num: int, name: str, report: sweeps.SweepReport,
         budget: float | None = None, elapsed: float | None = None):
    detail = f"[{report.total} checks"
    if elapsed is not None:
        detail += f", {elapsed:.1f}s"
    detail += "]"
    if report.mismatches:
        detail += " first mismatches: " + "; ".join(report.mismatches[:3])
    ok = report.ok and (budget is None or elapsed is None or elapsed <= budget)
    _finish(num, name, ok, detail)


def test_c01_fig1_values():
    start = time.monotonic()
    report = sweeps.sweep_fig1(budget_seconds=120.0)
    _run(1, "fig1 exact values", report, elapsed=time.monotonic() - start)


def test_c02_g72_certificate_and_model():
    start = time.monotonic()
    report = sweeps.sweep_g72()
    elapsed = time.monotonic() - start
    _run(2, "g72 model and certificate", report, budget=5.0, elapsed=elapsed)


def test_c03_forbidden_pattern_two_thin():
    start = time.monotonic()
    report = sweeps.sweep_forb_pat_2_thin(n_max=6, samples=500,
                                          sample_sizes=(7, 8), seed=0)
    elapsed = time.monotonic() - start
    _run(3, "patterns equal thin<=2", report, budget=600.0, elapsed=elapsed)


def test_c04_pthin_at_most_bandwidth():
    start = time.monotonic()
    report = sweeps.sweep_pthin_le_bw(n_max=6)
    elapsed = time.monotonic() - start
    _run(4, "pthin <= bandwidth", report, budget=600.0, elapsed=elapsed)


def test_c05_independent_bounds():
    start = time.monotonic()
    report = sweeps.sweep_theorem2(n_max=6)
    _run(5, "indthin/indpthin width bounds", report,
         elapsed=time.monotonic() - start)


def test_c06_isoperimetric_peak():
    start = time.monotonic()
    report = sweeps.sweep_peak(n_max=6, grid_sizes=(2, 3, 4))
    _run(6, "thin >= peak/degree", report, elapsed=time.monotonic() - start)


def test_c07_order_extension_lemmas():
    start = time.monotonic()
    report = sweeps.sweep_ceo(samples=1000, n_max=6, seed=0)
    _run(7, "order extension vs brute force", report,
         elapsed=time.monotonic() - start)


def test_c08_digraph_pattern_lemma():
    start = time.monotonic()
    report = sweeps.sweep_dpat(samples=1000, n_max=8, seed=0)
    _run(8, "digraph acyclicity vs patterns", report,
         elapsed=time.monotonic() - start)


def test_c09_model_round_trips():
    start = time.monotonic()
    report = sweeps.sweep_model_roundtrip(samples=300, n_max=10, seed=0)
    elapsed = time.monotonic() - start
    _run(9, "2-class model round trips", report, budget=120.0, elapsed=elapsed)


def test_c10_three_class_models():
    start = time.monotonic()
    report = sweeps.sweep_vpg3(samples=100, n_max=9, seed=0)
    _run(10, "3-class bounded-bend models", report,
         elapsed=time.monotonic() - start)


def test_c11_class_theorems():
    start = time.monotonic()
    report = sweeps.sweep_class_theorems(n_max=7)
    _run(11, "independent class equivalences", report,
         elapsed=time.monotonic() - start)


def test_c12_conflict_graph_perfection():
    start = time.monotonic()
    report = sweeps.sweep_perfection(n_max=6, orders_per_graph=200, seed=0)
    _run(12, "conflict graph chi equals omega", report,
         elapsed=time.monotonic() - start)
