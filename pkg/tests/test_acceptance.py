"""Acceptance gate: the thirteen headline reproduction checks.

Each test reads one result from the session-wide papercheck run, prints a
single ``[acceptance] <check-id>: PASS|FAIL`` line to the real stdout (so the
verdicts survive pytest's capture), and then asserts the check.  Two checks
are pinned to DISCREPANCY rather than PASS: ``ring-capture`` (the three
published closed forms for the capture time disagree with each other; the
measured sequence follows (k-1)^2 + 1) and ``sts-sampling`` (the printed
safe-vertex matrix condition has inverted polarity relative to the prose;
the prose reading is implemented).  Everything they claim measurably is
still verified here.
"""
import sys

import pytest

from ograph_pursuit.papercheck import DISCREPANCY, PASS


@pytest.fixture
def _verdict(request):
    """Emit one verdict line per criterion through pytest's own reporter,
    so the lines survive output capture in any mode."""
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")

    def verdict(r, allowed):
        ok = bool(r.detail["criterion_ok"]) and r.status in allowed
        line = f"[acceptance] {r.check_id}: {'PASS' if ok else 'FAIL'}"
        if reporter is not None:
            reporter.write_line(line)
        else:
            print(line, file=sys.__stdout__, flush=True)
        return ok

    return verdict


def test_01_every_strong_petersen_orientation_has_two_cops(papercheck_results, _verdict):
    r = papercheck_results["petersen"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured["orientations"] == 32768
    assert r.measured["strong"] == 1920
    assert r.measured["all_strong_cop_2"]
    assert r.measured["bidirected_cop"] == 3


def test_02_solver_matches_reference_oracle(papercheck_results, _verdict):
    r = papercheck_results["solver-oracle"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured == {"instances": 1458, "mismatches": 0}


def test_03_fig1_cop_number_and_cycle_structure(papercheck_results, _verdict):
    r = papercheck_results["fig1"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured == {"sources": 1, "cop_number": 2, "cycles": 5,
                          "all_cycles_cop_dominated": True}


def test_04_ring_capture_times_are_quadratic(papercheck_results, _verdict):
    r = papercheck_results["ring-capture"]
    assert _verdict(r, {DISCREPANCY}), r.detail
    assert r.measured["capture_times"] == {
        "3": 5, "4": 10, "5": 17, "6": 26, "7": 37, "8": 50,
        "9": 65, "10": 82, "11": 101, "12": 122,
    }
    assert r.measured["fitted_quadratic"] == {"a": 1.0, "b": -2.0, "c": 2.0}
    agreement = r.measured["formula_agreement"]
    assert agreement["(k-1)^2+1"] and not agreement["k^2-2k"]


def test_05_line_digraph_preserves_cop_number(papercheck_results, _verdict):
    r = papercheck_results["line-digraph"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured["instances"] == 8066
    assert r.measured["cop_mismatches"] == 0
    assert r.measured["star_edge_cop"] == {str(n): n - 1 for n in range(3, 9)}


def test_06_coreset_contraction_behaviour(papercheck_results, _verdict):
    r = papercheck_results["coresets"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured["block_count_equals_n"] and r.measured["contracts_back"]
    assert r.measured["four_block_q3"]["cop_lower_confirmed"]
    assert r.measured["four_block_q3"]["limit_cop"] == 2
    assert r.measured["sequences_converged"] == 100
    assert set(r.measured["limit_cops"]) <= {1, 2}


def test_07_directed_cycle_cop_numbers(papercheck_results, _verdict):
    r = papercheck_results["directed-cycles"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured["standard"] == {str(n): 2 for n in range(3, 13)}
    assert r.measured["fully_active"] == {str(n): (n + 1) // 2 for n in range(3, 13)}


def test_08_tournament_cop_win_iff_dominating_vertex(papercheck_results, _verdict):
    r = papercheck_results["tournaments"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured == {"instances": 1299, "mismatches": 0}


def test_09_orientation_constructions_hit_their_bounds(papercheck_results, _verdict):
    r = papercheck_results["orientation-bounds"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured["copwin_orientations_cop_win"] == 50
    assert r.measured["p9_alternating_needs_more_than_4"]
    assert r.measured["petersen_independent_more_than_3"]


def test_10_outerplanar_strong_orientations_need_two_cops(papercheck_results, _verdict):
    r = papercheck_results["outerplanar"]
    assert _verdict(r, {PASS}), r.detail
    assert r.measured == {"instances": 50, "all_cop_2": True}


def test_11_projective_incidence_orientations(papercheck_results, _verdict):
    r = papercheck_results["projective"]
    assert _verdict(r, {PASS}), r.detail
    for q in (2, 3):
        entry = r.measured[str(q)]
        assert entry["strong"] and entry["girth"] == 6
        assert entry["cop_number"] == 3


def test_12_optimal_play_pathologies(papercheck_results, _verdict):
    r = papercheck_results["optimal-play"]
    assert _verdict(r, {PASS}), r.detail
    assert tuple(r.measured["fig2_distance_jump"]) == (2, 6)
    assert r.measured["fig3_capture_time"] == 14
    assert r.measured["fig3_revisits_v1"]
    assert r.measured["threshold_n"] == 13


def test_13_steiner_safe_vertex_sampling(papercheck_results, _verdict):
    r = papercheck_results["sts-sampling"]
    assert _verdict(r, {DISCREPANCY}), r.detail
    assert r.measured["queries"] == 1200
    assert r.measured["query_mismatches"] == 0
    assert r.measured["some_sts15_needs_2_cops"]
