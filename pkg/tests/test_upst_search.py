from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from qwalk.constructions import (oriented_cycle, oriented_k3,
                                 oriented_to_hermitian, upst_circulant)
from qwalk.upst_search import (charpoly_rule_out, classify_all,
                               complement_c7_adjacency, exhaustive_rule_out,
                               nk_table, recognize_sqrt_grid,
                               regular_underlying_graphs, sigma_bound_filter,
                               spectrum_candidates, upst_necessary_conditions)


# --- gap bounds ----------------------------------------------------------------

def test_sigma_bound_examples():
    assert sigma_bound_filter(12) == {"passes": False,
                                      "sigma_sq_max": Fraction(12, 13)}
    res = sigma_bound_filter(11)
    assert res["passes"] and res["sigma_sq_max"] == 1
    res = sigma_bound_filter(6)
    assert res["passes"] and 1 <= res["sigma_sq_max"] < 2  # forces Delta = 1


def test_sigma_bound_edge_count():
    # fewer edges tighten the bound
    sparse = sigma_bound_filter(6, edges=4)
    assert not sparse["passes"]


# --- necessary conditions --------------------------------------------------------

def test_k3_passes_all_conditions():
    checks = upst_necessary_conditions(oriented_to_hermitian(oriented_k3()))
    assert checks.all_pass
    assert checks.delta == 3


def test_cyclic_c4_fails():
    checks = upst_necessary_conditions(
        oriented_to_hermitian(oriented_cycle(4)))
    assert not checks.all_pass
    # 4x4 eigensolver oracle: the cyclic orientation has a repeated eigenvalue
    dec_values = np.linalg.eigvalsh(
        oriented_to_hermitian(oriented_cycle(4)).array)
    assert np.min(np.diff(np.sort(dec_values))) < 1e-9
    assert checks.failure == "degenerate spectrum"


def test_upst_circulant_passes():
    circ = upst_circulant(3, 0, 1, 1)
    checks = upst_necessary_conditions(circ.matrix, oriented=False)
    assert checks.all_pass  # flatness of Fourier vectors is structural
    assert checks.periodic  # rational spectrum satisfies the ratio condition
    checks = upst_necessary_conditions(
        upst_circulant(5, "1/2", "1/3", 2).matrix, oriented=False)
    assert checks.all_pass


def test_sqrt_grid_recognition():
    root3 = np.sqrt(3)
    assert recognize_sqrt_grid([-root3, 0.0, root3]) == (3, (-1, 0, 1))
    assert recognize_sqrt_grid([-3.0, -1.0, 1.0, 3.0]) == (1, (-3, -1, 1, 3))
    assert recognize_sqrt_grid([0.5, 1.0]) is None
    assert recognize_sqrt_grid([0.0, 0.0]) == (1, (0, 0))


# --- exhaustive search -------------------------------------------------------------

def test_exhaustive_counts_and_no_survivors():
    r4 = exhaustive_rule_out(4)
    assert len(r4) == 2 ** 4 + 2 ** 6 == 80
    assert all(r.verdict == "ruled-out-exhaustive" for r in r4)
    r5 = exhaustive_rule_out(5)
    assert len(r5) == 2 ** 5 + 2 ** 10 == 1056
    assert all(r.verdict == "ruled-out-exhaustive" for r in r5)


def test_exhaustive_n3_control_survives():
    r3 = exhaustive_rule_out(3)
    assert len(r3) == 8
    assert all(r.verdict == "survives" for r in r3)


def test_exhaustive_records_failed_condition():
    reasons = Counter(r.witness.get("failed_condition")
                      for r in exhaustive_rule_out(4))
    assert None not in reasons
    assert sum(reasons.values()) == 80


def test_trace_identity_over_enumerated_orientations():
    # sum (theta_r - theta_s)^2 = 2 n Tr(H^2) = 4 m n over every orientation
    from qwalk.upst_search import orientations
    name, k, edges = regular_underlying_graphs(4)[0]
    for mask, graph in orientations(edges, 4):
        h = oriented_to_hermitian(graph).array
        eigs = np.linalg.eigvalsh(h)
        lhs = sum((a - b) ** 2 for a in eigs for b in eigs)
        assert abs(lhs - 2 * 4 * np.trace(h @ h).real) < 1e-8
        assert abs(lhs - 4 * len(edges) * 4) < 1e-8


def test_regular_underlying_graphs_validation():
    with pytest.raises(ValueError):
        regular_underlying_graphs(6)


# --- spectrum candidates -------------------------------------------------------------

def test_nk_table_matches_bounds():
    assert nk_table() == {6: [3, 4, 5], 7: [4, 6], 8: [6, 7],
                          9: [8], 10: [9], 11: [10]}


def test_spectrum_candidate_rows():
    assert spectrum_candidates(7, 4) == [(0, 1, 2, 3)]
    assert spectrum_candidates(7, 6) == [(0, 1, 2, 4)]
    assert spectrum_candidates(11, 10) == [(0, 1, 2, 3, 4, 5)]
    # exhaustive enumeration oracle for the (6,3) parity obstruction:
    # 18 = 2(a^2+b^2+c^2) over distinct positive integers <= 6 is unsolvable
    solutions = [(a, b, c) for a in range(1, 7) for b in range(a + 1, 7)
                 for c in range(b + 1, 7) if 2 * (a * a + b * b + c * c) == 18]
    assert solutions == []
    assert spectrum_candidates(6, 3) == []


def test_spectrum_candidates_reject_off_table():
    with pytest.raises(ValueError):
        spectrum_candidates(7, 5)  # odd k with odd n
    with pytest.raises(ValueError):
        spectrum_candidates(12, 11)


def test_only_three_nonempty_cases():
    nonempty = {(n, k): spectrum_candidates(n, k)
                for n, ks in nk_table().items() for k in ks
                if spectrum_candidates(n, k)}
    assert set(nonempty) == {(11, 10), (7, 6), (7, 4)}


# --- charpoly rule-outs ----------------------------------------------------------------

def test_charpoly_rule_out_all_three():
    assert charpoly_rule_out("K7", [0, 1, 2, 4])
    assert charpoly_rule_out("K11", [0, 1, 2, 3, 4, 5])
    assert charpoly_rule_out("C7bar", [0, 1, 2, 3])
    with pytest.raises(ValueError):
        charpoly_rule_out("petersen", [0, 1])


def test_complement_c7_is_4_regular():
    adj = complement_c7_adjacency()
    assert all(sum(row) == 4 for row in adj)


def test_charpoly_no_false_rule_out():
    # sanity: a graph is never ruled out against its own exact spectrum
    k3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    from qwalk.numtheory import charpoly_mod2, poly_from_roots_mod2
    assert charpoly_mod2(k3) == poly_from_roots_mod2([2, -1, -1])


# --- orchestration -------------------------------------------------------------------

def test_classify_all_verdicts():
    assert [r.verdict for r in classify_all(2)] == ["survives"]
    assert all(r.verdict == "survives" for r in classify_all(3))
    for n in (4, 5):
        assert all(r.verdict == "ruled-out-exhaustive"
                   for r in classify_all(n))
    for n in range(6, 12):
        assert all(r.verdict in ("ruled-out-spectrum", "ruled-out-charpoly")
                   for r in classify_all(n))
    assert [r.verdict for r in classify_all(12)] == ["ruled-out-bounds"]
    assert [r.verdict for r in classify_all(30)] == ["ruled-out-bounds"]


def test_report_json_lines():
    import json
    report = exhaustive_rule_out(3)[0]
    payload = json.loads(report.to_json_line())
    assert payload["verdict"] == "survives"
    assert payload["n"] == 3
