import pytest

from conedec import (
    BinaryVector,
    add_qc_shifts,
    build_relaxed_polytope,
    cyclic_shift,
    enumerate_codewords,
    enumerate_vertices,
    evaluate_lp_performance,
    improve_representation,
    is_quasi_cyclic,
)
from conedec.qcimprove import ImproveTarget, shift_orbit


class TestAddQcShifts:
    def test_hamming_completes_orbit(self, hamming7):
        grown = add_qc_shifts(hamming7, hamming7.row(0), 1)
        assert grown.rows == 7
        assert set(grown.row_bits[:3]) == set(hamming7.row_bits)
        assert is_quasi_cyclic(grown, 1)

    def test_orbit_already_present(self, hamming7_full):
        again = add_qc_shifts(hamming7_full, hamming7_full.row(0), 1)
        assert again == hamming7_full

    def test_full_length_shift_appends_word_only(self, hamming7):
        w = hamming7.row(0) ^ hamming7.row(1)
        grown = add_qc_shifts(hamming7, w, 7)
        assert grown.rows == 4
        assert grown.row(3) == w

    def test_rejects_word_outside_dual(self, hamming7):
        with pytest.raises(ValueError):
            add_qc_shifts(hamming7, BinaryVector.from_string("1000000"), 1)

    def test_code_is_preserved(self, hamming7, hamming7_full):
        assert enumerate_codewords(hamming7) == enumerate_codewords(hamming7_full)

    def test_shift_orbit_lengths(self, hamming7):
        assert len(shift_orbit(hamming7.row(0), 1)) == 7
        assert len(shift_orbit(hamming7.row(0), 7)) == 1
        assert len(shift_orbit(BinaryVector.from_string("101010"), 2)) == 1
        assert len(shift_orbit(BinaryVector.from_string("100100"), 2)) == 3


class TestEvaluateLpPerformance:
    def test_tiny_p_is_error_free(self, hamming7):
        est = evaluate_lp_performance(hamming7, 1e-6, 50, seed=1)
        assert est.fer == 0.0
        assert est.fractional_rate == 0.0

    def test_more_rows_never_hurt(self, hamming7, hamming7_full):
        est3 = evaluate_lp_performance(hamming7, 0.05, 400, seed=9)
        est7 = evaluate_lp_performance(hamming7_full, 0.05, 400, seed=9)
        assert est7.fer <= est3.fer

    def test_determinism(self, hamming7):
        a = evaluate_lp_performance(hamming7, 0.1, 100, seed=5)
        b = evaluate_lp_performance(hamming7, 0.1, 100, seed=5)
        assert a == b


class TestImproveRepresentation:
    def test_hamming_reaches_zero_noncodeword(self, hamming7):
        report = improve_representation(
            hamming7, 1, ImproveTarget(max_noncw_vertices=0), budget=5
        )
        assert report.met_target
        assert len(report.iterations) == 1
        it = report.iterations[0]
        assert it.orbit_size == 4  # the four missing rotations
        assert it.vertex_count == 16
        assert it.non_codeword_vertex_count == 0
        assert report.final_matrix.rows == 7

    def test_added_word_is_lightest_missing(self, hamming7):
        report = improve_representation(
            hamming7, 1, ImproveTarget(max_noncw_vertices=0), budget=5
        )
        w = BinaryVector.from_bits(report.iterations[0].added_word)
        assert w.weight() == 4
        assert w.bits not in hamming7.row_bits
        shifts = {cyclic_shift(hamming7.row(0), s) for s in range(7)}
        assert w in shifts

    def test_target_met_at_input(self, hamming7_full):
        report = improve_representation(
            hamming7_full, 1, ImproveTarget(max_noncw_vertices=0), budget=5
        )
        assert report.met_target
        assert report.iterations == ()
        assert report.final_matrix == hamming7_full

    def test_budget_zero(self, hamming7):
        report = improve_representation(
            hamming7, 1, ImproveTarget(max_noncw_vertices=0), budget=0
        )
        assert not report.met_target
        assert report.iterations == ()

    def test_fer_target(self, hamming7):
        report = improve_representation(
            hamming7,
            1,
            ImproveTarget(max_fer=0.02, p=0.01),
            budget=3,
            seed=3,
            trials=200,
        )
        assert report.met_target or len(report.iterations) == 3
        for it in report.iterations:
            assert it.fer_estimate is not None

    def test_determinism(self, hamming7):
        a = improve_representation(
            hamming7, 1, ImproveTarget(max_noncw_vertices=0), budget=5, seed=2
        )
        b = improve_representation(
            hamming7, 1, ImproveTarget(max_noncw_vertices=0), budget=5, seed=2
        )
        assert a == b

    def test_target_validation(self):
        with pytest.raises(ValueError):
            ImproveTarget()
        with pytest.raises(ValueError):
            ImproveTarget(max_noncw_vertices=0, max_fer=0.1, p=0.1)
        with pytest.raises(ValueError):
            ImproveTarget(max_fer=0.1)


class TestRepresentationMonotonicity:
    def test_vertices_of_grown_matrix_satisfy_original_rows(self, hamming7, hamming7_full):
        P3 = build_relaxed_polytope(hamming7)
        vs7 = enumerate_vertices(build_relaxed_polytope(hamming7_full))
        for v in vs7.vertices:
            assert P3.contains(v)
