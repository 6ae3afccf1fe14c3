import json
import math

import pytest

from bcml import Bicomplex, MLDistParams, mgf, moment
from bcml.oracles import (DivergentIntegralError, OutOfRegionError,
                          UnsupportedByOracleError, default_grid,
                          finite_difference_moments, grid_from_json,
                          load_default_grid, mgf_oracle,
                          moment_quadrature_oracle, moment_series_oracle,
                          verify_all)


def params(a, alpha):
    return MLDistParams(Bicomplex.coerce(a), Bicomplex.coerce(alpha))


class TestSeriesOracle:
    def test_normalization(self):
        for a, alpha in [(0.0, 1.0), (0.5, 0.5), (0.8, 2.0)]:
            got = moment_series_oracle(0, params(a, alpha))
            assert got.isclose(1.0, rel_tol=1e-10)

    def test_first_moment_half_half(self):
        got = moment_series_oracle(1, params(0.5, 0.5))
        assert got.x0 == pytest.approx(5 / 6, rel=1e-10)

    def test_fourth_moment_a_zero(self):
        got = moment_series_oracle(4, params(0.0, 1.0))
        assert got.components() == (24, 0, 0, 0)

    def test_out_of_region(self):
        with pytest.raises(OutOfRegionError):
            moment_series_oracle(1, params(1.5, 1.0))

    def test_matches_closed_forms(self):
        for a in (0.1, 0.5, 0.85):
            for alpha in (0.25, 1.0, 2.0):
                p = params(a, alpha)
                for r in range(5):
                    closed = moment(r, p)
                    oracle = moment_series_oracle(r, p)
                    assert (closed - oracle).norm() <= \
                        1e-8 * max(1.0, oracle.norm())

    def test_bicomplex_parameters(self):
        a = Bicomplex.from_idempotent(0.3 + 0.2j, -0.4 + 0.1j)
        alpha = Bicomplex.from_idempotent(0.8 + 0.1j, 1.5 - 0.2j)
        p = MLDistParams(a, alpha)
        for r in range(5):
            closed = moment(r, p)
            oracle = moment_series_oracle(r, p)
            assert (closed - oracle).norm() <= 1e-8 * max(1.0, oracle.norm())


class TestQuadratureOracle:
    def test_normalization_exponential(self):
        got = moment_quadrature_oracle(0, params(0.5, 1.0))
        assert got.x0 == pytest.approx(1.0, abs=1e-8)

    def test_second_moment_exponential(self):
        # Exponential(1.5): mu2' = 2/1.5**2
        got = moment_quadrature_oracle(2, params(0.5, 1.0))
        assert got.x0 == pytest.approx(2 / 1.5 ** 2, rel=1e-7)

    def test_triangulation_half_half(self):
        p = params(0.5, 0.5)
        closed = moment(1, p).x0
        series = moment_series_oracle(1, p).x0
        quadr = moment_quadrature_oracle(1, p).x0
        assert quadr == pytest.approx(5 / 6, abs=1e-6)
        assert abs(closed - quadr) < 1e-6
        assert abs(series - quadr) < 2e-6

    def test_rejects_complex_components(self):
        a = Bicomplex.from_components(0.1, 0.2, 0, 0)
        with pytest.raises(UnsupportedByOracleError):
            moment_quadrature_oracle(0, MLDistParams(a, Bicomplex.coerce(1.0)))

    def test_rejects_alpha_out_of_range(self):
        with pytest.raises(UnsupportedByOracleError):
            moment_quadrature_oracle(0, params(0.5, 2.5))


class TestMgfOracle:
    def test_t_zero(self):
        got = mgf_oracle(0.0, params(0.3, 0.7))
        assert got.x0 == pytest.approx(1.0, abs=1e-7)

    def test_exponential_mgf(self):
        got = mgf_oracle(0.5, params(0.5, 1.0))
        assert got.x0 == pytest.approx(1.5, rel=1e-6)

    def test_matches_closed_form(self):
        p = params(0.3, 0.7)
        closed = mgf(Bicomplex.coerce(-1.0), p).value
        got = mgf_oracle(-1.0, p)
        assert (closed - got).norm() <= 1e-6

    def test_divergent_t_rejected(self):
        with pytest.raises(DivergentIntegralError):
            mgf_oracle(1.0, params(0.5, 1.0))


class TestFiniteDifferences:
    def test_a_zero_factorials(self):
        got = finite_difference_moments(params(0.0, 1.0), h=1e-3)
        for est, ref in zip(got, (1, 2, 6, 24)):
            assert est.x0 == pytest.approx(ref, abs=1e-6)

    def test_first_moment_half_half(self):
        got = finite_difference_moments(params(0.5, 0.5), h=1e-3)
        assert got[0].x0 == pytest.approx(5 / 6, abs=1e-6)

    def test_all_four_match_closed_forms(self):
        p = params(0.5, 2.0)
        got = finite_difference_moments(p, h=1e-3)
        for r in range(1, 5):
            ref = moment(r, p)
            assert (got[r - 1] - ref).norm() <= 1e-5 * max(1.0, ref.norm())

    def test_h_out_of_range(self):
        with pytest.raises(ValueError):
            finite_difference_moments(params(0.5, 1.0), h=1e-5)

    def test_observed_order_at_least_three(self):
        # Halving h must cut the error by >= 8x while truncation dominates.
        p = params(0.6, 1.7)
        for r in (1, 2):
            errs = []
            for h in (8e-3, 4e-3):
                est = finite_difference_moments(p, h=h)[r - 1]
                errs.append((est - moment(r, p)).norm())
            assert errs[0] / errs[1] >= 8.0


class TestVerifyAll:
    def test_single_trivial_point(self):
        grid = [{"a": {"x0": 0.0}, "alpha": {"x0": 1.0}}]
        report = verify_all(grid)
        assert report.summary["fail"] == 0
        assert report.summary["invalid"] == 0
        assert report.summary["pass"] > 0

    def test_invalid_point_isolated(self):
        grid = [
            {"a": {"x0": -1.0}, "alpha": {"x0": 1.0}},
            {"a": {"x0": 0.0}, "alpha": {"x0": 1.0}},
        ]
        report = verify_all(grid)
        assert report.summary["invalid"] == 1
        assert report.summary["fail"] == 0
        assert report.summary["pass"] > 0

    def test_skip_is_not_pass(self):
        # bicomplex a: quadrature oracles must be skipped, not passed
        a = Bicomplex.from_idempotent(0.2 + 0.3j, 0.1)
        grid = [{"a": a.to_json_dict(), "alpha": {"x0": 1.0}}]
        report = verify_all(grid)
        assert report.summary["skip"] > 0
        statuses = {e.status for e in report.entries}
        assert statuses <= {"pass", "fail", "skip", "invalid"}

    def test_summary_reconciles(self):
        report = verify_all(default_grid()[:3])
        counts = report.summary
        assert sum(counts.values()) == len(report.entries)

    def test_json_round_trips(self):
        report = verify_all(default_grid()[:1])
        data = json.loads(report.to_json())
        assert data["summary"] == report.summary
        assert len(data["entries"]) == len(report.entries)

    def test_table_renders(self):
        report = verify_all(default_grid()[:1])
        table = report.to_table()
        assert "variance-identity" in table
        assert "pass=" in table


class TestDefaultGrid:
    def test_size_and_determinism(self):
        g1, g2 = default_grid(), default_grid()
        assert g1 == g2
        assert len(g1) == 50  # 5 x 6 real grid + 20 random bicomplex

    def test_fixture_matches_generator(self):
        assert load_default_grid() == default_grid()

    def test_random_points_in_stated_region(self):
        for point in default_grid()[30:]:
            a = Bicomplex.from_json_dict(point["a"])
            alpha = Bicomplex.from_json_dict(point["alpha"])
            a1, a2 = a.to_idempotent()
            l1, l2 = alpha.to_idempotent()
            assert max(abs(a1), abs(a2)) < 0.9
            assert 0.1 < l1.real <= 2.0
            assert 0.1 < l2.real <= 2.0

    def test_grid_from_json_rejects_garbage(self):
        with pytest.raises(ValueError):
            grid_from_json("not a grid")
