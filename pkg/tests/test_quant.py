import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from foresight.errors import UsageError, ValidationError
from foresight.quant import (
    Ensemble,
    ParamSet,
    Trajectory,
    ceilings,
    compare_scenarios,
    deterministic_curves,
    gompertz_index,
    logistic_index,
    monte_carlo,
    simulate_path,
    time_grid,
)
from foresight.scenarios import DriverLevels, builtin_scenarios


class TestParamSet:
    def test_defaults(self):
        p = ParamSet()
        assert p.E0 == p.S0 == p.T0 == 0.5
        assert p.gamma == p.zeta == 0.0
        assert p.k_E == p.k_S == p.k_T == 1.0
        assert p.t0_E == p.t0_S == p.t0_T == 5.0
        assert p.sigma_E == p.sigma_S == p.sigma_T == 0.05

    @pytest.mark.parametrize(
        "kwargs", [{"k_E": 0.0}, {"k_T": -1.0}, {"sigma_S": -0.01}, {"E0": -0.5}]
    )
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValidationError):
            ParamSet(**kwargs)

    def test_with_overrides(self):
        p = ParamSet().with_overrides(alpha=0.4, sigma_E=0.0)
        assert p.alpha == 0.4 and p.sigma_E == 0.0
        assert p.beta == 0.3  # untouched fields keep defaults

    def test_unknown_override_rejected(self):
        with pytest.raises(UsageError, match="unknown parameters.*omega"):
            ParamSet().with_overrides(omega=1.0)

    def test_round_trip(self):
        p = ParamSet(alpha=0.25, k_T=2.0)
        assert ParamSet.from_dict(p.to_dict()) == p


class TestLogisticIndex:
    def test_midpoint_exact(self):
        assert logistic_index(1.5, 0.8, 5.0, 5.0) == 0.75

    def test_frozen_value(self):
        assert logistic_index(1.5, 0.8, 5.0, 3.0) == pytest.approx(
            0.2519724222991133, abs=1e-12
        )

    def test_saturation(self):
        val = logistic_index(2.0, 1.0, 5.0, 45.0)
        assert val == pytest.approx(2.0, rel=1e-15)

    def test_symmetric_about_midpoint(self):
        lo = logistic_index(1.0, 0.7, 5.0, 3.0)
        hi = logistic_index(1.0, 0.7, 5.0, 7.0)
        assert lo + hi == pytest.approx(1.0, abs=1e-12)

    def test_array_input(self):
        ts = np.array([0.0, 5.0, 10.0])
        out = logistic_index(1.0, 1.0, 5.0, ts)
        assert out.shape == (3,)
        assert out[1] == 0.5

    def test_extreme_arguments_stable(self):
        with np.errstate(over="raise", invalid="raise"):
            assert logistic_index(1.0, 1.0, 0.0, 700.0) == 1.0
            assert logistic_index(1.0, 1.0, 0.0, -700.0) == pytest.approx(0.0, abs=1e-300)

    def test_nonpositive_k_rejected(self):
        with pytest.raises(ValidationError, match="k must be > 0"):
            logistic_index(1.0, 0.0, 5.0, 1.0)

    @settings(max_examples=200, deadline=None)
    @given(
        c=st.floats(0.01, 10.0),
        k=st.floats(0.01, 5.0),
        t0=st.floats(-10.0, 10.0),
        t=st.floats(-50.0, 50.0),
    )
    def test_bounded_by_ceiling(self, c, k, t0, t):
        y = logistic_index(c, k, t0, t)
        assert 0.0 < y < c or y == pytest.approx(c, rel=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(
        k=st.floats(0.05, 3.0),
        t0=st.floats(-5.0, 5.0),
        t1=st.floats(-8.0, 8.0),
        dt=st.floats(0.01, 3.0),
    )
    def test_strictly_increasing_near_midpoint(self, k, t0, t1, dt):
        assume(abs(k * (t1 - t0)) < 25 and abs(k * (t1 + dt - t0)) < 25)
        assert logistic_index(1.0, k, t0, t1 + dt) > logistic_index(1.0, k, t0, t1)


class TestGompertzIndex:
    def test_inflection_value(self):
        assert gompertz_index(2.0, 1.0, 5.0, 5.0) == pytest.approx(
            2.0 * math.exp(-1), abs=1e-15
        )

    def test_frozen_value(self):
        assert gompertz_index(1.2, 0.5, 5.0, 7.0) == pytest.approx(
            0.8306407530664156, abs=1e-12
        )

    def test_saturation(self):
        assert gompertz_index(1.0, 2.0, 5.0, 5.0 + 40 / 2.0) == pytest.approx(
            1.0, rel=1e-15
        )

    def test_far_below_midpoint_underflows_to_zero(self):
        with np.errstate(over="raise", invalid="raise"):
            assert gompertz_index(1.0, 1.0, 0.0, -800.0) == 0.0

    def test_array_input(self):
        out = gompertz_index(1.0, 1.0, 5.0, np.array([5.0, 50.0]))
        np.testing.assert_allclose(out, [math.exp(-1), 1.0], rtol=1e-12)

    def test_nonpositive_k_rejected(self):
        with pytest.raises(ValidationError):
            gompertz_index(1.0, -0.5, 5.0, 1.0)

    @settings(max_examples=200, deadline=None)
    @given(
        c=st.floats(0.01, 10.0),
        k=st.floats(0.01, 5.0),
        t0=st.floats(-10.0, 10.0),
        t=st.floats(-50.0, 50.0),
    )
    def test_bounded_by_ceiling(self, c, k, t0, t):
        y = gompertz_index(c, k, t0, t)
        assert 0.0 <= y < c or y == pytest.approx(c, rel=1e-12)


class TestCeilings:
    def test_formulas(self):
        p = ParamSet(alpha=0.1, beta=0.2, gamma=0.3, delta=0.4, eps_sr=0.5,
                     zeta=0.6, eta=0.7, theta=0.8)
        d = DriverLevels(A=0.5, R=0.25)
        c_e, c_s, c_t = ceilings(p, d)
        assert c_e == pytest.approx(0.5 + 0.1 * 0.5 + 0.2 * 0.25 + 0.3 * 0.125)
        assert c_s == pytest.approx(0.5 + 0.4 * 0.5 + 0.5 * 0.25 + 0.6 * 0.125)
        assert c_t == pytest.approx(0.5 + 0.7 * 0.5 + 0.8 * 0.125)

    def test_interaction_terms_default_off(self):
        c_e, c_s, _ = ceilings(ParamSet(), DriverLevels(A=1.0, R=1.0))
        assert c_e == pytest.approx(0.5 + 0.3 + 0.3)
        assert c_s == pytest.approx(0.5 + 0.3 + 0.3)

    def test_nonpositive_ceiling_rejected(self):
        p = ParamSet(E0=0.0, alpha=0.0, beta=0.0)
        with pytest.raises(ValidationError, match="C_E.*must be > 0"):
            ceilings(p, DriverLevels(A=0.0, R=0.0))


class TestTimeGrid:
    def test_default_grid(self):
        t = time_grid(10.0, 0.1)
        assert t.shape == (101,)
        assert t[0] == 0.0
        assert t[50] == 5.0  # matches the default curve midpoints exactly
        assert t[-1] == pytest.approx(10.0, abs=1e-9)

    def test_horizon_not_multiple_of_dt(self):
        t = time_grid(1.0, 0.3)
        np.testing.assert_allclose(t, [0.0, 0.3, 0.6, 0.9], atol=1e-12)

    @pytest.mark.parametrize("h,dt", [(0.0, 0.1), (10.0, 0.0), (-1.0, 0.1)])
    def test_nonpositive_rejected(self, h, dt):
        with pytest.raises(UsageError):
            time_grid(h, dt)


class TestSimulatePath:
    def test_zero_noise_equals_deterministic(self):
        p = ParamSet(sigma_E=0.0, sigma_S=0.0, sigma_T=0.0)
        d = DriverLevels(A=0.9, R=0.9)
        traj = simulate_path(p, d, 10.0, 0.1, seed=3)
        e, s, t = deterministic_curves(p, d, traj.times)
        np.testing.assert_array_equal(traj.E, e)
        np.testing.assert_array_equal(traj.S, s)
        np.testing.assert_array_equal(traj.T, t)

    def test_noise_consumption_order(self):
        # three standard normals per step, columns E, S, T of one draw block
        p = ParamSet()
        d = DriverLevels(A=0.5, R=0.5)
        traj = simulate_path(p, d, 1.0, 0.5, seed=11)
        e_det, s_det, t_det = deterministic_curves(p, d, traj.times)
        eps = np.random.default_rng(11).standard_normal((3, 3))
        np.testing.assert_array_equal(traj.E, e_det + 0.05 * eps[:, 0])
        np.testing.assert_array_equal(traj.S, s_det + 0.05 * eps[:, 1])
        np.testing.assert_array_equal(traj.T, t_det + 0.05 * eps[:, 2])

    def test_same_seed_bit_identical(self):
        d = DriverLevels(A=0.4, R=0.6)
        a = simulate_path(ParamSet(), d, 5.0, 0.5, seed=9)
        b = simulate_path(ParamSet(), d, 5.0, 0.5, seed=9)
        for name in ("E", "S", "T"):
            np.testing.assert_array_equal(a.index(name), b.index(name))

    def test_different_seeds_differ(self):
        d = DriverLevels(A=0.4, R=0.6)
        a = simulate_path(ParamSet(), d, 5.0, 0.5, seed=1)
        b = simulate_path(ParamSet(), d, 5.0, 0.5, seed=2)
        assert not np.array_equal(a.E, b.E)

    def test_unknown_index_name_rejected(self):
        traj = simulate_path(ParamSet(), DriverLevels(0.5, 0.5), 1.0, 0.5)
        with pytest.raises(UsageError, match="unknown index"):
            traj.index("Q")

    def test_to_json_round_trips_values(self):
        import json

        traj = simulate_path(ParamSet(), DriverLevels(0.5, 0.5), 1.0, 0.5, seed=2)
        data = json.loads(traj.to_json())
        np.testing.assert_array_equal(np.asarray(data["E"]), traj.E)
        assert data["seed"] == 2
        assert data["drivers"] == {"A": 0.5, "R": 0.5}


class TestMonteCarlo:
    def test_single_run_matches_path(self):
        p = ParamSet()
        d = DriverLevels(A=0.7, R=0.2)
        ens = monte_carlo(p, d, 2.0, 0.5, n_runs=1, base_seed=31)
        traj = simulate_path(p, d, 2.0, 0.5, seed=31)
        np.testing.assert_array_equal(ens.stats["E"]["mean"], traj.E)
        np.testing.assert_array_equal(ens.stats["E"]["q50"], traj.E)
        np.testing.assert_array_equal(ens.stats["E"]["std"], np.zeros_like(traj.E))

    def test_seeds_are_base_plus_offset(self):
        p = ParamSet()
        d = DriverLevels(A=0.7, R=0.2)
        ens = monte_carlo(p, d, 1.0, 0.5, n_runs=2, base_seed=100)
        t_a = simulate_path(p, d, 1.0, 0.5, seed=100)
        t_b = simulate_path(p, d, 1.0, 0.5, seed=101)
        np.testing.assert_allclose(
            ens.stats["S"]["mean"], (t_a.S + t_b.S) / 2, atol=1e-15
        )

    def test_std_is_population_std(self):
        p = ParamSet()
        d = DriverLevels(A=0.7, R=0.2)
        ens = monte_carlo(p, d, 1.0, 1.0, n_runs=2, base_seed=0)
        t_a = simulate_path(p, d, 1.0, 1.0, seed=0)
        t_b = simulate_path(p, d, 1.0, 1.0, seed=1)
        expected = np.abs(t_a.T - t_b.T) / 2  # ddof=0 for two samples
        np.testing.assert_allclose(ens.stats["T"]["std"], expected, atol=1e-15)

    def test_quantiles_match_numpy(self):
        p = ParamSet()
        d = DriverLevels(A=0.3, R=0.3)
        n = 7
        ens = monte_carlo(p, d, 1.0, 0.5, n_runs=n, base_seed=5)
        paths = np.stack(
            [simulate_path(p, d, 1.0, 0.5, seed=5 + i).E for i in range(n)]
        )
        np.testing.assert_allclose(
            ens.stats["E"]["q05"], np.quantile(paths, 0.05, axis=0), atol=1e-15
        )
        np.testing.assert_allclose(
            ens.stats["E"]["q95"], np.quantile(paths, 0.95, axis=0), atol=1e-15
        )

    def test_nonpositive_runs_rejected(self):
        with pytest.raises(UsageError, match="n_runs"):
            monte_carlo(ParamSet(), DriverLevels(0.5, 0.5), 1.0, 0.5, n_runs=0)

    def test_terminal_mean(self):
        ens = monte_carlo(ParamSet(), DriverLevels(0.5, 0.5), 1.0, 0.5, n_runs=3)
        assert ens.terminal_mean("E") == ens.stats["E"]["mean"][-1]


class TestCompareScenarios:
    def test_one_row_per_scenario(self):
        rows = compare_scenarios(
            ParamSet(), builtin_scenarios(), 10.0, 0.5, n_runs=8, base_seed=0
        )
        assert [r["scenario"] for r in rows] == [
            "Optimistic Future",
            "Technological Stagnation",
            "Sustainability Focus",
            "Economic Downturn",
        ]
        assert all(set(r) == {"scenario", "E", "S", "T"} for r in rows)

    def test_optimistic_beats_downturn_without_noise(self):
        p = ParamSet(sigma_E=0.0, sigma_S=0.0, sigma_T=0.0)
        rows = compare_scenarios(p, builtin_scenarios(), 10.0, 0.5, n_runs=1)
        by_name = {r["scenario"]: r for r in rows}
        for key in ("E", "S", "T"):
            assert by_name["Optimistic Future"][key] > by_name["Economic Downturn"][key]
