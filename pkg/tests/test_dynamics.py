"""Quality updates and multi-round trajectories."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradelab.dist import triangular_kernel, truncated_normal_noise, uniform_prior, zero_noise
from gradelab.dynamics import (
    MotivationParams,
    Trajectory,
    delta,
    run_trajectory,
    simulate_cohort,
    update,
)
from gradelab.grading import GradingScheme
from gradelab.streams import student_stream


class TestDelta:
    def test_demotivation_example(self):
        params = MotivationParams(0.3, 0.5)
        assert float(delta(0.85, 0.81, params)) == pytest.approx(-0.02)

    def test_zero_at_branch_boundary(self):
        params = MotivationParams(0.9, 0.1)
        assert float(delta(0.4, 0.4, params)) == 0.0

    def test_extreme_motivation(self):
        assert float(delta(0.0, 1.0, MotivationParams(1.0, 0.0))) == 1.0
        assert float(update(0.0, 1.0, MotivationParams(1.0, 0.0))) == 1.0

    def test_coefficient_validation(self):
        with pytest.raises(ValueError):
            MotivationParams(1.2, 0.5)
        with pytest.raises(ValueError):
            MotivationParams(0.5, -0.1)


class TestUpdate:
    def test_demotivation_example(self):
        params = MotivationParams(0.3, 0.5)
        assert float(update(0.85, 0.81, params)) == pytest.approx(0.83)

    def test_zero_coefficients_freeze_quality(self):
        params = MotivationParams(0.0, 0.0)
        q = np.linspace(0, 1, 11)
        np.testing.assert_array_equal(update(q, np.ones_like(q), params), q)

    def test_full_adjustment(self):
        assert float(update(0.5, 0.55, MotivationParams(1.0, 0.2))) == pytest.approx(0.55)


class TestTrajectory:
    def test_single_round_leaves_quality_unchanged(self):
        traj = run_trajectory(
            0.4, GradingScheme.ns(), triangular_kernel(0.1), MotivationParams(0.8, 0.3), 1,
            student_stream(0, 0),
        )
        assert traj.qualities == (0.4,)
        assert len(traj.scores) == len(traj.grades) == 1

    def test_zero_noise_ns_is_fixed_point(self):
        traj = run_trajectory(
            0.73, GradingScheme.ns(), zero_noise(), MotivationParams(1.0, 1.0), 6,
            student_stream(0, 0),
        )
        assert traj.qualities == (0.73,) * 6
        assert traj.scores == (0.73,) * 6

    def test_midpoint_absorption(self):
        traj = run_trajectory(
            0.3, GradingScheme.ulg(1), zero_noise(), MotivationParams(1.0, 1.0), 5,
            student_stream(0, 0),
        )
        assert traj.qualities == (0.3, 0.5, 0.5, 0.5, 0.5)
        assert traj.grades == (0.5,) * 5

    def test_recurrence_holds_exactly(self):
        params = MotivationParams(0.6, 0.4)
        scheme = GradingScheme.ulg(5)
        traj = run_trajectory(
            0.52, scheme, truncated_normal_noise(0.1), params, 8, student_stream(9, 2)
        )
        for j in range(7):
            expected = float(update(traj.qualities[j], traj.grades[j], params))
            assert traj.qualities[j + 1] == expected

    def test_rejects_zero_rounds(self):
        with pytest.raises(ValueError):
            run_trajectory(
                0.5, GradingScheme.ns(), zero_noise(), MotivationParams(0.5, 0.5), 0,
                student_stream(0, 0),
            )


class TestCohort:
    def test_matches_trajectory_endpoints(self):
        prior = uniform_prior()
        model = truncated_normal_noise(0.05)
        scheme = GradingScheme.ulg(4)
        params = MotivationParams(0.7, 0.2)
        q1, qr = simulate_cohort(prior, model, scheme, params, 16, 5, seed=11)
        from gradelab.streams import student_uniforms

        u = student_uniforms(11, 16, 5)
        for i in range(16):
            qi = float(prior.ppf(u[i, 0]))
            q = qi
            for j in range(4):
                s = float(model.ppf(u[i, j + 1], q))
                q = float(update(q, float(scheme.grade(s)), params))
            assert q1[i] == qi
            assert qr[i] == pytest.approx(q, abs=1e-15)

    def test_common_random_numbers_share_initial_quality(self):
        prior = uniform_prior()
        model = triangular_kernel(0.1)
        params = MotivationParams(0.3, 0.5)
        q1_a, _ = simulate_cohort(prior, model, GradingScheme.ns(), params, 500, 3, seed=2)
        q1_b, _ = simulate_cohort(prior, model, GradingScheme.ulg(4), params, 500, 3, seed=2)
        np.testing.assert_array_equal(q1_a, q1_b)


class TestProperties:
    @settings(max_examples=40, deadline=None)
    @given(
        st.floats(0.0, 1.0),
        st.floats(0.0, 1.0),
        st.floats(0.0, 1.0),
        st.floats(0.0, 1.0),
    )
    def test_update_stays_in_unit_interval(self, q, g, am, ad):
        assert 0.0 <= float(update(q, g, MotivationParams(am, ad))) <= 1.0

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.0, 1.0), st.floats(0.0, 1.0), st.floats(0.0, 1.0))
    def test_delta_monotone_in_grade(self, q, am, ad):
        params = MotivationParams(am, ad)
        g = np.linspace(0, 1, 33)
        d = delta(q, g, params)
        assert np.all(np.diff(d) >= -1e-15)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.0, 1.0), st.integers(1, 20), st.floats(0.0, 1.0), st.floats(0.0, 1.0))
    def test_zero_noise_letter_contraction(self, q1, T, am, ad):
        # each update moves quality weakly toward the current bucket midpoint
        scheme = GradingScheme.ulg(T)
        traj = run_trajectory(
            q1, scheme, zero_noise(), MotivationParams(am, ad), 6, student_stream(0, 0)
        )
        for j in range(5):
            m = traj.grades[j]
            before = abs(traj.qualities[j] - m)
            after = abs(traj.qualities[j + 1] - m)
            assert after <= before + 1e-12

    def test_trajectory_is_a_value_object(self):
        t = Trajectory((0.5,), (0.5,), (0.5,))
        assert t == Trajectory((0.5,), (0.5,), (0.5,))
