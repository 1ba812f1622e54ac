"""Unit tests for classification, losses, expected losses, information gain and bounds."""

import itertools
import math

import numpy as np
import pytest
from scipy import integrate, stats

from src.discretize import GridSpec
from src.gp import Dataset, fit_posterior, kernel_matrix
from src.level_set import (
    GREEDY_FACTOR,
    BoundInputError,
    BoundKind,
    Classification,
    LengthMismatchError,
    bound_rhs,
    c1,
    c1_check,
    c1_tilde,
    classify,
    classify_mean,
    estimate_t_check,
    expected_avg_loss,
    expected_loss_closed_form,
    expected_max_losses,
    fscore,
    info_gain_greedy,
    loss_point,
    loss_report,
    loss_r,
    maxvalue_loss,
    pointwise_losses,
    s_t,
    theory_report,
)
from src.rng import RngState


class TestClassification:
    """Tests for the H/L split."""

    def test_threshold_goes_to_high(self):
        """Test that mu = theta is classified H."""
        result = classify_mean([0.4, 0.5, 0.6], 0.5)
        assert result.high.tolist() == [False, True, True]
        assert result.side(1) == "H"
        assert result.side(0) == "L"
        assert result.n_high == 2
        assert len(result) == 3

    def test_classify_uses_posterior_mean(self, small_posterior):
        """Test that classify thresholds the posterior mean."""
        xs = np.array([[0.0, 0.0], [5.0, 5.0]])
        result = classify(small_posterior, xs, 0.3)
        assert result.high.tolist() == [True, False]


class TestLosses:
    """Tests for pointwise losses, r_t, the max-value loss and F-score."""

    @pytest.mark.parametrize("f_val,side,expected", [
        (2.0, "H", 0.0),
        (0.0, "H", 1.0),
        (2.0, "L", 1.0),
        (0.0, "L", 0.0),
        (1.0, "H", 0.0),
        (1.0, "L", 0.0),
    ])
    def test_loss_point(self, f_val, side, expected):
        """Test the loss on both sides of theta = 1."""
        assert loss_point(f_val, 1.0, side) == expected

    def test_loss_point_bad_side(self):
        """Test that only H and L are accepted."""
        with pytest.raises(ValueError):
            loss_point(0.0, 0.0, "X")

    def test_average_and_max(self):
        """Test r_t and the max-value loss on a small case."""
        classification = Classification(0.0, [True, True, False, False])
        truth = np.array([1.0, -2.0, 0.5, -1.0])
        assert loss_r(classification, truth, 0.0) == pytest.approx(2.5 / 4)
        assert maxvalue_loss(classification, truth, 0.0) == 2.0

    def test_length_mismatch(self):
        """Test that truth and classification must align."""
        with pytest.raises(LengthMismatchError):
            pointwise_losses([True], [1.0, 2.0], 0.0)

    def test_perfect_classification_has_zero_loss(self):
        """Test that classifying with the truth itself gives zero loss and F = 1."""
        truth = np.random.default_rng(0).normal(size=50)
        classification = classify_mean(truth, 0.1)
        assert loss_r(classification, truth, 0.1) == 0.0
        assert fscore(classification, truth >= 0.1) == (1.0, 1.0, 1.0)

    def test_fscore_values(self):
        """Test precision, recall and F on a hand-made case."""
        precision, recall, f = fscore(Classification(0.0, [True, True, False, False]), [True, False, True, False])
        assert precision == 0.5
        assert recall == 0.5
        assert f == 0.5

    def test_fscore_both_empty(self):
        """Test that empty H_t and H* count as a perfect match."""
        assert fscore(Classification(0.0, [False, False]), [False, False]) == (1.0, 1.0, 1.0)

    def test_fscore_empty_estimate(self):
        """Test that an empty H_t against a nonempty H* scores zero."""
        assert fscore(Classification(0.0, [False, False]), [True, False]) == (0.0, 0.0, 0.0)

    def test_fscore_empty_truth(self):
        """Test that a nonempty H_t against an empty H* scores zero."""
        assert fscore(Classification(0.0, [True, False]), [False, False]) == (0.0, 0.0, 0.0)


    def test_loss_report_collects_metrics(self):
        """Test that loss_report agrees with the individual metrics."""
        classification = Classification(theta=1.0, high=[True, False, True, False])
        truth = np.array([2.0, 3.0, 0.0, 0.5])
        report = loss_report(classification, truth, 1.0, previous_cumulative=0.5)
        assert report.r_t == pytest.approx(loss_r(classification, truth, 1.0))
        assert report.R_t == pytest.approx(0.5 + report.r_t)
        assert report.max_loss == pytest.approx(maxvalue_loss(classification, truth, 1.0))
        assert (report.precision, report.recall) == (0.5, 0.5)
        assert report.n_high == 2
        assert report.eval_mode == "finite_exact" and report.n_test is None

    def test_loss_report_monte_carlo_records_test_size(self):
        """Test that infinite_mc reports record the test-set size."""
        report = loss_report(Classification(0.0, [True, True, False]), [1.0, -1.0, -2.0], 0.0, mode="infinite_mc")
        assert report.n_test == 3

class TestExpectedLoss:
    """Tests for posterior-expected losses."""

    @pytest.mark.parametrize("mu,sigma,side", [
        (0.3, 0.7, "L"),
        (0.3, 0.7, "H"),
        (-1.2, 0.4, "H"),
        (2.0, 1.5, "L"),
    ])
    def test_closed_form_matches_quadrature(self, mu, sigma, side):
        """Test the closed form against numerical integration."""
        theta = 0.1
        if side == "L":
            integrand = lambda f: max(f - theta, 0.0) * stats.norm.pdf(f, mu, sigma)
        else:
            integrand = lambda f: max(theta - f, 0.0) * stats.norm.pdf(f, mu, sigma)
        expected, _ = integrate.quad(integrand, mu - 12 * sigma, mu + 12 * sigma, points=[theta], limit=200)
        assert expected_loss_closed_form(mu, sigma, theta, side) == pytest.approx(expected, rel=1e-6, abs=1e-10)

    def test_zero_sigma_limit(self):
        """Test the deterministic limit at sigma = 0."""
        assert expected_loss_closed_form(2.0, 0.0, 0.5, "L") == 1.5
        assert expected_loss_closed_form(2.0, 0.0, 0.5, "H") == 0.0
        assert expected_loss_closed_form(0.0, 0.0, 0.5, "H") == 0.5

    def test_far_tail_is_nonnegative(self):
        """Test that round-off never yields a negative expectation."""
        assert expected_loss_closed_form(40.0, 1.0, 0.0, "H") >= 0.0

    def test_rejects_negative_sigma(self):
        """Test that sigma must be nonnegative."""
        with pytest.raises(ValueError):
            expected_loss_closed_form(0.0, -1.0, 0.0, "H")

    def test_expected_avg_loss_is_minimised_by_current_classification(self, small_posterior):
        """Test that thresholding the current mean beats any flipped classification."""
        xs = np.random.default_rng(4).uniform(-2, 2, (30, 2))
        current = classify(small_posterior, xs, 0.3)
        flipped = Classification(0.3, ~current.high)
        assert expected_avg_loss(small_posterior, current, xs, 0.3) <= expected_avg_loss(small_posterior, flipped, xs, 0.3)

    def test_expected_avg_loss_length_checked(self, small_posterior):
        """Test that the classification must cover xs."""
        with pytest.raises(LengthMismatchError):
            expected_avg_loss(small_posterior, Classification(0.0, [True]), np.zeros((2, 2)), 0.0)


class TestTCheck:
    """Tests for the returned-iteration estimator."""

    def test_identical_classifications_pick_latest(self, small_posterior):
        """Test that ties go to the latest iteration."""
        xs = np.array([[0.0, 0.0], [1.0, 1.0]])
        stored = np.array([[True, False], [True, False], [True, False]])
        assert estimate_t_check(small_posterior, stored, xs, 0.3, 50, RngState(0)) == 3

    def test_prefers_better_classification(self, unit_kernel):
        """Test that a classification matching a confident posterior is chosen."""
        dataset = Dataset([[0.0], [5.0]], [2.0, -2.0], 1e-4)
        post = fit_posterior(dataset, unit_kernel)
        xs = np.array([[0.0], [5.0]])
        stored = [Classification(0.0, [True, False]), Classification(0.0, [False, True])]
        assert estimate_t_check(post, stored, xs, 0.0, 100, RngState(1)) == 1
        losses = expected_max_losses(post, stored, xs, 0.0, 100, RngState(1))
        assert losses[0] < losses[1]

    def test_width_checked(self, small_posterior):
        """Test that stored memberships must cover xs."""
        with pytest.raises(LengthMismatchError):
            estimate_t_check(small_posterior, np.ones((2, 3), bool), np.zeros((2, 2)), 0.0, 5, RngState(0))


class TestInfoGain:
    """Tests for the greedy information-gain estimate."""

    @pytest.fixture
    def candidates(self):
        return np.array([[0.0], [0.7], [1.5], [3.0]])

    def test_first_step(self, unit_kernel, candidates):
        """Test gamma_1 = 1/2 log(1 + amplitude / noise)."""
        gains = info_gain_greedy(unit_kernel, candidates, 0.1, 1)
        assert gains[0] == pytest.approx(0.5 * math.log(11.0))

    def test_against_exhaustive_search(self, unit_kernel, candidates):
        """Test (1 - 1/e) gamma_t <= greedy <= gamma_t against brute force."""
        noise = 0.1
        t = 3
        greedy = info_gain_greedy(unit_kernel, candidates, noise, t)[-1]
        best = 0.0
        for combo in itertools.combinations_with_replacement(range(len(candidates)), t):
            xs = candidates[list(combo)]
            gram = kernel_matrix(unit_kernel, xs, xs)
            best = max(best, 0.5 * np.linalg.slogdet(np.eye(t) + gram / noise)[1])
        assert greedy <= best + 1e-9
        assert greedy >= GREEDY_FACTOR * best - 1e-9

    def test_cumulative_and_increasing(self, unit_kernel, candidates):
        """Test that gains accumulate monotonically, repeats included."""
        gains = info_gain_greedy(unit_kernel, candidates, 0.1, 10)
        assert gains.shape == (10,)
        assert np.all(np.diff(gains) > 0)

    def test_needs_positive_noise(self, unit_kernel, candidates):
        """Test that zero noise is rejected."""
        with pytest.raises(ValueError):
            info_gain_greedy(unit_kernel, candidates, 0.0, 2)


class TestBounds:
    """Tests for the bound constants and right-hand sides."""

    def test_constants_at_unit_noise(self):
        """Test C1, C1 tilde and C1 check at noise variance 1."""
        assert c1(1.0) == pytest.approx(4 / math.log(2))
        assert c1(1.0) == pytest.approx(5.7708, abs=1e-4)
        assert c1_check(1.0) == pytest.approx(2 / math.log(2))
        assert c1_tilde(1.0, 1) == pytest.approx(c1(1.0))
        assert c1_tilde(1.0, math.e) == pytest.approx(8 / math.log(2))

    def test_rate_is_cumulative_over_t(self):
        """Test that rate bounds divide by t."""
        cumulative = bound_rhs(BoundKind.AVG_CUMULATIVE, 10, 2.0, 0.5)
        assert bound_rhs(BoundKind.AVG_RATE, 10, 2.0, 0.5) == pytest.approx(cumulative / 10)
        assert cumulative == pytest.approx(math.sqrt(c1(0.5) * 10 * 2.0))

    def test_infinite_bound(self):
        """Test pi^2 / 6 + sqrt(C1 check t gamma (2 + s))."""
        value = bound_rhs("max_infinite_cumulative", 4, 1.5, 1.0, s=3.0)
        assert value == pytest.approx(math.pi ** 2 / 6 + math.sqrt(c1_check(1.0) * 4 * 1.5 * 5.0))

    def test_missing_inputs(self):
        """Test that max-value bounds need |X| or s_t."""
        with pytest.raises(BoundInputError):
            bound_rhs(BoundKind.MAX_FINITE_CUMULATIVE, 1, 1.0, 1.0)
        with pytest.raises(BoundInputError):
            bound_rhs(BoundKind.MAX_INFINITE_RATE, 1, 1.0, 1.0)

    def test_zero_noise(self):
        """Test that the constants are undefined without noise."""
        with pytest.raises(BoundInputError):
            c1(0.0)

    def test_s_t(self):
        """Test s_t = 2 d log tau_t."""
        assert s_t(GridSpec(a=math.e, b=1.0, r=1.0, d=1), 2) == pytest.approx(2 * math.log(8))

    def test_theory_report(self):
        """Test that a report fills only the bounds its inputs allow."""
        report = theory_report(5, 1.0, 1.0, n_candidates=100)
        assert report.bound_avg == pytest.approx(math.sqrt(c1(1.0) * 5))
        assert report.bound_max_finite is not None
        assert report.bound_max_infinite is None
        assert report.s_t is None
