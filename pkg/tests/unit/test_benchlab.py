"""Unit tests for test functions, grids, black boxes and the lifetime stand-in."""

import numpy as np
import pytest

from src.benchlab import (
    ANALYTIC_FUNCTIONS,
    LIFETIME_HEADER,
    LIFETIME_MAX,
    LIFETIME_MIN,
    LIFETIME_SHAPE,
    AnalyticBlackBox,
    DegenerateBoundsError,
    FunctionDimensionError,
    NotTabulatedError,
    TabulatedBlackBox,
    eval_himmelblau,
    eval_rosenbrock,
    eval_sinusoidal,
    eval_sphere,
    eval_styblinski_tang,
    gen_gp_sample_case1,
    generate_lifetime_standin,
    get_function,
    lifetime_axes,
    make_grid,
    observe_value,
    uniform_box,
    write_lifetime_csv,
)
from src.models.kernel import KernelSpec
from src.rng import RngState


class TestFunctions:
    """Tests for the closed-form test functions."""

    def test_sinusoidal(self):
        """Test sin(10 x1) + cos(4 x2) - cos(3 x1 x2) at (0.5, 1)."""
        expected = np.sin(5.0) + np.cos(4.0) - np.cos(1.5)
        assert eval_sinusoidal([0.5, 1.0]) == pytest.approx(expected)
        assert eval_sinusoidal([0.5, 1.0]) == pytest.approx(-1.68331, abs=1e-5)

    def test_himmelblau_origin(self):
        """Test the shifted Himmelblau function at the origin."""
        assert eval_himmelblau([0.0, 0.0]) == pytest.approx(-70.0)

    def test_himmelblau_minimiser_is_maximum(self):
        """Test that a Himmelblau root is the top of the negated surface."""
        assert eval_himmelblau([3.0, 2.0]) == pytest.approx(100.0)

    def test_sphere_origin(self):
        """Test the shifted sphere at the origin."""
        assert eval_sphere(np.zeros(5)) == pytest.approx(41.65518)

    def test_rosenbrock_minimiser(self):
        """Test the shifted Rosenbrock function at (1, ..., 1)."""
        assert eval_rosenbrock(np.ones(5)) == pytest.approx(53458.91)

    def test_styblinski_tang_origin(self):
        """Test the shifted Styblinski-Tang function at the origin."""
        assert eval_styblinski_tang(np.zeros(5)) == pytest.approx(-20.8875)

    def test_vectorised_matches_pointwise(self):
        """Test that point sets give the same values as single points."""
        xs = np.random.default_rng(0).uniform(-5, 5, (6, 5))
        batch = eval_sphere(xs)
        assert batch.shape == (6,)
        np.testing.assert_allclose(batch, [eval_sphere(x) for x in xs])

    def test_wrong_dimension(self):
        """Test that a 2-D function rejects 3-D points."""
        with pytest.raises(FunctionDimensionError):
            eval_sinusoidal([0.0, 0.0, 0.0])

    def test_registry(self):
        """Test the registry entries and lookup."""
        assert ANALYTIC_FUNCTIONS["rosenbrock"]["dim"] == 5
        assert get_function("himmelblau") is eval_himmelblau
        with pytest.raises(ValueError, match="available"):
            get_function("ackley")


class TestGrids:
    """Tests for make_grid and uniform_box."""

    def test_grid_layout(self):
        """Test endpoints, size and x1-slowest ordering."""
        grid = make_grid(0.0, 1.0, 0.0, 2.0, 3, 5)
        assert grid.shape == (15, 2)
        np.testing.assert_allclose(grid[0], [0.0, 0.0])
        np.testing.assert_allclose(grid[1], [0.0, 0.5])
        np.testing.assert_allclose(grid[5], [0.5, 0.0])
        np.testing.assert_allclose(grid[-1], [1.0, 2.0])

    def test_default_is_50_by_50(self):
        """Test the default resolution."""
        assert make_grid(-5, 5, -5, 5).shape == (2500, 2)

    def test_grid_validation(self):
        """Test degenerate bounds and too few points."""
        with pytest.raises(DegenerateBoundsError):
            make_grid(1.0, 1.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            make_grid(0.0, 1.0, 0.0, 1.0, 1, 5)

    def test_uniform_box(self, rng):
        """Test that uniform points stay inside the box."""
        bounds = [(-5.0, 5.0), (0.0, 1.0), (2.0, 3.0)]
        points = uniform_box(bounds, 1000, rng)
        assert points.shape == (1000, 3)
        assert np.all(points >= [-5.0, 0.0, 2.0])
        assert np.all(points <= [5.0, 1.0, 3.0])


class TestBlackBoxes:
    """Tests for black boxes and the observation model."""

    def test_noiseless_observation_consumes_no_draw(self, rng):
        """Test that zero noise returns f exactly without touching the stream."""
        assert observe_value(1.25, 0.0, rng) == 1.25
        assert rng.draws == 0

    def test_noisy_observation(self):
        """Test y = f + sqrt(noise) z with a known z."""
        z = RngState(6).standard_normal()
        assert observe_value(1.0, 0.25, RngState(6)) == pytest.approx(1.0 + 0.5 * z)

    @pytest.mark.slow
    def test_noise_variance_over_many_draws(self):
        """Test that observation noise has the configured variance."""
        stream = RngState(11)
        ys = np.array([observe_value(0.0, 0.25, stream) for _ in range(100_000)])
        assert abs(ys.var() / 0.25 - 1.0) < 0.02
        assert abs(ys.mean()) < 5 * 0.5 / np.sqrt(ys.size)

    def test_negative_noise(self, rng):
        """Test that the noise variance must be nonnegative."""
        with pytest.raises(ValueError):
            observe_value(0.0, -1.0, rng)

    def test_analytic_black_box(self, rng):
        """Test evaluation and single-point calls."""
        box = AnalyticBlackBox("himmelblau")
        assert box.dim == 2
        assert box([0.0, 0.0]) == pytest.approx(-70.0)
        assert box.observe([0.0, 0.0], 0.0, rng) == pytest.approx(-70.0)

    def test_tabulated_lookup(self):
        """Test exact lookups and off-table queries."""
        box = TabulatedBlackBox([[8.0, 8.0], [8.0, 10.0]], [1.0, 2.0])
        assert len(box) == 2
        assert box.index_of([8.0, 10.0]) == 1
        np.testing.assert_array_equal(box.evaluate([[8.0, 10.0], [8.0, 8.0]]), [2.0, 1.0])
        with pytest.raises(NotTabulatedError):
            box([9.0, 9.0])

    def test_tabulated_is_read_only(self):
        """Test that stored values cannot be modified."""
        box = TabulatedBlackBox([[0.0, 0.0]], [1.0])
        with pytest.raises(ValueError):
            box.values[0] = 5.0

    def test_tabulated_rejects_duplicates(self):
        """Test that a point may only be tabulated once."""
        with pytest.raises(ValueError, match="duplicate"):
            TabulatedBlackBox([[0.0, 0.0], [0.0, 0.0]], [1.0, 2.0])

    def test_gp_sample_is_frozen(self):
        """Test that a GP sample is reproducible and independent of later draws."""
        grid = make_grid(-5, 5, -5, 5, 10, 10)
        stream = RngState(0)
        first = gen_gp_sample_case1(stream, grid)
        stream.standard_normal(10)
        again = gen_gp_sample_case1(RngState(0), grid)
        np.testing.assert_array_equal(first.values, again.values)
        assert first.dim == 2
        assert len(first) == 100

    def test_gp_sample_custom_kernel(self):
        """Test that the kernel amplitude scales the sample."""
        grid = make_grid(-5, 5, -5, 5, 10, 10)
        unit = gen_gp_sample_case1(RngState(1), grid)
        scaled = gen_gp_sample_case1(RngState(1), grid, KernelSpec(amplitude=4.0, lengthscale=2.0))
        np.testing.assert_allclose(scaled.values, 2.0 * unit.values, rtol=1e-6, atol=1e-6)


class TestStandin:
    """Tests for the synthetic lifetime map."""

    def test_axes(self):
        """Test the 2a + 6 coordinates."""
        ax1, ax2 = lifetime_axes()
        assert ax1[0] == 8.0
        assert ax1[-1] == 2 * 89 + 6
        assert ax2[-1] == 2 * 74 + 6

    def test_range_and_size(self):
        """Test the lattice size and the lifetime range."""
        points, lifetimes = generate_lifetime_standin(0)
        assert points.shape == (LIFETIME_SHAPE[0] * LIFETIME_SHAPE[1], 2)
        assert lifetimes.min() == pytest.approx(LIFETIME_MIN)
        assert lifetimes.max() == pytest.approx(LIFETIME_MAX)

    def test_seeded(self):
        """Test that the same seed gives the same map and another seed does not."""
        _, a = generate_lifetime_standin(3)
        _, b = generate_lifetime_standin(3)
        _, c = generate_lifetime_standin(4)
        np.testing.assert_array_equal(a, b)
        assert not np.allclose(a, c)

    def test_csv_format(self, tmp_path):
        """Test the header, integer coordinates and LF line endings."""
        path = write_lifetime_csv(tmp_path / "map.csv", [[8.0, 10.0]], [1.5])
        raw = path.read_bytes()
        assert b"\r" not in raw
        assert raw.decode("utf-8").splitlines() == [",".join(LIFETIME_HEADER), "8,10,1.5"]
