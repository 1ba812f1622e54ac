"""Unit tests for seeded random streams."""

import numpy as np

from src.rng import STREAMS, RngState


class TestRngState:
    """Tests for RngState."""

    def test_same_seed_same_draws(self):
        """Test that identical seeds give identical sequences."""
        a = RngState(7).standard_normal(5)
        b = RngState(7).standard_normal(5)
        np.testing.assert_array_equal(a, b)

    def test_streams_are_independent_of_each_other(self):
        """Test that drawing from one stream does not shift another."""
        root = RngState(3).for_seed(0)
        expected = root.stream("noise").standard_normal(4)

        other = RngState(3).for_seed(0)
        other.stream("acquisition").standard_normal(100)
        np.testing.assert_array_equal(other.stream("noise").standard_normal(4), expected)

    def test_seed_indices_differ(self):
        """Test that two seed indices produce different draws."""
        root = RngState(0)
        a = root.for_seed(0).stream("noise").standard_normal(3)
        b = root.for_seed(1).stream("noise").standard_normal(3)
        assert not np.allclose(a, b)

    def test_uniform_open_closed_range(self):
        """Test that draws lie in (0, 1]."""
        u = RngState(11).uniform_open_closed(10_000)
        assert np.all(u > 0)
        assert np.all(u <= 1)

    def test_draw_counter(self):
        """Test that each call advances the draw counter once."""
        state = RngState(0)
        state.uniform(0, 1, 3)
        state.integers(5)
        assert state.draws == 2

    def test_stream_keys_are_unique(self):
        """Test that no two named streams share a key."""
        assert len(set(STREAMS.values())) == len(STREAMS)
