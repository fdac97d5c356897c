"""The four space norms: worked identities and equivalence-scale behavior."""

import math

import numpy as np
import pytest

from powemb.lpengine import (
    Field,
    bessel_apply,
    derivative,
    field_from_samples,
    weighted_lp,
)
from powemb.norms import (
    besov_norm,
    bessel_norm,
    sobolev_norm,
    space_norm,
    triebel_norm,
)
from powemb.params import RangeError
from powemb.suite import S
from powemb.witnesses import random_band_limited


@pytest.fixture(scope="module")
def batch(grid1d, sys1d):
    return [random_band_limited(grid1d, 1000 + i, band=48.0) for i in range(20)]


def pure_mode(grid, k=6, width=2.0):
    """A Gaussian-windowed lattice mode confined to the plateau of hat_phi[k].

    The window transform spreads +-8.6/width around the carrier, so the
    carrier sits mid-plateau of a block wide enough to hold the whole
    support (k >= 6 for width 2 on the unit-frequency scale).
    """
    xi = grid.axis_freqs()
    lo, hi = 0.85 * 2 ** k, 0.92 * 2 ** k
    xi0 = float(xi[(xi >= lo) & (xi <= hi)][0])
    spread = 8.6 / width
    assert 0.75 * 2 ** k + spread < xi0 < 2 ** k - spread
    f = field_from_samples(
        grid,
        lambda x: np.exp(1j * xi0 * x) * np.exp(-x * x / (2.0 * width ** 2)),
        band_limit=xi0 + spread)
    f.carrier = xi0
    f.spread = spread
    return f


class TestBesov:
    def test_single_block_collapse(self, grid1d, sys1d):
        f = pure_mode(grid1d, 6)
        for q in (1, 2, math.inf):
            res = besov_norm(f, 1.5, 2, q, 0.0, sys=sys1d)
            expected = 2.0 ** (6 * 1.5) * weighted_lp(f, 2, 0.0)
            assert res.value == pytest.approx(expected, rel=1e-9)

    def test_band_one_is_plain_lp(self, grid1d, sys1d):
        from powemb.witnesses import gaussian_spectral_base

        f = gaussian_spectral_base(grid1d, sigma_xi=0.1)  # band 0.86
        res = besov_norm(f, 0.0, 2, 1, 0.5, sys=sys1d)
        assert res.value == pytest.approx(weighted_lp(f, 2, 0.5), rel=1e-12)
        nonzero = [k for k, v in res.per_block if v > 1e-12 * res.value]
        assert nonzero == [0]

    def test_q_monotone(self, grid1d, sys1d, batch):
        for f in batch[:5]:
            small = besov_norm(f, 0.5, 2, 4, 0.0, sys=sys1d).value
            big = besov_norm(f, 0.5, 2, 1, 0.0, sys=sys1d).value
            assert small <= big * (1 + 1e-12)

    def test_per_block_aggregation_consistent(self, grid1d, sys1d, batch):
        f = batch[0]
        res = besov_norm(f, 0.5, 2, 3, 0.25, sys=sys1d)
        manual = sum(v ** 3 for _, v in res.per_block) ** (1 / 3)
        assert res.value == pytest.approx(manual, rel=1e-12)

    def test_homogeneous_and_zero(self, grid1d, sys1d, batch):
        f = batch[1]
        scaled = Field(grid1d, 3.5 * f.values, band_limit=f.band_limit)
        a = besov_norm(scaled, 0.5, 2, 2, 0.0, sys=sys1d).value
        b = besov_norm(f, 0.5, 2, 2, 0.0, sys=sys1d).value
        assert a == pytest.approx(3.5 * b, rel=1e-10)
        zero = Field(grid1d, np.zeros(grid1d.N, dtype=complex), band_limit=1.0)
        assert besov_norm(zero, 0.5, 2, 2, 0.0, sys=sys1d).value == 0.0


class TestTriebel:
    def test_single_block_matches_besov(self, grid1d, sys1d):
        f = pure_mode(grid1d, 6)
        for q in (1, 3, math.inf):
            t = triebel_norm(f, 0.7, 2, q, 0.5, sys=sys1d).value
            b = besov_norm(f, 0.7, 2, q, 0.5, sys=sys1d).value
            assert t == pytest.approx(b, rel=1e-9)

    def test_q_equals_p_fubini(self, grid1d, sys1d, batch):
        for f in batch[:5]:
            t = triebel_norm(f, 0.7, 3, 3, 0.5, sys=sys1d).value
            b = besov_norm(f, 0.7, 3, 3, 0.5, sys=sys1d).value
            assert t == pytest.approx(b, rel=1e-10)

    def test_sandwich_ordering(self, grid1d, sys1d, batch):
        p, q = 2.0, 4.0
        for f in batch:
            t = triebel_norm(f, 0.5, p, q, 0.0, sys=sys1d).value
            b_min = besov_norm(f, 0.5, p, min(p, q), 0.0, sys=sys1d).value
            b_max = besov_norm(f, 0.5, p, max(p, q), 0.0, sys=sys1d).value
            assert t <= 10 * b_min and b_max <= 10 * t

    def test_p_inf_rejected(self, grid1d, batch):
        with pytest.raises(RangeError):
            triebel_norm(batch[0], 0.5, math.inf, 2, 0.0)


class TestBessel:
    def test_s_zero_is_lp(self, grid1d, batch):
        f = batch[2]
        assert bessel_norm(f, 0.0, 2, 0.5).value == pytest.approx(
            weighted_lp(f, 2, 0.5), rel=1e-12)

    def test_lifting_identity(self, grid1d, batch):
        # || J_{-sigma} f ||_{H^s} = || f ||_{H^{s-sigma}} exactly
        f = batch[3]
        lifted = bessel_norm(bessel_apply(f, -0.6), 1.1, 2, 0.5).value
        direct = bessel_norm(f, 0.5, 2, 0.5).value
        assert lifted == pytest.approx(direct, rel=1e-10)

    def test_pure_mode_factor(self, grid1d):
        # the multiplier varies across the window, so bracket the ratio by
        # its extremes over the spectral support
        f = pure_mode(grid1d, 6)
        ratio = bessel_norm(f, 2.0, 2, 0.0).value / weighted_lp(f, 2, 0.0)
        lo = 1 + (f.carrier - f.spread) ** 2
        hi = 1 + (f.carrier + f.spread) ** 2
        assert lo * (1 - 1e-9) <= ratio <= hi * (1 + 1e-9)
        assert ratio == pytest.approx(1 + f.carrier ** 2, rel=0.2)


class TestSobolev:
    def test_m_zero_is_lp(self, grid1d, batch):
        f = batch[4]
        assert sobolev_norm(f, 0, 2, 0.5).value == pytest.approx(
            weighted_lp(f, 2, 0.5), rel=1e-12)

    def test_sine_eigenfunction(self, grid1d_fine):
        om = abs(grid1d_fine.axis_freqs()[2048])
        f = field_from_samples(grid1d_fine, lambda x: np.sin(om * x))
        got = sobolev_norm(f, 1, 2, 0.0).value
        # ||sin|| = ||om cos|| up to the phase: both integrate to sqrt(L)
        base = math.sqrt(grid1d_fine.L)
        assert got == pytest.approx((1 + om) * base, rel=1e-6)

    def test_wh_equivalence_batch(self, grid1d, batch):
        for f in batch:
            ratio = (sobolev_norm(f, 1, 2, 0.5).value
                     / bessel_norm(f, 1, 2, 0.5).value)
            assert 0.1 <= ratio <= 10.0


class TestAcrossScales:
    def test_lifting_ratio_window(self, grid1d, sys1d, batch):
        for f in batch:
            num = besov_norm(bessel_apply(f, 1.0), -0.5, 2, 2, 0.5,
                             sys=sys1d).value
            den = besov_norm(f, 0.5, 2, 2, 0.5, sys=sys1d).value
            assert 0.1 <= num / den <= 10.0

    def test_differentiation_ratio_window(self, grid1d, sys1d, batch):
        for f in batch:
            num = (besov_norm(f, -0.5, 2, 2, 0.0, sys=sys1d).value
                   + besov_norm(derivative(f, (1,)), -0.5, 2, 2, 0.0,
                                sys=sys1d).value)
            den = besov_norm(f, 0.5, 2, 2, 0.0, sys=sys1d).value
            assert 0.1 <= num / den <= 10.0

    def test_epsilon_gain_dominates(self, grid1d, sys1d, batch):
        # B^{s+eps}_{p,q0} controls B^{s}_{p,q1} for any q pair
        for f in batch[:5]:
            hi = besov_norm(f, 0.75, 2, math.inf, 0.0, sys=sys1d).value
            lo = besov_norm(f, 0.5, 2, 1, 0.0, sys=sys1d).value
            assert lo <= 10 * hi

    def test_space_norm_dispatch(self, grid1d, sys1d, batch):
        f = batch[0]
        assert space_norm(f, S("B", "1/2", 2, 2, "1/2"), sys=sys1d).value > 0
        assert space_norm(f, S("F", "1/2", 2, 2, "1/2"), sys=sys1d).value > 0
        assert space_norm(f, S("H", "1/2", 2, gamma="1/2")).value > 0
        assert space_norm(f, S("W", 1, 2, gamma="1/2")).value > 0
        assert space_norm(f, S("Holder", "3/2"), sys=sys1d).value > 0

    def test_boundary_warning_attached(self, grid1d, sys1d):
        flat = Field(grid1d, np.ones(grid1d.N, dtype=complex), band_limit=0.5)
        res = besov_norm(flat, 0.5, 2, 2, 0.0, sys=sys1d)
        assert res.warnings

    def test_norm_result_json(self, grid1d, sys1d, batch):
        res = besov_norm(batch[0], 0.5, 2, 2, 0.0, sys=sys1d)
        d = res.to_dict()
        assert "value" in d and "per_block" in d
