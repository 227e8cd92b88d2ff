"""Spectral and wavelet-packet feature extractors: closed-form cases,
bounds, and invariances."""

import numpy as np
import pytest

from sigkit.core import Signal, ToneSpec, generate_sinusoid
from sigkit.errors import DegenerateInput
from sigkit.features import (
    PSD_FEATURE_NAMES,
    FeatureVector,
    features_from_psd,
    peak_power_frequency,
    psd_features,
    spectral_centroid,
    spectral_entropy,
    spectral_spread,
    wpt_energy_features,
)
from sigkit.spectral import PsdEstimate, welch
from sigkit.stats import descriptive_stats


def make_psd(freqs, density):
    return PsdEstimate(
        freqs=np.asarray(freqs, float),
        density=np.asarray(density, float),
        method="welch",
    )


# ---------------------------------------------------------------------------
# closed-form PSDs
# ---------------------------------------------------------------------------

def test_single_bin_psd():
    psd = make_psd([0.0, 10.0, 20.0, 30.0], [0.0, 0.0, 5.0, 0.0])
    assert spectral_centroid(psd) == 20.0
    assert spectral_spread(psd) == 0.0
    assert spectral_entropy(psd) == 0.0
    assert peak_power_frequency(psd) == (5.0, 20.0)


def test_two_equal_bins():
    psd = make_psd([0.0, 10.0, 20.0, 30.0], [0.0, 3.0, 0.0, 3.0])
    assert spectral_centroid(psd) == pytest.approx(20.0)
    assert spectral_spread(psd) == pytest.approx(10.0)
    assert spectral_entropy(psd) == pytest.approx(1.0)


def test_flat_psd_entropy_is_log2k():
    k = 64
    psd = make_psd(np.arange(k, dtype=float), np.full(k, 2.5))
    assert spectral_entropy(psd) == pytest.approx(np.log2(k))
    # tie-break toward the lowest frequency
    assert peak_power_frequency(psd) == (2.5, 0.0)


def test_degenerate_psd_rejected():
    psd = make_psd([0.0, 1.0], [0.0, 0.0])
    with pytest.raises(DegenerateInput):
        spectral_centroid(psd)


def test_tone_psd_centroid_and_peak():
    fs, n = 1000.0, 4096
    sig = generate_sinusoid(ToneSpec(1.0, 125.0), fs, n)
    psd = welch(sig, "hann", seg_len=1024, overlap=0.5, nfft=1024)
    df = fs / 1024
    assert abs(spectral_centroid(psd) - 125.0) <= 2 * df
    _, pf = peak_power_frequency(psd)
    assert abs(pf - 125.0) <= df


def test_white_noise_spread(rng):
    fs = 1000.0
    sig = Signal(rng.standard_normal(65536), fs)
    psd = welch(sig, "hann", seg_len=512, overlap=0.5, nfft=512)
    # uniform density over [0, fs/2] has stdev (fs/2)/sqrt(12)
    expected = (fs / 2) / np.sqrt(12.0)
    assert spectral_spread(psd) == pytest.approx(expected, rel=0.05)


def test_entropy_decreases_with_snr(rng):
    fs, n = 1000.0, 8192
    tone = generate_sinusoid(ToneSpec(1.0, 100.0), fs, n).samples
    noise = rng.standard_normal(n)
    entropies = []
    for snr_db in (-10.0, 0.0, 10.0, 20.0):
        scale = np.sqrt(0.5 / 10 ** (snr_db / 10.0))
        sig = Signal(tone + scale * noise, fs)
        psd = welch(sig, "hann", seg_len=512, overlap=0.5, nfft=512)
        entropies.append(spectral_entropy(psd))
    assert all(a > b for a, b in zip(entropies, entropies[1:]))


# ---------------------------------------------------------------------------
# feature vectors
# ---------------------------------------------------------------------------

def test_psd_feature_vector_shape(rng):
    sig = Signal(rng.standard_normal(12800), 64000.0)
    fv = psd_features(sig, seg_len=512, overlap=0.5, nfft=1024, label="healthy")
    assert fv.names == PSD_FEATURE_NAMES
    assert fv.values.shape == (5,)
    assert fv.label == "healthy"


def test_psd_features_deterministic(rng):
    sig = Signal(rng.standard_normal(4096), 64000.0)
    a = psd_features(sig, seg_len=512, overlap=0.5, nfft=1024)
    b = psd_features(sig, seg_len=512, overlap=0.5, nfft=1024)
    assert np.array_equal(a.values, b.values)


def test_feature_vector_validation():
    with pytest.raises(Exception):
        FeatureVector(names=("a", "b"), values=np.array([1.0]))
    with pytest.raises(Exception):
        FeatureVector(names=("a",), values=np.array([np.inf]))


def test_scale_invariance_of_shape_features(rng):
    freqs = np.arange(0.0, 257.0)
    density = rng.random(257) + 0.01
    base = features_from_psd(make_psd(freqs, density))
    # power-of-two scales shift exponents only, so invariance is bit-exact
    scaled = features_from_psd(make_psd(freqs, 8.0 * density))
    for name in ("spectral_centroid", "spectral_spread", "spectral_entropy",
                 "peak_frequency"):
        assert scaled.as_dict()[name] == base.as_dict()[name]
    assert scaled.as_dict()["peak_power"] == 8.0 * base.as_dict()["peak_power"]
    # arbitrary positive scales agree to rounding
    odd = features_from_psd(make_psd(freqs, 7.5 * density))
    for name in ("spectral_centroid", "spectral_spread", "spectral_entropy"):
        assert odd.as_dict()[name] == pytest.approx(base.as_dict()[name], rel=1e-12)
    assert odd.as_dict()["peak_frequency"] == base.as_dict()["peak_frequency"]


def test_feature_bounds_random_psds(rng):
    fs = 2000.0
    freqs = np.arange(0.0, fs / 2 + 1.0, fs / 512)
    for _ in range(200):
        density = rng.random(freqs.size) ** 2
        density[density < 0.05] = 0.0
        if density.sum() == 0:
            continue
        psd = make_psd(freqs, density)
        fv = features_from_psd(psd)
        d = fv.as_dict()
        assert 0.0 <= d["spectral_centroid"] <= fs / 2
        assert 0.0 <= d["peak_frequency"] <= fs / 2
        assert d["spectral_spread"] >= 0.0
        assert 0.0 <= d["spectral_entropy"] <= np.log2(freqs.size) + 1e-12
        assert d["peak_power"] == density.max()


# ---------------------------------------------------------------------------
# WPT energy features
# ---------------------------------------------------------------------------

def test_wpt_feature_count(rng):
    sig = Signal(rng.standard_normal(500), 173.61)
    fv = wpt_energy_features(sig, "db4", 3)
    assert fv.names == tuple(f"mode_{i}" for i in range(8))
    assert fv.values.shape == (8,)


def test_wpt_features_zero_segment():
    fv = wpt_energy_features(Signal(np.zeros(256) + 0.0, 1.0), "db4", 3)
    assert np.all(fv.values == 0.0)


def test_wpt_features_parseval(rng):
    sig = Signal(rng.standard_normal(2048), 173.61)
    fv = wpt_energy_features(sig, "db6", 3)
    energy = descriptive_stats(sig).energy
    assert fv.values.sum() == pytest.approx(energy, rel=5e-3)


def test_wpt_features_sign_flip_invariant(rng):
    x = rng.standard_normal(512)
    a = wpt_energy_features(Signal(x, 1.0), "db5", 3)
    b = wpt_energy_features(Signal(-x, 1.0), "db5", 3)
    assert np.array_equal(a.values, b.values)
