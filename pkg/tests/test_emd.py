"""Sifting building blocks, decomposition termination, IMF criteria, and
the Hilbert spectrum."""

import numpy as np
import pytest

from sigkit.core import Signal, ToneSpec, generate_sinusoid
from sigkit.emd import (
    ImfSet,
    SiftConfig,
    emd,
    find_extrema,
    hht,
    sift,
    spline_envelope,
    zero_crossings,
)
from sigkit.errors import InsufficientExtrema, InvalidArgument
from sigkit.spectral import fft_array
from conftest import make_tone


# ---------------------------------------------------------------------------
# extrema detection
# ---------------------------------------------------------------------------

def test_monotone_has_no_extrema():
    maxima, minima = find_extrema(np.linspace(0, 1, 32))
    assert maxima.size == 0 and minima.size == 0


def test_basic_extrema():
    maxima, minima = find_extrema([0.0, 1.0, 0.0, -1.0, 0.0])
    assert list(maxima) == [1]
    assert list(minima) == [3]


def test_plateau_counts_once():
    maxima, minima = find_extrema([0.0, 2.0, 2.0, 2.0, 0.0, -1.0, 0.0])
    assert list(maxima) == [2]
    assert list(minima) == [5]


def test_tone_extrema_count():
    f, fs = 5.0, 500.0
    periods = 8
    sig = make_tone(f, fs, int(periods * fs / f))
    maxima, minima = find_extrema(sig.samples)
    assert abs((maxima.size + minima.size) - 2 * periods) <= 1


def test_find_extrema_needs_three():
    with pytest.raises(InvalidArgument):
        find_extrema([1.0, 2.0])


def test_zero_crossings():
    assert zero_crossings([1.0, -1.0, 1.0, -1.0]) == 3
    assert zero_crossings([1.0, 0.0, -1.0]) == 1
    assert zero_crossings([1.0, 1.0]) == 0


# ---------------------------------------------------------------------------
# envelopes
# ---------------------------------------------------------------------------

def test_two_knot_envelope_is_linear():
    x = np.zeros(11)
    x[2], x[8] = 1.0, 4.0
    env = spline_envelope(x, [2, 8])
    assert np.allclose(env[2:9], np.linspace(1.0, 4.0, 7), atol=1e-12)


def test_envelope_reproduces_line():
    x = 0.7 * np.arange(20.0) - 3.0
    env = spline_envelope(x, [1, 5, 9, 13, 17])
    assert np.max(np.abs(env[1:18] - x[1:18])) < 1e-9


def test_envelope_requires_two_knots():
    with pytest.raises(InsufficientExtrema):
        spline_envelope(np.ones(10), [4])


def test_tone_envelope_nearly_constant():
    sig = make_tone(10.0, 1000.0, 2000)
    maxima, _ = find_extrema(sig.samples)
    env = spline_envelope(sig.samples, maxima)
    inner = env[200:-200]
    assert np.max(np.abs(inner - 1.0)) < 0.02


# ---------------------------------------------------------------------------
# sifting
# ---------------------------------------------------------------------------

def test_pure_tone_sift_is_identity_like():
    sig = make_tone(50.0, 1000.0, 2000)
    imf, iterations = sift(sig.samples)
    assert 1 <= iterations <= 3
    inner = slice(40, -40)
    assert np.max(np.abs(imf[inner] - sig.samples[inner])) < 0.02


def test_huge_threshold_single_iteration(rng):
    x = rng.standard_normal(256)
    _, iterations = sift(x, SiftConfig(sd_threshold=1e9))
    assert iterations == 1


def test_sift_requires_extrema():
    with pytest.raises(InsufficientExtrema):
        sift(np.linspace(0.0, 1.0, 64))


def test_sift_output_satisfies_imf_count_criterion(rng):
    t = np.arange(1000) / 1000.0
    x = np.sin(2 * np.pi * 7 * t) + 0.5 * np.sin(2 * np.pi * 40 * t)
    imf, _ = sift(x)
    maxima, minima = find_extrema(imf)
    assert abs((maxima.size + minima.size) - zero_crossings(imf)) <= 1


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------

def test_monotone_input_yields_no_imfs():
    result = emd(Signal(np.linspace(0.0, 2.0, 100), 10.0))
    assert len(result) == 0
    assert np.array_equal(result.residual.samples, np.linspace(0.0, 2.0, 100))


def test_reconstruction_identity(rng):
    sig = Signal(rng.standard_normal(600), 100.0)
    result = emd(sig)
    total = sum(i.samples for i in result.imfs) + result.residual.samples
    assert np.max(np.abs(total - sig.samples)) <= 1e-10


def test_two_tone_separation():
    fs = 1000.0
    t = np.arange(2000) / fs
    sig = Signal(np.sin(2 * np.pi * 5 * t) + np.sin(2 * np.pi * 50 * t), fs)
    result = emd(sig)
    assert len(result) >= 2

    def peak_hz(x):
        mags = np.abs(fft_array(x))[: x.size // 2]
        return np.argmax(mags) * fs / x.size

    df = fs / 2000
    assert abs(peak_hz(result.imfs[0].samples) - 50.0) <= df + 1e-9
    assert abs(peak_hz(result.imfs[1].samples) - 5.0) <= df + 1e-9


def test_imf_criteria_hold(rng):
    fs = 1000.0
    t = np.arange(2000) / fs
    sig = Signal(
        np.sin(2 * np.pi * 4 * t) + 0.7 * np.sin(2 * np.pi * 37 * t), fs
    )
    result = emd(sig)
    for imf in result.imfs:
        maxima, minima = find_extrema(imf.samples)
        extrema = maxima.size + minima.size
        assert abs(extrema - zero_crossings(imf.samples)) <= 1


def test_imf_mean_envelope_small():
    fs = 1000.0
    t = np.arange(2000) / fs
    sig = Signal(np.sin(2 * np.pi * 5 * t) + np.sin(2 * np.pi * 50 * t), fs)
    result = emd(sig)
    imf = result.imfs[0].samples
    maxima, minima = find_extrema(imf)
    upper = spline_envelope(imf, maxima)
    lower = spline_envelope(imf, minima)
    mean = 0.5 * (upper + lower)[100:-100]
    rms_ratio = np.sqrt(np.mean(mean**2)) / np.sqrt(np.mean(imf[100:-100] ** 2))
    assert rms_ratio <= 0.05


def test_successive_imfs_descend_in_frequency():
    fs = 1000.0
    t = np.arange(4000) / fs
    sig = Signal(
        np.sin(2 * np.pi * 3 * t)
        + np.sin(2 * np.pi * 21 * t)
        + np.sin(2 * np.pi * 80 * t),
        fs,
    )
    result = emd(sig)

    def peak_hz(x):
        mags = np.abs(fft_array(x))[: x.size // 2]
        return np.argmax(mags) * fs / x.size

    peaks = [peak_hz(i.samples) for i in result.imfs[:3]]
    assert peaks[0] > peaks[1] > peaks[2]


def test_emd_requires_min_length():
    with pytest.raises(InvalidArgument):
        emd(Signal(np.ones(4), 1.0))


def test_max_imfs_cap(rng):
    sig = Signal(rng.standard_normal(2048), 100.0)
    result = emd(sig, SiftConfig(max_imfs=3))
    assert len(result) <= 3


# ---------------------------------------------------------------------------
# Hilbert spectrum
# ---------------------------------------------------------------------------

def test_hht_tone_concentration():
    fs = 1000.0
    sig = make_tone(50.0, fs, 2000)
    tf = hht(sig, freq_bins=128, time_bins=64)
    row = int(50.0 / (fs / 2) * 128)
    inner_cols = slice(2, 62)
    band = tf.values[row - 1 : row + 2, inner_cols].sum()
    assert band >= 0.90 * tf.values[:, inner_cols].sum()


def test_hht_zero_signal_empty_map():
    tf = hht(Signal(np.zeros(256) + 0.0, 100.0))
    assert np.allclose(tf.values, 0.0)


def test_hht_transient_localization(composite_demo):
    diag = {}
    tf = hht(composite_demo, freq_bins=64, time_bins=48, diagnostics=diag)
    freq_band = (tf.freqs >= 360.0) & (tf.freqs <= 440.0)
    strip = tf.values[freq_band].sum(axis=0)
    col_width = composite_demo.duration / 48
    inside = (tf.times + col_width >= 0.60) & (tf.times - col_width <= 0.64)
    assert strip[inside].max() > 0
    assert strip[~inside].max() <= 0.10 * strip.max()


def test_hht_diagnostics_counter(rng):
    sig = Signal(rng.standard_normal(512), 100.0)
    diag = {}
    hht(sig, diagnostics=diag)
    assert "clipped_samples" in diag
    assert diag["clipped_samples"] >= 0
