"""FFT engine, amplitude spectra, STFT, and PSD estimators against direct
DFT oracles and analytic identities."""

import numpy as np
import pytest

from sigkit.core import Signal, ToneSpec, generate_sinusoid
from sigkit.errors import InvalidArgument
from sigkit.spectral import (
    amplitude_spectrum,
    fft,
    fft_array,
    frequency_bins,
    ifft,
    ifft_array,
    periodogram,
    stft,
    welch,
)
from conftest import make_tone


def direct_dft(x, n):
    """O(N^2) reference transform."""
    x = np.asarray(x, dtype=complex)
    if x.size < n:
        x = np.concatenate([x, np.zeros(n - x.size)])
    x = x[:n]
    k = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(k, k) / n) @ x


# ---------------------------------------------------------------------------
# fft / ifft
# ---------------------------------------------------------------------------

def test_fft_impulse():
    out = fft_array(np.array([1.0, 0, 0, 0, 0, 0, 0, 0]))
    assert np.allclose(out, 1.0 + 0j, atol=1e-14)


def test_fft_constant_is_dc_only():
    out = fft_array(np.ones(16))
    assert out[0] == pytest.approx(16.0)
    assert np.allclose(out[1:], 0.0, atol=1e-12)


@pytest.mark.parametrize("n", [3, 7, 30, 64, 100, 500, 1024])
def test_fft_matches_direct_dft(rng, n):
    x = rng.standard_normal(n)
    got = fft_array(x)
    ref = direct_dft(x, n)
    scale = np.max(np.abs(ref))
    assert np.max(np.abs(got - ref)) / scale < 1e-9


def test_fft_zero_pad_and_truncate(rng):
    x = rng.standard_normal(10)
    assert np.allclose(fft_array(x, 16), direct_dft(x, 16), atol=1e-10)
    assert np.allclose(fft_array(x, 8), direct_dft(x[:8], 8), atol=1e-10)


def test_fft_rejects_zero_nfft():
    with pytest.raises(InvalidArgument):
        fft_array(np.ones(4), 0)


def test_ifft_round_trip(rng):
    for n in (16, 60, 257):
        x = rng.standard_normal(n)
        back = ifft_array(fft_array(x))
        assert np.max(np.abs(back - x)) < 1e-10


def test_ifft_zero_spectrum():
    assert np.allclose(ifft_array(np.zeros(8, complex)), 0.0)


def test_ifft_matches_direct_inverse(rng):
    n = 48
    spec = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    k = np.arange(n)
    ref = np.exp(2j * np.pi * np.outer(k, k) / n) @ spec / n
    assert np.max(np.abs(ifft_array(spec) - ref)) < 1e-10


def test_fft_signal_objects():
    sig = make_tone(100.0, 1600.0, 256)
    spec = fft(sig)
    assert spec.nfft == 256 and spec.fs == 1600.0
    assert np.max(np.abs(ifft(spec).real - sig.samples)) < 1e-10


def test_fft_conjugate_symmetry_exact_pow2(rng):
    x = rng.standard_normal(512)
    X = fft_array(x)
    assert np.array_equal(X[1:], np.conj(X[1:][::-1]))


def test_fft_conjugate_symmetry_general(rng):
    x = rng.standard_normal(500)
    X = fft_array(x)
    scale = np.max(np.abs(X))
    assert np.max(np.abs(X[1:] - np.conj(X[1:][::-1]))) / scale < 1e-12


def test_fft_linearity(rng):
    x, y = rng.standard_normal(128), rng.standard_normal(128)
    lhs = fft_array(2.0 * x - 3.0 * y)
    rhs = 2.0 * fft_array(x) - 3.0 * fft_array(y)
    assert np.max(np.abs(lhs - rhs)) < 1e-10 * np.max(np.abs(rhs))


def test_fft_shift_invariant_magnitude(rng):
    x = rng.standard_normal(128)
    a = np.abs(fft_array(x))
    b = np.abs(fft_array(np.roll(x, 17)))
    assert np.max(np.abs(a - b)) < 1e-10 * np.max(a)


def test_parseval(rng):
    for n in (64, 100, 501):
        x = rng.standard_normal(n)
        X = fft_array(x)
        assert np.sum(x * x) == pytest.approx(np.sum(np.abs(X) ** 2) / n, rel=1e-9)


# ---------------------------------------------------------------------------
# amplitude spectrum and bins
# ---------------------------------------------------------------------------

def test_unit_tone_amplitude_scaling():
    fs, n = 1024.0, 1024
    sig = make_tone(64.0, fs, n)  # exactly bin 64
    spec = amplitude_spectrum(sig)
    assert spec.amplitudes[64] == pytest.approx(1.0, abs=1e-6)


def local_maxima(values):
    return np.flatnonzero(
        (values[1:-1] >= values[:-2]) & (values[1:-1] >= values[2:])
    ) + 1


def test_composite_demo_spectrum_peaks(composite_demo):
    # each component shows a spectral peak within one bin of its frequency,
    # and the peak heights order by component energy density
    spec = amplitude_spectrum(composite_demo, nfft=2048)
    df = 1600.0 / 2048
    peaks = local_maxima(spec.amplitudes)
    heights = {}
    for f0 in (100.0, 200.0, 400.0):
        nearest = peaks[np.argmin(np.abs(spec.freqs[peaks] - f0))]
        assert abs(spec.freqs[nearest] - f0) <= df + 1e-9
        region = np.abs(spec.freqs - f0) <= 25.0
        heights[f0] = spec.amplitudes[region].max()
    assert heights[200.0] > heights[100.0] > heights[400.0]


def test_bin_count_1024():
    sig = Signal(np.zeros(1024) + 1.0, 64000.0)
    spec = amplitude_spectrum(sig, nfft=1024)
    assert spec.freqs.size == 513
    assert spec.amplitudes.size == 513


def test_frequency_bins_resolution():
    bins = frequency_bins(2048, 1600.0)
    assert bins[1] == pytest.approx(0.78125)
    bins = frequency_bins(1024, 64000.0)
    assert bins[1] == pytest.approx(62.5)
    assert bins[-1] == 32000.0  # always fs/2 for even nfft


# ---------------------------------------------------------------------------
# STFT
# ---------------------------------------------------------------------------

def test_stft_localizes_transient(composite_demo):
    tf = stft(composite_demo, window="hamming", seg_len=256, overlap=0.5, nfft=256)
    row = np.argmin(np.abs(tf.freqs - 400.0))
    strip = tf.values[row]
    inside = (tf.times + 0.08 >= 0.60) & (tf.times - 0.08 <= 0.64)
    peak = strip[inside].max()
    assert peak > 0
    assert strip[~inside].max() <= 0.10 * peak


def test_stft_stationary_tone_is_stationary():
    sig = make_tone(200.0, 1600.0, 2048)
    tf = stft(sig, window="hann", seg_len=256, overlap=0.5)
    argmaxes = np.argmax(tf.values, axis=0)
    assert np.all(argmaxes == argmaxes[0])


def test_stft_rect_matches_fft_exactly(rng):
    sig = Signal(rng.standard_normal(512), 100.0)
    tf = stft(sig, window="rect", seg_len=128, overlap=0.0, nfft=128)
    for j in range(4):
        chunk = sig.samples[j * 128 : (j + 1) * 128]
        ref = np.abs(fft_array(chunk))[:65]
        assert np.array_equal(tf.values[:, j], ref)


def test_stft_rejects_bad_segments():
    sig = Signal(np.zeros(64), 10.0)
    with pytest.raises(InvalidArgument):
        stft(sig, seg_len=128)
    with pytest.raises(InvalidArgument):
        stft(sig, seg_len=32, nfft=16)


# ---------------------------------------------------------------------------
# PSD
# ---------------------------------------------------------------------------

def test_periodogram_parseval(rng):
    fs = 500.0
    sig = Signal(rng.standard_normal(1024), fs)
    psd = periodogram(sig)
    df = fs / 1024
    power = np.mean(sig.samples**2)
    assert np.sum(psd.density) * df == pytest.approx(power, rel=1e-6)


def test_periodogram_white_noise_level(rng):
    fs, n, trials = 200.0, 512, 100
    sigma2 = 2.0
    level = np.zeros(n // 2 + 1)
    for _ in range(trials):
        x = Signal(rng.normal(0, np.sqrt(sigma2), n), fs)
        level += periodogram(x).density
    level /= trials
    expected = 2.0 * sigma2 / fs
    interior = level[1:-1]
    assert np.all(np.abs(interior - expected) <= 0.30 * expected)


def test_periodogram_tone_peak():
    sig = make_tone(50.0, 256.0, 512)
    psd = periodogram(sig)
    assert psd.freqs[np.argmax(psd.density)] == pytest.approx(50.0)


def test_welch_degenerates_to_periodogram(rng):
    sig = Signal(rng.standard_normal(256), 100.0)
    ref = periodogram(sig)
    got = welch(sig, window="rect", seg_len=256, overlap=0.0)
    assert np.array_equal(got.density, ref.density)


def test_welch_reduces_variance(rng):
    fs, n, trials = 100.0, 1280, 100
    per_bins, welch_bins = [], []
    for _ in range(trials):
        sig = Signal(rng.standard_normal(n), fs)
        per_bins.append(periodogram(sig, nfft=512).density)
        welch_bins.append(welch(sig, "hann", seg_len=512, overlap=0.5, nfft=512).density)
    var_per = np.var(np.stack(per_bins), axis=0)[1:-1].mean()
    var_welch = np.var(np.stack(welch_bins), axis=0)[1:-1].mean()
    assert var_welch < 0.5 * var_per


def test_welch_vibration_configuration(rng):
    sig = Signal(rng.standard_normal(12800), 64000.0)
    psd = welch(sig, window="hann", seg_len=512, overlap=0.5, nfft=1024)
    assert psd.density.size == 513
    assert psd.params["n_segments"] == 49


def test_welch_absolute_overlap(rng):
    sig = Signal(rng.standard_normal(500), 173.61)
    psd = welch(sig, window="hann", seg_len=250, noverlap=166, nfft=1024)
    assert psd.density.size == 513
    # hop 84: starts 0, 84, 168, 250
    assert psd.params["n_segments"] == 3


def test_welch_integral_close_to_power(rng):
    fs = 100.0
    sig = Signal(rng.standard_normal(4096), fs)
    psd = welch(sig, "hann", seg_len=512, overlap=0.5, nfft=512)
    df = fs / 512
    assert np.sum(psd.density) * df == pytest.approx(np.mean(sig.samples**2), rel=0.10)


def test_psd_nonnegative(rng):
    sig = Signal(rng.standard_normal(333), 10.0)
    assert np.all(periodogram(sig, nfft=512).density >= 0)
    assert np.all(welch(sig, seg_len=128, nfft=256).density >= 0)
