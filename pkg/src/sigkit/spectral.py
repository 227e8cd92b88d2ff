"""Fourier analysis: DFT/FFT, one-sided amplitude spectra, STFT spectrograms,
and periodogram/Welch power spectral densities.

The transform engine implements an iterative radix-2 path for power-of-two
lengths and a Bluestein chirp path for every other length, so any ``nfft``
is supported.  Twiddle tables are built with explicit half-circle mirroring,
which keeps the conjugate symmetry of real-input transforms exact rather
than merely close.

One-sided scaling conventions: amplitude spectra double the interior bins
and normalize by the transformed sample count; PSDs double interior bins
and normalize by ``fs`` times the window energy.  DC and the Nyquist bin
are never doubled (they have no mirror image).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Signal
from .errors import InvalidArgument

# ---------------------------------------------------------------------------
# transform engine
# ---------------------------------------------------------------------------

_bitrev_cache: dict[int, np.ndarray] = {}
_twiddle_cache: dict[int, np.ndarray] = {}


def _bitrev(n: int) -> np.ndarray:
    """Bit-reversal permutation for power-of-two n."""
    perm = _bitrev_cache.get(n)
    if perm is None:
        perm = np.zeros(1, dtype=np.intp)
        while perm.size < n:
            perm = np.concatenate([2 * perm, 2 * perm + 1])
        _bitrev_cache[n] = perm
    return perm


def _twiddles(size: int) -> np.ndarray:
    """exp(-2j*pi*j/size) for j < size/2, with the second quarter mirrored
    from the first so that t[size/2 - j] == -conj(t[j]) holds bit-exactly."""
    tw = _twiddle_cache.get(size)
    if tw is None:
        half = size // 2
        tw = np.empty(half, dtype=complex)
        quarter = half // 2
        j = np.arange(quarter + 1)
        tw[: quarter + 1] = np.exp(-2j * np.pi * j / size)
        if quarter > 0:
            tw[quarter] = -1j
            k = np.arange(1, half - quarter)
            tw[half - k] = -np.conj(tw[k])
        _twiddle_cache[size] = tw
    return tw


def _fft_pow2(a: np.ndarray) -> np.ndarray:
    """Iterative radix-2 DIT transform along the last axis (len power of 2)."""
    n = a.shape[-1]
    y = np.ascontiguousarray(a, dtype=complex)[..., _bitrev(n)]
    size = 2
    while size <= n:
        half = size // 2
        tw = _twiddles(size)
        y = y.reshape(y.shape[:-1] + (n // size, size))
        even = y[..., :half]
        odd = y[..., half:] * tw
        y = np.concatenate([even + odd, even - odd], axis=-1)
        y = y.reshape(y.shape[:-2] + (n,))
        size *= 2
    return y


def _next_pow2(n: int) -> int:
    return 1 << (n - 1).bit_length()


def _chirp(n: int) -> np.ndarray:
    """exp(1j*pi*j^2/n) with the squared index reduced mod 2n to keep the
    argument small."""
    j = np.arange(n, dtype=np.int64)
    return np.exp(1j * np.pi * ((j * j) % (2 * n)) / n)


def _fft_bluestein(a: np.ndarray, n: int) -> np.ndarray:
    """Chirp-z transform of arbitrary length n via a power-of-two convolution."""
    m = _next_pow2(2 * n - 1)
    w = _chirp(n)
    aw = np.zeros(a.shape[:-1] + (m,), dtype=complex)
    aw[..., :n] = a * np.conj(w)
    b = np.zeros(m, dtype=complex)
    b[:n] = w
    b[m - n + 1 :] = w[1:][::-1]
    conv = _ifft_pow2(_fft_pow2(aw) * _fft_pow2(b))
    return np.conj(w) * conv[..., :n]


def _ifft_pow2(A: np.ndarray) -> np.ndarray:
    return np.conj(_fft_pow2(np.conj(A))) / A.shape[-1]


def fft_array(a, nfft: int | None = None) -> np.ndarray:
    """DFT ``X[k] = sum_n a[n] exp(-2j*pi*k*n/nfft)`` along the last axis.

    Input shorter than ``nfft`` is zero-padded; longer input is truncated.
    Power-of-two lengths take the radix-2 path, everything else Bluestein.
    """
    a = np.asarray(a)
    if nfft is None:
        nfft = a.shape[-1]
    if nfft < 1:
        raise InvalidArgument(f"nfft must be >= 1, got {nfft}")
    n = a.shape[-1]
    if n < nfft:
        pad = np.zeros(a.shape[:-1] + (nfft,), dtype=complex)
        pad[..., :n] = a
        a = pad
    elif n > nfft:
        a = a[..., :nfft]
    if nfft & (nfft - 1) == 0:
        return _fft_pow2(a)
    return _fft_bluestein(np.asarray(a, dtype=complex), nfft)


def ifft_array(A) -> np.ndarray:
    """Inverse DFT along the last axis; exact inverse of :func:`fft_array`."""
    A = np.asarray(A, dtype=complex)
    n = A.shape[-1]
    return np.conj(fft_array(np.conj(A), n)) / n


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexSpectrum:
    """Two-sided complex DFT coefficients of a real signal."""

    values: np.ndarray
    nfft: int
    fs: float


@dataclass(frozen=True)
class AmplitudeSpectrum:
    """One-sided amplitude spectrum in original signal units."""

    freqs: np.ndarray
    amplitudes: np.ndarray
    nfft: int
    fs: float


@dataclass(frozen=True)
class PsdEstimate:
    """One-sided power spectral density (units^2 per Hz)."""

    freqs: np.ndarray
    density: np.ndarray
    method: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TimeFrequencyMap:
    """Rectangular time x frequency grid of real intensities.

    ``values`` has shape (len(freqs), len(times)).
    """

    times: np.ndarray
    freqs: np.ndarray
    values: np.ndarray
    kind: str

    def __post_init__(self):
        if self.values.shape != (self.freqs.size, self.times.size):
            raise InvalidArgument(
                f"map shape {self.values.shape} does not match "
                f"{self.freqs.size} freqs x {self.times.size} times"
            )


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------


def fft(x, nfft: int | None = None, fs: float | None = None) -> ComplexSpectrum:
    """Full complex spectrum of a :class:`Signal` (or bare sequence).

    For a bare sequence the sampling rate defaults to 1.0 unless given.
    """
    if isinstance(x, Signal):
        samples = x.samples
        fs = x.fs if fs is None else fs
    else:
        samples = np.asarray(x, dtype=float)
        fs = 1.0 if fs is None else fs
    if nfft is None:
        nfft = samples.size
    return ComplexSpectrum(values=fft_array(samples, nfft), nfft=nfft, fs=fs)


def ifft(spec: ComplexSpectrum) -> np.ndarray:
    """Complex time-domain sequence inverting :func:`fft`."""
    return ifft_array(spec.values)


def frequency_bins(nfft: int, fs: float) -> np.ndarray:
    """One-sided bin centers ``k*fs/nfft`` for k = 0..nfft//2."""
    if nfft < 1:
        raise InvalidArgument(f"nfft must be >= 1, got {nfft}")
    return np.arange(nfft // 2 + 1) * (fs / nfft)


def _onesided_double(full_sq: np.ndarray, nfft: int) -> np.ndarray:
    """Fold a full-length nonnegative spectrum one-sided, doubling interior
    bins.  DC is never doubled; for even nfft the final (Nyquist) bin is
    kept single as well."""
    half = nfft // 2 + 1
    out = full_sq[..., :half].copy()
    if nfft % 2 == 0:
        out[..., 1:-1] *= 2.0
    else:
        out[..., 1:] *= 2.0
    return out


def amplitude_spectrum(x: Signal, nfft: int | None = None) -> AmplitudeSpectrum:
    """One-sided amplitude spectrum with tone-amplitude scaling.

    Interior bins hold ``2*|X[k]|/N`` (N = number of samples actually
    transformed), so a full-length unit sinusoid at a bin center reads 1.0.
    """
    if nfft is None:
        nfft = len(x)
    spec = fft(x, nfft)
    n_norm = min(len(x), nfft)
    half = nfft // 2 + 1
    mags = np.abs(spec.values[:half]) / n_norm
    if nfft % 2 == 0:
        mags[1:-1] *= 2.0
    else:
        mags[1:] *= 2.0
    return AmplitudeSpectrum(
        freqs=frequency_bins(nfft, x.fs), amplitudes=mags, nfft=nfft, fs=x.fs
    )


_WINDOWS = ("hann", "hamming", "rect")


def window_samples(name: str, m: int) -> np.ndarray:
    """Periodic (DFT-even) analysis window of length m.

    Periodic windows are the spectral-estimation variant; the symmetric
    (filter-design) variants live where they are needed, e.g. FIR design.
    """
    if name == "rect":
        return np.ones(m)
    k = np.arange(m)
    if name == "hann":
        return 0.5 - 0.5 * np.cos(2.0 * np.pi * k / m)
    if name == "hamming":
        return 0.54 - 0.46 * np.cos(2.0 * np.pi * k / m)
    raise InvalidArgument(f"unknown window {name!r}; expected one of {_WINDOWS}")


def stft(
    x: Signal,
    window: str = "hann",
    seg_len: int = 256,
    overlap: float = 0.5,
    nfft: int | None = None,
) -> TimeFrequencyMap:
    """Magnitude spectrogram from sliding windowed FFTs.

    Columns are segment-center instants; rows are the one-sided bins.
    """
    n = len(x)
    if not (1 <= seg_len <= n):
        raise InvalidArgument(f"seg_len {seg_len} not in [1, {n}]")
    if not (0.0 <= overlap < 1.0):
        raise InvalidArgument(f"overlap {overlap} not in [0, 1)")
    if nfft is None:
        nfft = seg_len
    if nfft < seg_len:
        raise InvalidArgument(f"nfft {nfft} < seg_len {seg_len}")
    w = window_samples(window, seg_len)
    hop = max(1, int(np.floor(seg_len * (1.0 - overlap))))
    starts = np.arange(0, n - seg_len + 1, hop)
    frames = np.stack([x.samples[s : s + seg_len] * w for s in starts])
    spectra = np.abs(fft_array(frames, nfft))[:, : nfft // 2 + 1]
    times = (starts + seg_len / 2.0) / x.fs
    return TimeFrequencyMap(
        times=times,
        freqs=frequency_bins(nfft, x.fs),
        values=spectra.T,
        kind="spectrogram",
    )


def periodogram(x: Signal, nfft: int | None = None) -> PsdEstimate:
    """Single-shot PSD: squared FFT magnitudes scaled by 1/(fs*N)."""
    n = len(x)
    if nfft is None:
        nfft = n
    spec = fft(x, nfft)
    full = np.abs(spec.values) ** 2 / (x.fs * min(n, nfft))
    return PsdEstimate(
        freqs=frequency_bins(nfft, x.fs),
        density=_onesided_double(full, nfft),
        method="periodogram",
        params={"nfft": nfft},
    )


def welch(
    x: Signal,
    window: str = "hann",
    seg_len: int = 256,
    overlap: float | None = 0.5,
    nfft: int | None = None,
    noverlap: int | None = None,
) -> PsdEstimate:
    """Averaged modified periodograms over overlapping segments.

    Overlap is given either as a fraction (``overlap``) or an absolute
    sample count (``noverlap``); segments are averaged in slice order so the
    result does not depend on any internal scheduling.
    """
    n = len(x)
    if not (1 <= seg_len <= n):
        raise InvalidArgument(f"seg_len {seg_len} not in [1, {n}]")
    if noverlap is not None:
        if not (0 <= noverlap < seg_len):
            raise InvalidArgument(f"noverlap {noverlap} not in [0, {seg_len})")
        hop = seg_len - noverlap
    else:
        if overlap is None or not (0.0 <= overlap < 1.0):
            raise InvalidArgument(f"overlap {overlap} not in [0, 1)")
        hop = max(1, int(np.floor(seg_len * (1.0 - overlap))))
    if nfft is None:
        nfft = seg_len
    if nfft < seg_len:
        raise InvalidArgument(f"nfft {nfft} < seg_len {seg_len}")
    w = window_samples(window, seg_len)
    starts = range(0, n - seg_len + 1, hop)
    frames = np.stack([x.samples[s : s + seg_len] * w for s in starts])
    sq = np.abs(fft_array(frames, nfft)) ** 2 / (x.fs * np.sum(w * w))
    mean_sq = np.mean(sq, axis=0)
    return PsdEstimate(
        freqs=frequency_bins(nfft, x.fs),
        density=_onesided_double(mean_sq, nfft),
        method="welch",
        params={
            "window": window,
            "seg_len": seg_len,
            "overlap": overlap if noverlap is None else None,
            "noverlap": noverlap,
            "nfft": nfft,
            "n_segments": len(frames),
        },
    )
