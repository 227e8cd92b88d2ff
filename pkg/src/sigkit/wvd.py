"""Discrete Wigner-Ville distribution and its lag-windowed (pseudo) variant.

For each time index the instantaneous autocorrelation kernel
``x[n+m] * conj(x[n-m])`` is formed over the maximal symmetric lag range
and transformed over the lag variable.  With integer m the kernel covers
even lags only, which maps a tone at f onto bin ``2*N*f/fs``; the frequency
axis therefore holds N bins spanning [0, fs/2).  Values are scaled by
``2/fs`` so each column sums (times the bin width) to the analytic
signal's instantaneous power.

Computing on the analytic signal (the default) avoids the aliasing and
negative-frequency interference a real-signal discrete WVD would pick up.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Signal
from .errors import InvalidArgument
from .hilbert import analytic_signal
from .spectral import TimeFrequencyMap, fft_array


@dataclass(frozen=True)
class WvdConfig:
    analytic_first: bool = True
    smoothing_window: str | None = None
    smoothing_window_len: int | None = None

    def __post_init__(self):
        if self.smoothing_window is not None:
            if self.smoothing_window not in ("hamming", "hann"):
                raise InvalidArgument(
                    f"smoothing window must be hamming or hann, got "
                    f"{self.smoothing_window!r}"
                )
            if (
                self.smoothing_window_len is not None
                and self.smoothing_window_len % 2 == 0
            ):
                raise InvalidArgument("smoothing window length must be odd")


def _symmetric_window(name: str, length: int) -> np.ndarray:
    k = np.arange(length)
    if name == "hamming":
        return 0.54 - 0.46 * np.cos(2.0 * np.pi * k / (length - 1))
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * k / (length - 1))


def _wvd_map(x: Signal, lag_window: np.ndarray | None, analytic_first: bool):
    n = len(x)
    if analytic_first:
        a = analytic_signal(x).values
    else:
        a = x.samples.astype(complex)
    half_taps = None
    if lag_window is not None:
        half_taps = lag_window[(lag_window.size - 1) // 2 :]
    # circular-lag layout: row m holds x[n+m]*conj(x[n-m]), row N-m its
    # conjugate, so the lag FFT is real up to round-off
    kernel = np.zeros((n, n), dtype=complex)
    idx = np.arange(n)
    max_m = np.minimum(idx, n - 1 - idx)
    for m in range(0, int(max_m.max()) + 1):
        cols = np.flatnonzero(max_m >= m)
        prod = a[cols + m] * np.conj(a[cols - m])
        if half_taps is not None:
            if m >= half_taps.size:
                break
            prod = prod * half_taps[m]
        kernel[m, cols] = prod
        if m > 0:
            kernel[n - m, cols] = np.conj(prod)
    values = np.real(fft_array(kernel.T, n)).T * (2.0 / x.fs)
    freqs = np.arange(n) * (x.fs / (2.0 * n))
    return TimeFrequencyMap(times=x.times, freqs=freqs, values=values, kind="wvd")


def wvd(x: Signal, config: WvdConfig = WvdConfig()) -> TimeFrequencyMap:
    """Unsmoothed distribution over the maximal symmetric lag range."""
    return _wvd_map(x, None, config.analytic_first)


def pwvd(x: Signal, config: WvdConfig) -> TimeFrequencyMap:
    """Lag-windowed distribution; trades frequency resolution for
    suppression of cross-terms between time-separated components."""
    if config.smoothing_window is None:
        raise InvalidArgument("pwvd requires a smoothing window")
    n = len(x)
    length = config.smoothing_window_len
    if length is None:
        length = max(3, n // 4)
        if length % 2 == 0:
            length += 1
    if length > 2 * n - 1:
        raise InvalidArgument(
            f"smoothing window length {length} exceeds the lag range"
        )
    window = _symmetric_window(config.smoothing_window, length)
    return _wvd_map(x, window, config.analytic_first)
