"""Analytic signal, envelope, instantaneous phase and frequency.

The analytic signal is built in the frequency domain: zero the negative
half of the spectrum, double the positive half, leave DC (and Nyquist for
even lengths) untouched, and transform back.  Exact for finite discrete
signals; time-domain edge effects still show up in derived quantities, so
interior assertions should skip ~2% margins at each end.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Signal
from .spectral import fft_array, ifft_array


@dataclass(frozen=True)
class AnalyticSignal:
    """Complex signal whose real part is the input and whose imaginary part
    is its +-90 degree phase-shifted (Hilbert) counterpart."""

    values: np.ndarray
    fs: float

    def __len__(self):
        return self.values.size


def analytic_signal(x: Signal) -> AnalyticSignal:
    n = len(x)
    spectrum = fft_array(x.samples, n)
    gain = np.zeros(n)
    gain[0] = 1.0
    if n % 2 == 0:
        gain[n // 2] = 1.0
        gain[1 : n // 2] = 2.0
    else:
        gain[1 : (n + 1) // 2] = 2.0
    return AnalyticSignal(values=ifft_array(spectrum * gain), fs=x.fs)


def envelope(a: AnalyticSignal) -> np.ndarray:
    """Instantaneous amplitude |x_a(t)|."""
    return np.abs(a.values)


def instantaneous_phase(a: AnalyticSignal) -> np.ndarray:
    """Unwrapped phase angle of the analytic signal, in radians."""
    return np.unwrap(np.angle(a.values))


def instantaneous_frequency(a: AnalyticSignal) -> np.ndarray:
    """Phase derivative in Hz: central differences inside, one-sided at the
    ends; output length equals input length."""
    theta = instantaneous_phase(a)
    freq = np.empty_like(theta)
    freq[1:-1] = (theta[2:] - theta[:-2]) * a.fs / (4.0 * np.pi)
    freq[0] = (theta[1] - theta[0]) * a.fs / (2.0 * np.pi)
    freq[-1] = (theta[-1] - theta[-2]) * a.fs / (2.0 * np.pi)
    return freq
