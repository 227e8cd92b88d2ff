"""Time-domain statistics: energy/power, correlation, convolution, entropy.

Variance uses the population (1/N) form.  Correlation sums are truncated to
the overlapping sample range (no zero-padding assumption).  Entropies are in
bits (base-2 logarithm) with the 0*log(0) := 0 convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Signal
from .errors import DegenerateInput, InvalidArgument


@dataclass(frozen=True)
class DescriptiveStats:
    mean: float
    variance: float
    rms: float
    energy: float
    average_power: float


@dataclass(frozen=True)
class CorrelationResult:
    """Correlation values over the symmetric lag range -max_lag..max_lag."""

    lags: np.ndarray
    values: np.ndarray

    def value_at(self, lag: int) -> float:
        return float(self.values[np.searchsorted(self.lags, lag)])

    @property
    def peak_lag(self) -> int:
        return int(self.lags[np.argmax(self.values)])


def descriptive_stats(x: Signal) -> DescriptiveStats:
    """Mean, population variance, RMS, total energy, and average power."""
    s = x.samples
    n = s.size
    mean = float(np.mean(s))
    variance = float(np.mean((s - mean) ** 2))
    energy = float(np.sum(s * s))
    average_power = energy / n
    return DescriptiveStats(
        mean=mean,
        variance=variance,
        rms=float(np.sqrt(average_power)),
        energy=energy,
        average_power=average_power,
    )


def instantaneous_power(x: Signal) -> np.ndarray:
    """Per-sample power ``P[n] = x[n]**2``."""
    return x.samples**2


def autocorrelation(x: Signal, max_lag: int) -> CorrelationResult:
    """``R[k] = sum_n x[n]*x[n-k]`` over the overlapping range, k in -K..K.

    ``R[0]`` equals the signal energy; the result is symmetric in the lag.
    """
    s = x.samples
    n = s.size
    if not (0 <= max_lag < n):
        raise InvalidArgument(f"max_lag {max_lag} not in [0, {n})")
    lags = np.arange(-max_lag, max_lag + 1)
    full = np.correlate(s, s, mode="full")  # index n-1+k holds sum x[m+k]x[m]
    values = full[n - 1 - max_lag : n + max_lag]
    return CorrelationResult(lags=lags, values=values)


def cross_correlation(x: Signal, y: Signal, max_lag: int) -> CorrelationResult:
    """``R_xy[k] = sum_n x[n]*y[n-k]`` over overlapping samples, k in -K..K."""
    if x.fs != y.fs:
        raise InvalidArgument(
            f"sampling rates differ: {x.fs} vs {y.fs}"
        )
    a, b = x.samples, y.samples
    if not (0 <= max_lag < max(a.size, b.size)):
        raise InvalidArgument(f"max_lag {max_lag} out of range")
    lags = np.arange(-max_lag, max_lag + 1)
    # np.correlate(a, b, "full")[b.size - 1 + k] = sum_n a[n + k] * b[n]
    #                                            = sum_m a[m] * b[m - k]
    full = np.correlate(a, b, mode="full")
    center = b.size - 1
    values = np.zeros(lags.size)
    valid = (lags >= -(b.size - 1)) & (lags <= a.size - 1)
    values[valid] = full[center + lags[valid]]
    return CorrelationResult(lags=lags, values=values)


def correlation_coefficient(x: Signal, y: Signal) -> float:
    """Pearson correlation coefficient at zero lag, in [-1, 1]."""
    a, b = x.samples, y.samples
    if a.size != b.size:
        raise InvalidArgument(f"length mismatch: {a.size} vs {b.size}")
    da = a - np.mean(a)
    db = b - np.mean(b)
    denom = np.sqrt(np.sum(da * da) * np.sum(db * db))
    if denom == 0.0:
        raise DegenerateInput("correlation coefficient undefined for a constant signal")
    return float(np.sum(da * db) / denom)


def convolve(x, h) -> np.ndarray:
    """Full linear convolution; output length ``len(x) + len(h) - 1``."""
    x = np.asarray(x, dtype=float)
    h = np.asarray(h, dtype=float)
    if x.size == 0 or h.size == 0:
        raise InvalidArgument("convolution inputs must be nonempty")
    return np.convolve(x, h)


def shannon_entropy(p) -> float:
    """Shannon entropy ``H = -sum p_i log2 p_i`` of a probability vector."""
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise InvalidArgument("probabilities must be nonnegative")
    total = p.sum()
    if abs(total - 1.0) > 1e-9:
        raise InvalidArgument(f"probabilities sum to {total}, not 1")
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def segment_entropy(x: Signal, n_bins: int = 16) -> float:
    """Histogram-estimated Shannon entropy of a signal's amplitude values.

    Amplitudes are binned into ``n_bins`` equal-width bins over [min, max];
    a constant signal occupies a single bin and scores 0 bits.
    """
    if n_bins < 2:
        raise InvalidArgument(f"n_bins must be >= 2, got {n_bins}")
    s = x.samples
    lo, hi = float(np.min(s)), float(np.max(s))
    if lo == hi:
        return 0.0
    counts, _ = np.histogram(s, bins=n_bins, range=(lo, hi))
    return shannon_entropy(counts / s.size)
