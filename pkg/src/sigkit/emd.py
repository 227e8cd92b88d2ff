"""Empirical mode decomposition (sifting) and Hilbert spectral analysis.

Sifting repeatedly subtracts the mean of the upper/lower extrema envelopes
until the normalized squared change between passes drops below a Cauchy-type
threshold.  Envelopes are natural cubic splines through the extrema, with
the two extrema nearest each end mirrored outward to tame end effects.
Decomposition is subtractive, so the modes plus residual reproduce the
input to float round-off by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from .core import Signal
from .errors import InsufficientExtrema, InvalidArgument
from .hilbert import analytic_signal, envelope, instantaneous_frequency
from .spectral import TimeFrequencyMap


@dataclass(frozen=True)
class SiftConfig:
    max_imfs: int = 12
    max_sift_iters: int = 100
    sd_threshold: float = 0.2
    residual_energy_ratio: float = 1e-8

    def __post_init__(self):
        if (
            self.max_imfs < 1
            or self.max_sift_iters < 1
            or self.sd_threshold <= 0
            or self.residual_energy_ratio <= 0
        ):
            raise InvalidArgument("all sift parameters must be positive")


@dataclass(frozen=True)
class ImfSet:
    """Intrinsic mode functions, the final residual, and per-mode sift
    iteration counts."""

    imfs: list[Signal]
    residual: Signal
    sift_counts: list[int]

    def __len__(self):
        return len(self.imfs)


def find_extrema(x) -> tuple[np.ndarray, np.ndarray]:
    """Indices of strict local maxima and minima.

    Plateaus count once, at their midpoint.  Endpoints are never extrema.
    """
    x = np.asarray(x, dtype=float)
    if x.size < 3:
        raise InvalidArgument("need at least 3 samples to find extrema")
    steps = np.flatnonzero(np.diff(x) != 0)
    starts = np.concatenate([[0], steps + 1])
    vals = x[starts]
    maxima, minima = [], []
    for r in range(1, starts.size - 1):
        run_end = starts[r + 1] - 1
        mid = (starts[r] + run_end) // 2
        if vals[r] > vals[r - 1] and vals[r] > vals[r + 1]:
            maxima.append(mid)
        elif vals[r] < vals[r - 1] and vals[r] < vals[r + 1]:
            minima.append(mid)
    return np.array(maxima, dtype=int), np.array(minima, dtype=int)


def zero_crossings(x) -> int:
    """Number of sign changes, with exact zeros transparent."""
    s = np.sign(np.asarray(x, dtype=float))
    s = s[s != 0]
    if s.size < 2:
        return 0
    return int(np.sum(s[:-1] != s[1:]))


def spline_envelope(x, knot_indices) -> np.ndarray:
    """Natural cubic spline through (index, x[index]), evaluated at every
    sample position.

    With two knots the natural spline degenerates to the straight line
    between them.  Mirrored boundary knots (used by sifting) go through
    :func:`spline_envelope_pairs`, which takes explicit pairs.
    """
    x = np.asarray(x, dtype=float)
    knot_indices = np.asarray(knot_indices, dtype=int)
    if knot_indices.size < 2:
        raise InsufficientExtrema(
            f"need >= 2 knots for an envelope, got {knot_indices.size}"
        )
    return spline_envelope_pairs(
        knot_indices.astype(float), x[knot_indices], x.size
    )


def spline_envelope_pairs(positions, values, n: int) -> np.ndarray:
    """Natural cubic spline through explicit (position, value) pairs."""
    positions = np.asarray(positions, dtype=float)
    values = np.asarray(values, dtype=float)
    if positions.size < 2:
        raise InsufficientExtrema(
            f"need >= 2 knots for an envelope, got {positions.size}"
        )
    order = np.argsort(positions)
    positions, values = positions[order], values[order]
    keep = np.concatenate([[True], np.diff(positions) > 0])
    positions, values = positions[keep], values[keep]
    if positions.size < 2:
        raise InsufficientExtrema("fewer than 2 distinct knot positions")
    spline = CubicSpline(positions, values, bc_type="natural")
    return spline(np.arange(n, dtype=float))


def _mirrored_knots(idx: np.ndarray, vals: np.ndarray, n: int):
    """Reflect the two extrema nearest each end across the end samples."""
    positions = [idx.astype(float)]
    values = [vals]
    left = idx[:2]
    positions.append(-left.astype(float))
    values.append(vals[: left.size])
    right = idx[-2:]
    positions.append(2.0 * (n - 1) - right.astype(float))
    values.append(vals[-right.size :])
    return np.concatenate(positions), np.concatenate(values)


def _mean_envelope(h: np.ndarray) -> np.ndarray | None:
    """Half-sum of the upper and lower mirrored-spline envelopes, or None
    when there are not enough extrema to build them."""
    maxima, minima = find_extrema(h)
    if maxima.size < 2 or minima.size < 2:
        return None
    n = h.size
    pos_u, val_u = _mirrored_knots(maxima, h[maxima], n)
    pos_l, val_l = _mirrored_knots(minima, h[minima], n)
    upper = spline_envelope_pairs(pos_u, val_u, n)
    lower = spline_envelope_pairs(pos_l, val_l, n)
    return 0.5 * (upper + lower)


def sift(x, config: SiftConfig = SiftConfig()) -> tuple[np.ndarray, int]:
    """Extract one IMF candidate; returns (imf, iterations used).

    Stops when sum((h_prev - h)^2)/sum(h_prev^2) < sd_threshold or the
    iteration cap is hit.  Raises InsufficientExtrema when the input has
    fewer than two maxima or two minima (the residual has been reached).
    """
    h = np.asarray(x, dtype=float)
    iterations = 0
    while iterations < config.max_sift_iters:
        mean = _mean_envelope(h)
        if mean is None:
            if iterations == 0:
                raise InsufficientExtrema("input has too few extrema to sift")
            break
        denom = float(np.sum(h * h))
        h = h - mean
        iterations += 1
        if denom == 0.0 or float(np.sum(mean * mean)) / denom < config.sd_threshold:
            break
    return h, iterations


def emd(x: Signal, config: SiftConfig = SiftConfig()) -> ImfSet:
    """Full decomposition: sift, subtract, repeat on the residual.

    Stops when the residual has no usable extrema pair (monotonic tail),
    its energy falls below the configured fraction of the input energy, or
    max_imfs is reached.  Degenerate inputs give zero IMFs.
    """
    if len(x) < 8:
        raise InvalidArgument(f"need >= 8 samples, got {len(x)}")
    total_energy = float(np.sum(x.samples**2))
    residual = x.samples.astype(float)
    imfs: list[Signal] = []
    counts: list[int] = []
    while len(imfs) < config.max_imfs:
        if float(np.sum(residual**2)) < config.residual_energy_ratio * total_energy:
            break
        try:
            imf, iters = sift(residual, config)
        except InsufficientExtrema:
            break
        imfs.append(Signal(imf, x.fs))
        counts.append(iters)
        residual = residual - imf
    return ImfSet(imfs=imfs, residual=Signal(residual, x.fs), sift_counts=counts)


def hht(
    x: Signal,
    config: SiftConfig = SiftConfig(),
    freq_bins: int = 128,
    time_bins: int = 256,
    diagnostics: dict | None = None,
) -> TimeFrequencyMap:
    """Hilbert spectrum: per-IMF instantaneous energy binned over time and
    frequency.

    Each IMF contributes its squared instantaneous amplitude at its
    instantaneous frequency.  Estimates outside [0, fs/2) are clipped onto
    the grid edges; the clip count is reported through ``diagnostics``
    under the key "clipped_samples" when a dict is passed.
    """
    if freq_bins < 1 or time_bins < 1:
        raise InvalidArgument("freq_bins and time_bins must be >= 1")
    modes = emd(x, config)
    n = len(x)
    duration = n / x.fs
    nyquist = x.fs / 2.0
    grid = np.zeros((freq_bins, time_bins))
    cols = np.minimum((np.arange(n) / n * time_bins).astype(int), time_bins - 1)
    clipped = 0
    for imf in modes.imfs:
        a = analytic_signal(imf)
        energy = envelope(a) ** 2
        freq = instantaneous_frequency(a)
        clipped += int(np.sum((freq < 0) | (freq >= nyquist)))
        rows = np.clip((freq / nyquist * freq_bins).astype(int), 0, freq_bins - 1)
        np.add.at(grid, (rows, cols), energy)
    if diagnostics is not None:
        diagnostics["clipped_samples"] = clipped
    times = (np.arange(time_bins) + 0.5) * duration / time_bins
    freqs = (np.arange(freq_bins) + 0.5) * nyquist / freq_bins
    return TimeFrequencyMap(
        times=times, freqs=freqs, values=grid, kind="hilbert_spectrum"
    )
