"""Smoothing and denoising filters: moving average, Savitzky-Golay, running
median, FIR band-pass, and wavelet thresholding.

All filters preserve length.  MA, SG, and median handle edges with shrinking
symmetric windows — no padding data is invented, and the SG polynomial order
is capped by the shrunk window size near the ends.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Signal
from .errors import InvalidArgument
from . import wavelet as _wavelet


@dataclass(frozen=True)
class FilterSpec:
    """Serializable description of one filtering step.

    kind: moving_average | savitzky_golay | median | bandpass |
    wavelet_threshold.  Only the fields relevant to the kind are used.
    """

    kind: str
    window: int | None = None
    poly_order: int | None = None
    band: tuple[float, float] | None = None
    wavelet: str | None = None
    level: int | None = None
    mode: str = "soft"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "window": self.window,
            "poly_order": self.poly_order,
            "band": list(self.band) if self.band else None,
            "wavelet": self.wavelet,
            "level": self.level,
            "mode": self.mode,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FilterSpec":
        band = d.get("band")
        return cls(
            kind=d["kind"],
            window=d.get("window"),
            poly_order=d.get("poly_order"),
            band=tuple(band) if band else None,
            wavelet=d.get("wavelet"),
            level=d.get("level"),
            mode=d.get("mode", "soft"),
        )


def apply_filter(x: Signal, spec: FilterSpec) -> Signal:
    """Dispatch a :class:`FilterSpec` onto the matching filter function."""
    if spec.kind == "moving_average":
        return moving_average(x, spec.window)
    if spec.kind == "savitzky_golay":
        return savitzky_golay(x, spec.window, spec.poly_order)
    if spec.kind == "median":
        return median_filter(x, spec.window)
    if spec.kind == "bandpass":
        return bandpass(x, spec.band[0], spec.band[1])
    if spec.kind == "wavelet_threshold":
        return wavelet_denoise(x, spec.wavelet, spec.level, spec.mode)
    raise InvalidArgument(f"unknown filter kind {spec.kind!r}")


def _check_window(window: int, n: int) -> int:
    if window is None or window < 3 or window % 2 == 0:
        raise InvalidArgument(f"window must be odd and >= 3, got {window}")
    if window > n:
        raise InvalidArgument(f"window {window} exceeds signal length {n}")
    return (window - 1) // 2


def moving_average(x: Signal, window: int) -> Signal:
    """Centered running mean; edge windows shrink symmetrically."""
    s = x.samples
    n = s.size
    half = _check_window(window, n)
    kernel = np.full(window, 1.0 / window)
    out = np.convolve(s, kernel, mode="same")
    for i in range(min(half, n)):
        r = min(i, n - 1 - i)
        out[i] = np.mean(s[i - r : i + r + 1])
        out[n - 1 - i] = np.mean(s[n - 1 - i - r : n - i + r])
    return Signal(out, x.fs)


def _sg_kernel(radius: int, order: int) -> np.ndarray:
    """Least-squares center-evaluation weights over offsets -radius..radius."""
    offsets = np.arange(-radius, radius + 1, dtype=float)
    a = np.vander(offsets, order + 1, increasing=True)
    # row of the projection matrix evaluating the fit at offset 0
    ata_inv = np.linalg.inv(a.T @ a)
    return ata_inv[0] @ a.T


def savitzky_golay(x: Signal, window: int, poly_order: int) -> Signal:
    """Local polynomial least-squares smoothing evaluated at window centers.

    Interior samples use the closed-form convolution kernel; near the edges
    the window shrinks symmetrically and the effective order is capped at
    the shrunk window length minus one.
    """
    s = x.samples
    n = s.size
    half = _check_window(window, n)
    if poly_order is None or poly_order < 0:
        raise InvalidArgument(f"poly_order must be >= 0, got {poly_order}")
    if poly_order >= window:
        raise InvalidArgument(
            f"poly_order {poly_order} must be < window {window}"
        )
    out = np.convolve(s, _sg_kernel(half, poly_order)[::-1], mode="same")
    for i in range(min(half, n)):
        for j in (i, n - 1 - i):
            r = min(j, n - 1 - j)
            eff_order = min(poly_order, 2 * r)
            if r == 0:
                out[j] = s[j]
            else:
                k = _sg_kernel(r, eff_order)
                out[j] = k @ s[j - r : j + r + 1]
    return Signal(out, x.fs)


def median_filter(x: Signal, window: int) -> Signal:
    """Centered running median with shrinking symmetric edge windows."""
    s = x.samples
    n = s.size
    half = _check_window(window, n)
    out = np.empty(n)
    for i in range(n):
        r = min(half, i, n - 1 - i)
        out[i] = np.median(s[i - r : i + r + 1])
    return Signal(out, x.fs)


def design_bandpass_fir(
    low: float, high: float, fs: float, n: int
) -> np.ndarray:
    """Linear-phase windowed-sinc band-pass taps (symmetric Hamming window).

    Tap count is 4*fs/low rounded up to odd, capped at n/2 so short signals
    still leave room for the filter transient.
    """
    taps = int(np.ceil(4.0 * fs / low))
    taps = min(taps, max(3, n // 2))
    if taps % 2 == 0:
        taps += 1 if taps < n // 2 else -1
    m = np.arange(taps)
    center = (taps - 1) / 2.0
    # symmetric Hamming (filter-design variant)
    win = 0.54 - 0.46 * np.cos(2.0 * np.pi * m / (taps - 1))
    t = m - center
    h = (
        2.0 * high / fs * np.sinc(2.0 * high * t / fs)
        - 2.0 * low / fs * np.sinc(2.0 * low * t / fs)
    )
    return h * win


def bandpass(x: Signal, low: float, high: float) -> Signal:
    """FIR band-pass with group-delay compensation; output aligns with input."""
    if not (0.0 < low < high < x.fs / 2.0):
        raise InvalidArgument(
            f"band ({low}, {high}) must satisfy 0 < low < high < fs/2 = {x.fs / 2}"
        )
    h = design_bandpass_fir(low, high, x.fs, len(x))
    delay = (h.size - 1) // 2
    full = np.convolve(x.samples, h)
    return Signal(full[delay : delay + len(x)], x.fs)


def universal_threshold(detail_1: np.ndarray, n: int) -> float:
    """sigma*sqrt(2*ln n) with sigma from the finest detail coefficients
    via the median absolute deviation."""
    sigma = np.median(np.abs(detail_1)) / 0.6745
    return float(sigma * np.sqrt(2.0 * np.log(n)))


def wavelet_denoise(
    x: Signal, wavelet: str = "db4", level: int = 4, mode: str = "soft"
) -> Signal:
    """Threshold detail coefficients at every level, then reconstruct.

    Soft mode shrinks coefficients toward zero by the threshold (the
    pipeline default; hard thresholding can leave discontinuities).
    """
    if mode not in ("soft", "hard"):
        raise InvalidArgument(f"mode must be 'soft' or 'hard', got {mode!r}")
    tree = _wavelet.dwt(x, wavelet, level)
    thr = universal_threshold(tree.detail[0], len(x))
    if mode == "soft":
        new_detail = [
            np.sign(d) * np.maximum(np.abs(d) - thr, 0.0) for d in tree.detail
        ]
    else:
        new_detail = [np.where(np.abs(d) > thr, d, 0.0) for d in tree.detail]
    cleaned = _wavelet.DwtTree(
        detail=new_detail,
        approx=tree.approx,
        wavelet=tree.wavelet,
        levels=tree.levels,
        original_len=tree.original_len,
        fs=tree.fs,
    )
    return _wavelet.idwt(cleaned)
