"""Wavelet machinery: CWT scalograms, DWT/SWT/WPT filter banks, elementary
mode reconstruction, and per-mode energies.

Filter tables for haar and db2..db8 are hard-coded from the standard
orthonormal Daubechies coefficients; the orthonormality and quadrature
relations are asserted by the test suite rather than recomputed at runtime.

Border handling: DWT/WPT use half-sample symmetric extension, which keeps
coefficient lengths at floor((len + filter_len - 1)/2) per level and still
reconstructs exactly (the retained coefficients are precisely the basis
shifts whose support touches the original window).  SWT uses periodic
(circular) filtering, the price of exact shift covariance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Signal
from .errors import InvalidArgument, UnknownWavelet
from .spectral import TimeFrequencyMap

# Orthonormal scaling filters (decomposition low-pass), ascending index.
# Sum = sqrt(2), energy = 1, even-shift orthogonality to machine precision.
_DEC_LO = {
    "haar": (
        0.7071067811865475244,
        0.7071067811865475244,
    ),
    "db2": (
        -0.12940952255126038117,
        0.22414386804201338103,
        0.83651630373780790558,
        0.48296291314453414337,
    ),
    "db3": (
        0.035226291885709536603,
        -0.085441273882026661693,
        -0.13501102001025458870,
        0.45987750211849157010,
        0.80689150931109257649,
        0.33267055295008261600,
    ),
    "db4": (
        -0.010597401785069032105,
        0.032883011666885199735,
        0.030841381835560763627,
        -0.18703481171909308408,
        -0.027983769416859854211,
        0.63088076792985890788,
        0.71484657055291564709,
        0.23037781330889650086,
    ),
    "db5": (
        0.0033357252854737712780,
        -0.012580751999081999469,
        -0.0062414902127982742742,
        0.077571493840045713523,
        -0.032244869584638374648,
        -0.24229488706638203186,
        0.13842814590132073151,
        0.72430852843777292773,
        0.60382926979718967054,
        0.16010239797419291448,
    ),
    "db6": (
        -0.0010773010853084795649,
        0.0047772575109455106396,
        0.00055384220116149613925,
        -0.031582039317486029565,
        0.027522865530305728626,
        0.097501605587323049102,
        -0.12976686756726193556,
        -0.22626469396543982008,
        0.31525035170919762909,
        0.75113390802109535068,
        0.49462389039845308568,
        0.11154074335010946362,
    ),
    "db7": (
        0.00035371379997452024845,
        -0.0018016407040474909153,
        0.00042957797292136652113,
        0.012550998556099840613,
        -0.016574541630666880654,
        -0.038029936935014413580,
        0.080612609151083071913,
        0.071309219266830264751,
        -0.22403618499387498264,
        -0.14390600392856497541,
        0.46978228740519312247,
        0.72913209084623511992,
        0.39653931948191730654,
        0.077852054085009179020,
    ),
    "db8": (
        -0.00011747678412476953373,
        0.00067544940645056936637,
        -0.00039174037337694704630,
        -0.0048703529934515743104,
        0.0087460940474057767164,
        0.013981027917398281649,
        -0.044088253930794751507,
        -0.017369301001807546170,
        0.12874742662047845886,
        0.00047248457391328277036,
        -0.28401554296154692652,
        -0.015829105256349305667,
        0.58535468365420671277,
        0.67563073629728980681,
        0.31287159091429997066,
        0.054415842243104009955,
    ),
}

WAVELET_NAMES = tuple(_DEC_LO)


@dataclass(frozen=True)
class WaveletBank:
    """Decomposition/reconstruction filter quadruple of one wavelet."""

    name: str
    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray

    @property
    def length(self) -> int:
        return self.dec_lo.size


def wavelet_bank(name: str) -> WaveletBank:
    """Look up the filter bank for ``name`` (haar, db2..db8)."""
    try:
        dec_lo = np.array(_DEC_LO[name])
    except KeyError:
        raise UnknownWavelet(
            f"unknown wavelet {name!r}; available: {', '.join(WAVELET_NAMES)}"
        ) from None
    length = dec_lo.size
    # quadrature mirror: dec_hi[k] = (-1)^(k+1) * dec_lo[L-1-k]
    signs = np.where(np.arange(length) % 2 == 0, -1.0, 1.0)
    dec_hi = signs * dec_lo[::-1]
    return WaveletBank(
        name=name,
        dec_lo=dec_lo,
        dec_hi=dec_hi,
        rec_lo=dec_lo[::-1].copy(),
        rec_hi=dec_hi[::-1].copy(),
    )


def max_dwt_level(n: int) -> int:
    """Deepest decomposition for an n-sample signal: floor(log2(n))."""
    if n < 1:
        raise InvalidArgument("signal length must be >= 1")
    return int(np.floor(np.log2(n)))


# ---------------------------------------------------------------------------
# single-level steps (symmetric extension)
# ---------------------------------------------------------------------------


def _dwt_step(x: np.ndarray, bank: WaveletBank) -> tuple[np.ndarray, np.ndarray]:
    """One analysis step: symmetric-extend, correlate, keep odd phases.

    Output lengths are floor((len(x) + L - 1)/2) for both branches.
    """
    L = bank.length
    xe = np.pad(x, L - 1, mode="symmetric")
    lo = np.correlate(xe, bank.dec_lo, mode="valid")[1::2]
    hi = np.correlate(xe, bank.dec_hi, mode="valid")[1::2]
    return lo, hi


def _idwt_step(
    lo: np.ndarray, hi: np.ndarray, bank: WaveletBank, target_len: int
) -> np.ndarray:
    """Adjoint of :func:`_dwt_step`: upsample, filter, crop to target_len."""
    L = bank.length
    n_c = lo.size
    up = np.zeros(2 * n_c + 1)
    up[1::2] = lo
    out = np.convolve(up, bank.dec_lo)
    up[1::2] = hi
    out = out + np.convolve(up, bank.dec_hi)
    return out[L - 1 : L - 1 + target_len]


def _level_lengths(n: int, L: int, levels: int) -> list[int]:
    """Input length at each analysis level, [n, len_1, ..., len_{levels-1}]."""
    lengths = [n]
    for _ in range(levels - 1):
        lengths.append((lengths[-1] + L - 1) // 2)
    return lengths


# ---------------------------------------------------------------------------
# DWT
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DwtTree:
    """Detail coefficient sets cD1..cDj plus the final approximation cAj."""

    detail: list[np.ndarray]
    approx: np.ndarray
    wavelet: str
    levels: int
    original_len: int
    fs: float


@dataclass(frozen=True)
class WptTree:
    """Full packet tree leaves in natural (filter-bank) order."""

    leaves: list[np.ndarray]
    wavelet: str
    levels: int
    original_len: int
    fs: float


@dataclass(frozen=True)
class DecompositionSet:
    """Full-length elementary modes that sum back to the source signal."""

    modes: list[Signal]
    residual: Signal | None
    kind: str

    def __len__(self):
        return len(self.modes)


def _check_levels(n: int, levels: int) -> None:
    if levels < 1:
        raise InvalidArgument(f"levels must be >= 1, got {levels}")
    limit = max_dwt_level(n)
    if levels > limit:
        raise InvalidArgument(
            f"{levels} levels exceed the maximum {limit} for {n} samples"
        )


def dwt(x: Signal, wavelet: str, levels: int) -> DwtTree:
    """Multi-level DWT iterating on the approximation branch only."""
    bank = wavelet_bank(wavelet)
    _check_levels(len(x), levels)
    detail = []
    approx = x.samples
    for _ in range(levels):
        approx, hi = _dwt_step(approx, bank)
        detail.append(hi)
    return DwtTree(
        detail=detail,
        approx=approx,
        wavelet=wavelet,
        levels=levels,
        original_len=len(x),
        fs=x.fs,
    )


def idwt(tree: DwtTree) -> Signal:
    """Invert :func:`dwt`; reconstruction is exact to float round-off."""
    bank = wavelet_bank(tree.wavelet)
    lengths = _level_lengths(tree.original_len, bank.length, tree.levels)
    approx = tree.approx
    for level in range(tree.levels - 1, -1, -1):
        approx = _idwt_step(approx, tree.detail[level], bank, lengths[level])
    return Signal(approx, tree.fs)


def dwt_modes(x: Signal, wavelet: str, levels: int) -> DecompositionSet:
    """Elementary modes: each coefficient set reconstructed on its own.

    Ordered cD1..cDj then cAj; the modes sum back to the input signal.
    """
    tree = dwt(x, wavelet, levels)
    zeros_detail = [np.zeros_like(d) for d in tree.detail]
    zero_approx = np.zeros_like(tree.approx)
    modes = []
    for i in range(tree.levels):
        only = list(zeros_detail)
        only[i] = tree.detail[i]
        part = DwtTree(
            detail=only,
            approx=zero_approx,
            wavelet=wavelet,
            levels=tree.levels,
            original_len=tree.original_len,
            fs=tree.fs,
        )
        modes.append(idwt(part))
    approx_part = DwtTree(
        detail=zeros_detail,
        approx=tree.approx,
        wavelet=wavelet,
        levels=tree.levels,
        original_len=tree.original_len,
        fs=tree.fs,
    )
    modes.append(idwt(approx_part))
    return DecompositionSet(modes=modes, residual=None, kind="dwt_modes")


# ---------------------------------------------------------------------------
# WPT
# ---------------------------------------------------------------------------


def wpt(x: Signal, wavelet: str, levels: int) -> WptTree:
    """Full packet decomposition: both branches split at every level.

    Leaves are in natural filter order (low branch first, recursively).
    """
    bank = wavelet_bank(wavelet)
    _check_levels(len(x), levels)
    nodes = [x.samples]
    for _ in range(levels):
        nxt = []
        for node in nodes:
            lo, hi = _dwt_step(node, bank)
            nxt.extend((lo, hi))
        nodes = nxt
    return WptTree(
        leaves=nodes,
        wavelet=wavelet,
        levels=levels,
        original_len=len(x),
        fs=x.fs,
    )


def _wpt_reconstruct_leaf(
    leaf: np.ndarray, index: int, tree: WptTree, bank: WaveletBank
) -> np.ndarray:
    """Climb from one leaf back to full length, zeroing the sibling branch."""
    lengths = _level_lengths(tree.original_len, bank.length, tree.levels)
    data = leaf
    for depth in range(tree.levels - 1, -1, -1):
        zero = np.zeros_like(data)
        if index % 2 == 0:
            data = _idwt_step(data, zero, bank, lengths[depth])
        else:
            data = _idwt_step(zero, data, bank, lengths[depth])
        index //= 2
    return data


def wpt_modes(x: Signal, wavelet: str, levels: int) -> DecompositionSet:
    """Per-leaf elementary modes of the full packet tree; they sum to x."""
    tree = wpt(x, wavelet, levels)
    bank = wavelet_bank(wavelet)
    modes = [
        Signal(_wpt_reconstruct_leaf(leaf, i, tree, bank), x.fs)
        for i, leaf in enumerate(tree.leaves)
    ]
    return DecompositionSet(modes=modes, residual=None, kind="wpt_modes")


# ---------------------------------------------------------------------------
# SWT (periodic, undecimated)
# ---------------------------------------------------------------------------


def _circ_correlate(x: np.ndarray, taps: np.ndarray, stride: int) -> np.ndarray:
    """sum_m taps[m] * x[(t + m*stride) mod N]; plain rolls keep shift
    covariance bit-exact."""
    out = np.zeros_like(x)
    for m, c in enumerate(taps):
        out += c * np.roll(x, -m * stride)
    return out


def _circ_adjoint(x: np.ndarray, taps: np.ndarray, stride: int) -> np.ndarray:
    """Adjoint of :func:`_circ_correlate`."""
    out = np.zeros_like(x)
    for m, c in enumerate(taps):
        out += c * np.roll(x, m * stride)
    return out


def swt_coeffs(
    x: Signal, wavelet: str, levels: int
) -> tuple[list[np.ndarray], np.ndarray]:
    """Undecimated coefficients: per-level details plus final approximation.

    Filters are upsampled by zero insertion at each level (realized here as
    strided circular taps); every sequence keeps the input length.  The
    1/sqrt(2) tap scaling makes analysis followed by its adjoint the
    identity, which the mode construction in :func:`swt` relies on.
    """
    bank = wavelet_bank(wavelet)
    if levels < 1:
        raise InvalidArgument(f"levels must be >= 1, got {levels}")
    n = len(x)
    if n % (1 << levels) != 0:
        raise InvalidArgument(
            f"signal length {n} not divisible by 2^{levels}"
        )
    g = bank.dec_lo / np.sqrt(2.0)
    h = bank.dec_hi / np.sqrt(2.0)
    details = []
    approx = x.samples.astype(float)
    for level in range(levels):
        stride = 1 << level
        details.append(_circ_correlate(approx, h, stride))
        approx = _circ_correlate(approx, g, stride)
    return details, approx


def swt(x: Signal, wavelet: str, levels: int) -> DecompositionSet:
    """Undecimated decomposition returned as additive elementary modes."""
    details, approx = swt_coeffs(x, wavelet, levels)
    bank = wavelet_bank(wavelet)
    g = bank.dec_lo / np.sqrt(2.0)
    h = bank.dec_hi / np.sqrt(2.0)

    def climb(data, top_level, top_taps):
        data = _circ_adjoint(data, top_taps, 1 << top_level)
        for level in range(top_level - 1, -1, -1):
            data = _circ_adjoint(data, g, 1 << level)
        return data

    modes = [
        Signal(climb(details[j], j, h), x.fs) for j in range(levels)
    ]
    modes.append(Signal(climb(approx, levels - 1, g), x.fs))
    return DecompositionSet(modes=modes, residual=None, kind="swt_modes")


# ---------------------------------------------------------------------------
# CWT
# ---------------------------------------------------------------------------


def _morlet(t: np.ndarray) -> np.ndarray:
    # center frequency 6 rad/s
    return np.pi**-0.25 * np.exp(1j * 6.0 * t) * np.exp(-0.5 * t * t)


def _ricker(t: np.ndarray) -> np.ndarray:
    return 2.0 / (np.sqrt(3.0) * np.pi**0.25) * (1.0 - t * t) * np.exp(-0.5 * t * t)


_MOTHERS = {"morlet": _morlet, "ricker": _ricker}

# peak angular frequency of each mother at unit scale
_CENTER_OMEGA = {"morlet": 6.0, "ricker": np.sqrt(2.0)}


def scale_to_frequency(mother: str, scales, fs: float) -> np.ndarray:
    """Center frequency in Hz represented by each scale."""
    if mother not in _CENTER_OMEGA:
        raise InvalidArgument(f"unknown mother wavelet {mother!r}")
    scales = np.asarray(scales, dtype=float)
    return _CENTER_OMEGA[mother] * fs / (2.0 * np.pi * scales)


def cwt(x: Signal, mother: str = "morlet", scales=None) -> TimeFrequencyMap:
    """Scalogram: per-scale correlation magnitudes against the scaled mother.

    Each row convolves the signal with the 1/sqrt(scale)-normalized,
    time-reversed, conjugated wavelet sampled over +-5 scale units.
    """
    if mother not in _MOTHERS:
        raise InvalidArgument(f"unknown mother wavelet {mother!r}")
    if scales is None:
        scales = np.arange(1.0, 65.0)
    scales = np.asarray(scales, dtype=float)
    if np.any(scales <= 0):
        raise InvalidArgument("scales must be > 0")
    psi = _MOTHERS[mother]
    n = len(x)
    rows = np.empty((scales.size, n))
    for i, a in enumerate(scales):
        half = max(1, int(np.ceil(5.0 * a)))
        u = np.arange(-half, half + 1)
        kernel = np.conj(psi(u / a))[::-1] / np.sqrt(a)
        # centered slice of the full convolution; np.convolve(..., "same")
        # would return kernel-length output once the kernel outgrows x
        full = np.convolve(x.samples, kernel)
        rows[i] = np.abs(full[half : half + n])
    return TimeFrequencyMap(
        times=x.times, freqs=scales, values=rows, kind="scalogram"
    )


def mode_energy(d: DecompositionSet) -> np.ndarray:
    """Energy sum |M_i[l]|^2 of every mode, in mode order."""
    return np.array([float(np.sum(m.samples**2)) for m in d.modes])
