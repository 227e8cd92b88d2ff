"""Engineered feature extractors: PSD spectral features and wavelet-packet
mode energies.

The PSD feature vector is [spectral centroid, spectral spread, spectral
entropy, peak power, peak frequency], in that order.  Spectral entropy
treats the normalized density as a probability distribution over bins and
is reported in bits.  Peak-frequency ties break toward the lowest frequency.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Signal
from .errors import DegenerateInput, InvalidArgument
from .spectral import PsdEstimate, welch
from .wavelet import mode_energy, wpt_modes

PSD_FEATURE_NAMES = (
    "spectral_centroid",
    "spectral_spread",
    "spectral_entropy",
    "peak_power",
    "peak_frequency",
)


@dataclass(frozen=True)
class FeatureVector:
    names: tuple[str, ...]
    values: np.ndarray
    label: str | None = None

    def __post_init__(self):
        if len(self.names) != self.values.size:
            raise InvalidArgument(
                f"{len(self.names)} names for {self.values.size} values"
            )
        if not np.all(np.isfinite(self.values)):
            raise InvalidArgument("feature values must be finite")

    def as_dict(self) -> dict:
        return dict(zip(self.names, self.values))


def _total_power(psd: PsdEstimate) -> float:
    total = float(np.sum(psd.density))
    if total <= 0.0:
        raise DegenerateInput("PSD has no power")
    return total


def spectral_centroid(psd: PsdEstimate) -> float:
    """Power-weighted mean frequency (spectral center of gravity), in Hz."""
    return float(np.sum(psd.freqs * psd.density) / _total_power(psd))


def spectral_spread(psd: PsdEstimate) -> float:
    """Power-weighted standard deviation around the centroid, in Hz."""
    centroid = spectral_centroid(psd)
    var = np.sum((psd.freqs - centroid) ** 2 * psd.density) / _total_power(psd)
    return float(np.sqrt(var))


def spectral_entropy(psd: PsdEstimate) -> float:
    """Shannon entropy (bits) of the density normalized to probabilities."""
    p = psd.density / _total_power(psd)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def peak_power_frequency(psd: PsdEstimate) -> tuple[float, float]:
    """(max density value, frequency of that bin); ties pick the lowest bin."""
    idx = int(np.argmax(psd.density))
    return float(psd.density[idx]), float(psd.freqs[idx])


def features_from_psd(psd: PsdEstimate, label: str | None = None) -> FeatureVector:
    """Assemble the five-feature PSD vector from an existing estimate."""
    pp, pf = peak_power_frequency(psd)
    values = np.array(
        [
            spectral_centroid(psd),
            spectral_spread(psd),
            spectral_entropy(psd),
            pp,
            pf,
        ]
    )
    return FeatureVector(names=PSD_FEATURE_NAMES, values=values, label=label)


def psd_features(
    segment: Signal,
    window: str = "hann",
    seg_len: int = 512,
    overlap: float | None = 0.5,
    nfft: int = 1024,
    noverlap: int | None = None,
    label: str | None = None,
) -> FeatureVector:
    """Welch-estimate the segment's PSD and extract the five features."""
    psd = welch(
        segment,
        window=window,
        seg_len=seg_len,
        overlap=overlap,
        nfft=nfft,
        noverlap=noverlap,
    )
    return features_from_psd(psd, label=label)


def wpt_energy_features(
    segment: Signal, wavelet: str = "db4", level: int = 3, label: str | None = None
) -> FeatureVector:
    """Energies of the 2^level reconstructed packet modes, natural order."""
    energies = mode_energy(wpt_modes(segment, wavelet, level))
    names = tuple(f"mode_{i}" for i in range(energies.size))
    return FeatureVector(names=names, values=energies, label=label)
