"""Signal-processing and feature-extraction toolkit.

Submodules:
    core        signal type, tone synthesis, segmentation, signal CSV I/O
    stats       energy/power, correlation, convolution, entropy
    preprocess  smoothing and denoising filters
    spectral    FFT engine, amplitude spectra, STFT, periodogram/Welch PSD
    hilbert     analytic signal, envelope, instantaneous phase/frequency
    wavelet     CWT scalograms, DWT/SWT/WPT banks, modes and energies
    emd         empirical mode decomposition and the Hilbert spectrum
    wvd         Wigner-Ville and pseudo Wigner-Ville distributions
    features    PSD spectral features and wavelet-packet energy features
    pipeline    dataset-to-feature-table runners (vibration, EEG)
"""

from .core import Signal, SegmentSet, ToneSpec, generate_composite, generate_sinusoid, segment

__all__ = [
    "Signal",
    "SegmentSet",
    "ToneSpec",
    "generate_composite",
    "generate_sinusoid",
    "segment",
]

__version__ = "0.1.0"
