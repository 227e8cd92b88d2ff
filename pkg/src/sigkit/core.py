"""Core domain types, synthetic signal generation, and segmentation.

A :class:`Signal` is a uniformly sampled real-valued sequence with a sampling
rate; every transform and filter in the toolkit consumes and produces these.
Tone generation refuses frequencies at or above the Nyquist limit instead of
silently aliasing them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument, SignalParseError


@dataclass(frozen=True)
class Signal:
    """Uniformly sampled real-valued signal.

    Attributes:
        samples: 1-D float array of sample values.
        fs: sampling rate in Hz, > 0.
    """

    samples: np.ndarray
    fs: float

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.size == 0:
            raise InvalidArgument("signal must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(samples)):
            raise InvalidArgument("signal contains non-finite samples")
        if not (self.fs > 0):
            raise InvalidArgument(f"sampling rate must be > 0, got {self.fs}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "fs", float(self.fs))

    def __len__(self):
        return self.samples.size

    @property
    def duration(self) -> float:
        """Signal duration in seconds."""
        return self.samples.size / self.fs

    @property
    def times(self) -> np.ndarray:
        """Sample instants in seconds, starting at 0."""
        return np.arange(self.samples.size) / self.fs


@dataclass(frozen=True)
class ToneSpec:
    """One sinusoidal component: ``A*sin(2*pi*f*t + phase)`` active on the
    half-open sample range ``[start, start+length)``.

    ``length=None`` means "to the end of the target signal".
    """

    amplitude: float
    frequency: float
    phase: float = 0.0
    start: int = 0
    length: int | None = None

    def __post_init__(self):
        if self.frequency < 0:
            raise InvalidArgument("tone frequency must be >= 0")
        if self.start < 0:
            raise InvalidArgument("tone start must be >= 0")
        if self.length is not None and self.length < 0:
            raise InvalidArgument("tone length must be >= 0")


@dataclass(frozen=True)
class SegmentSet:
    """Equal-length windows cut from one source signal."""

    segments: list[Signal]
    overlap: float
    source_fs: float

    @property
    def segment_len(self) -> int:
        return len(self.segments[0]) if self.segments else 0

    @property
    def segment_duration(self) -> float:
        """Duration t_s = N_o / fs of each segment, in seconds."""
        return self.segment_len / self.source_fs

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)


def generate_sinusoid(spec: ToneSpec, fs: float, n: int) -> Signal:
    """Generate one tone on an otherwise zero signal of ``n`` samples.

    Samples inside ``[spec.start, spec.start + spec.length)`` follow
    ``A*sin(2*pi*f*(i/fs) + phase)`` with ``i`` the absolute sample index;
    everything else is zero.  Frequencies at or above fs/2 are rejected
    (aliasing, not generation).
    """
    if n < 1:
        raise InvalidArgument(f"sample count must be >= 1, got {n}")
    if fs <= 0:
        raise InvalidArgument(f"sampling rate must be > 0, got {fs}")
    if spec.frequency >= fs / 2:
        raise InvalidArgument(
            f"tone at {spec.frequency} Hz is not representable below the "
            f"Nyquist limit {fs / 2} Hz"
        )
    length = n - spec.start if spec.length is None else spec.length
    if spec.start + length > n:
        raise InvalidArgument(
            f"tone span [{spec.start}, {spec.start + length}) exceeds signal "
            f"length {n}"
        )
    samples = np.zeros(n)
    idx = np.arange(spec.start, spec.start + length)
    samples[idx] = spec.amplitude * np.sin(
        2.0 * np.pi * spec.frequency * idx / fs + spec.phase
    )
    return Signal(samples, fs)


def generate_composite(specs: list[ToneSpec], fs: float, n: int) -> Signal:
    """Pointwise sum of per-spec sinusoids; overlapping spans add up."""
    if n < 1:
        raise InvalidArgument(f"sample count must be >= 1, got {n}")
    if fs <= 0:
        raise InvalidArgument(f"sampling rate must be > 0, got {fs}")
    total = np.zeros(n)
    for spec in specs:
        total = total + generate_sinusoid(spec, fs, n).samples
    return Signal(total, fs)


def three_tone_demo(fs: float = 1600.0, n: int = 1536) -> Signal:
    """Composite test signal with a weak mid-signal transient.

    Three sinusoids: 10 at 100 Hz over the first 960 samples, 5 at 400 Hz
    over the next 64, and 20 at 200 Hz over the final 512.  Useful as a
    shared fixture for spectrum, spectrogram, and decomposition checks.
    """
    specs = [
        ToneSpec(10.0, 100.0, start=0, length=960),
        ToneSpec(5.0, 400.0, start=960, length=64),
        ToneSpec(20.0, 200.0, start=1024, length=512),
    ]
    return generate_composite(specs, fs, n)


def segment(signal: Signal, n_o: int, overlap: float = 0.0) -> SegmentSet:
    """Cut ``signal`` into consecutive windows of ``n_o`` samples.

    Hop is ``max(1, floor(n_o*(1-overlap)))``; a trailing window that would
    run past the end is discarded rather than zero-padded, so every segment
    has exactly ``n_o`` samples.
    """
    n = len(signal)
    if not (1 <= n_o <= n):
        raise InvalidArgument(f"segment length {n_o} not in [1, {n}]")
    if not (0.0 <= overlap < 1.0):
        raise InvalidArgument(f"overlap {overlap} not in [0, 1)")
    hop = max(1, int(np.floor(n_o * (1.0 - overlap))))
    segments = [
        Signal(signal.samples[start : start + n_o], signal.fs)
        for start in range(0, n - n_o + 1, hop)
    ]
    return SegmentSet(segments=segments, overlap=overlap, source_fs=signal.fs)


def write_signal_csv(signal: Signal, path) -> None:
    """Write a signal as ``fs=<float>`` on line 1 then one sample per line.

    Floats are written with ``repr`` so a read back round-trips exactly.
    """
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"fs={signal.fs!r}\n")
        for v in signal.samples:
            fh.write(f"{float(v)!r}\n")


def read_signal_csv(path) -> Signal:
    """Read a signal written by :func:`write_signal_csv`."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        if not header.startswith("fs="):
            raise SignalParseError(path, 1, f"expected 'fs=<float>' header, got {header!r}")
        try:
            fs = float(header[3:])
        except ValueError:
            raise SignalParseError(path, 1, f"bad sampling rate {header[3:]!r}") from None
        samples = []
        for line_no, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            try:
                samples.append(float(line))
            except ValueError:
                raise SignalParseError(path, line_no, f"bad sample {line!r}") from None
    if not samples:
        raise SignalParseError(path, 2, "no samples")
    return Signal(np.array(samples), fs)
