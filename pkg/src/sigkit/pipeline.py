"""End-to-end feature pipelines: directory of signals in, labeled feature
table out.

Two tasks are supported.  Vibration condition monitoring ingests per-class
signal CSVs (class = subdirectory name), cuts 0.2 s segments, and extracts
PSD features.  EEG epilepsy detection ingests per-set sample-per-line text
files, optionally band-passes them, cuts 500-sample segments, and extracts
either PSD features or wavelet-packet mode energies.

Pipelines are pure functions of (input bytes, config): rows are emitted in
sorted-path then segment-index order and floats are serialized in shortest
round-trip form, so reruns are byte-identical regardless of the worker
count used.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import Signal, read_signal_csv, segment
from .errors import InvalidArgument, MissingClass, SignalParseError
from .features import FeatureVector, psd_features, wpt_energy_features
from .io import write_feature_csv
from .preprocess import bandpass

VBCM_CLASSES = ("healthy", "ir", "ir_or", "or")
VBCM_FS = 64000.0
VBCM_SEGMENT_LEN = 12800

EEG_SETS = {"A": "normal", "B": "normal", "C": "interictal", "D": "interictal", "E": "ictal"}
EEG_FS = 173.61
EEG_SEGMENT_LEN = 500


@dataclass(frozen=True)
class PipelineConfig:
    """Parameters shared by the pipeline runners.

    ``seed`` is reserved for future stochastic steps; current pipelines are
    fully deterministic.
    """

    input_dir: str
    output: str
    n_o: int
    overlap: float = 0.0
    band: tuple[float, float] | None = None
    welch_window: str = "hann"
    welch_seg_len: int = 512
    welch_overlap: float | None = 0.5
    welch_noverlap: int | None = None
    nfft: int = 1024
    wavelet: str = "db6"
    wpt_level: int = 3
    workers: int = 1
    seed: int = 0


def vbcm_config(input_dir, output, workers: int = 1) -> PipelineConfig:
    """Vibration defaults: 12 800-sample segments, Welch Hann 512/50%/1024."""
    return PipelineConfig(
        input_dir=str(input_dir),
        output=str(output),
        n_o=VBCM_SEGMENT_LEN,
        welch_seg_len=512,
        welch_overlap=0.5,
        nfft=1024,
        workers=workers,
    )


def eeg_config(
    input_dir,
    output,
    band: tuple[float, float] | None = (0.5, 30.0),
    wavelet: str = "db6",
    wpt_level: int = 3,
    workers: int = 1,
) -> PipelineConfig:
    """EEG defaults: 500-sample segments, Welch 250-sample windows with a
    166-sample (absolute) overlap, NFFT 1024."""
    n_o = EEG_SEGMENT_LEN
    return PipelineConfig(
        input_dir=str(input_dir),
        output=str(output),
        n_o=n_o,
        band=band,
        welch_seg_len=n_o // 2,
        welch_overlap=None,
        welch_noverlap=n_o // 3,
        nfft=1024,
        wavelet=wavelet,
        wpt_level=wpt_level,
        workers=workers,
    )


def _segment_features_psd(sig: Signal, config: PipelineConfig, label: str):
    segs = segment(sig, config.n_o, config.overlap)
    return [
        psd_features(
            s,
            window=config.welch_window,
            seg_len=config.welch_seg_len,
            overlap=config.welch_overlap,
            noverlap=config.welch_noverlap,
            nfft=config.nfft,
            label=label,
        )
        for s in segs
    ]


def _segment_features_wpt(sig: Signal, config: PipelineConfig, label: str):
    segs = segment(sig, config.n_o, config.overlap)
    return [
        wpt_energy_features(s, wavelet=config.wavelet, level=config.wpt_level, label=label)
        for s in segs
    ]


def _map_files(jobs, worker, n_workers: int):
    """Apply ``worker`` to every job, preserving job order in the output."""
    if n_workers <= 1:
        return [worker(job) for job in jobs]
    with concurrent.futures.ThreadPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(worker, jobs))


def run_vbcm(config: PipelineConfig) -> list[FeatureVector]:
    """Vibration pipeline: per-class CSV tree -> labeled PSD-feature table.

    Expects ``input_dir/<class>/*.csv`` for every class in VBCM_CLASSES with
    fs=64000 headers; raises MissingClass naming any class without files.
    """
    root = Path(config.input_dir)
    jobs = []
    missing = []
    for cls in VBCM_CLASSES:
        files = sorted((root / cls).glob("*.csv")) if (root / cls).is_dir() else []
        if not files:
            missing.append(cls)
        jobs.extend((path, cls) for path in files)
    if missing:
        raise MissingClass(f"no signal files for class(es): {', '.join(missing)}")

    def worker(job):
        path, label = job
        sig = read_signal_csv(path)
        if sig.fs != VBCM_FS:
            raise InvalidArgument(f"{path}: expected fs={VBCM_FS}, got {sig.fs}")
        return _segment_features_psd(sig, config, label)

    rows = [row for batch in _map_files(jobs, worker, config.workers) for row in batch]
    write_feature_csv(rows, config.output)
    return rows


def read_bonn_txt(path, fs: float = EEG_FS) -> Signal:
    """One sample per line, no header; Bonn-set style."""
    samples = []
    with open(path, "r", encoding="ascii") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                samples.append(float(line))
            except ValueError:
                raise SignalParseError(path, line_no, f"bad sample {line!r}") from None
    if not samples:
        raise SignalParseError(path, 1, "no samples")
    return Signal(np.array(samples), fs)


def run_eeg(config: PipelineConfig, method: str = "psd") -> list[FeatureVector]:
    """EEG pipeline: per-set text tree -> labeled feature table.

    Expects ``input_dir/<set>/*.txt`` with set in A..E; sets A,B label as
    normal, C,D as interictal, E as ictal.  ``method`` picks PSD features
    or wavelet-packet energies; ``config.band`` (when set) band-passes each
    signal before segmentation.
    """
    if method not in ("psd", "wpt"):
        raise InvalidArgument(f"method must be 'psd' or 'wpt', got {method!r}")
    root = Path(config.input_dir)
    jobs = []
    for set_name in sorted(EEG_SETS):
        set_dir = root / set_name
        if not set_dir.is_dir():
            continue
        jobs.extend(
            (path, EEG_SETS[set_name]) for path in sorted(set_dir.glob("*.txt"))
        )
    if not jobs:
        raise MissingClass(
            f"no set directories with .txt files under {root} (expected A..E)"
        )
    extract = _segment_features_psd if method == "psd" else _segment_features_wpt

    def worker(job):
        path, label = job
        sig = read_bonn_txt(path)
        if config.band is not None:
            sig = bandpass(sig, config.band[0], config.band[1])
        return extract(sig, config, label)

    rows = [row for batch in _map_files(jobs, worker, config.workers) for row in batch]
    write_feature_csv(rows, config.output)
    return rows
