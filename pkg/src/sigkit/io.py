"""CSV/JSON serialization for spectra, maps, decompositions, and feature
tables.

Floats are written with ``repr`` (shortest round-trip form), which makes
output files byte-identical across reruns of the same computation.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import SignalParseError
from .features import FeatureVector
from .spectral import AmplitudeSpectrum, PsdEstimate, TimeFrequencyMap


def _fmt(v) -> str:
    return repr(float(v))


def write_spectrum_csv(spec, path) -> None:
    """(freq, value) rows for an amplitude spectrum or PSD estimate."""
    if isinstance(spec, AmplitudeSpectrum):
        header, values = "freq_hz,amplitude", spec.amplitudes
    elif isinstance(spec, PsdEstimate):
        header, values = "freq_hz,density", spec.density
    else:
        raise TypeError(f"cannot serialize {type(spec).__name__}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(header + "\n")
        for f, v in zip(spec.freqs, values):
            fh.write(f"{_fmt(f)},{_fmt(v)}\n")


def write_tfmap_csv(tf: TimeFrequencyMap, path) -> None:
    """(time, freq, value) triplets in row-major (time-outer) order."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write("time_s,freq,value\n")
        for j, t in enumerate(tf.times):
            for i, f in enumerate(tf.freqs):
                fh.write(f"{_fmt(t)},{_fmt(f)},{_fmt(tf.values[i, j])}\n")


def write_hilbert_csv(times, env, phase, freq, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write("time_s,envelope,phase_rad,frequency_hz\n")
        for row in zip(times, env, phase, freq):
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_imfs_csv(imf_set, path) -> None:
    """One column per IMF plus the residual."""
    columns = [imf.samples for imf in imf_set.imfs] + [imf_set.residual.samples]
    names = [f"imf_{i + 1}" for i in range(len(imf_set.imfs))] + ["residual"]
    with open(path, "w", encoding="ascii") as fh:
        fh.write(",".join(names) + "\n")
        for row in zip(*columns):
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_modes_csv(decomposition, path) -> None:
    """One column per elementary mode of a DecompositionSet."""
    columns = [m.samples for m in decomposition.modes]
    names = [f"mode_{i}" for i in range(len(columns))]
    if decomposition.residual is not None:
        columns.append(decomposition.residual.samples)
        names.append("residual")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(",".join(names) + "\n")
        for row in zip(*columns):
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_tree_json(tree, path) -> None:
    """DWT/WPT coefficient tree as JSON (wavelet, levels, arrays)."""
    payload = {
        "wavelet": tree.wavelet,
        "levels": tree.levels,
        "original_len": tree.original_len,
        "fs": tree.fs,
    }
    if hasattr(tree, "leaves"):
        payload["leaves"] = [leaf.tolist() for leaf in tree.leaves]
    else:
        payload["detail"] = [d.tolist() for d in tree.detail]
        payload["approx"] = tree.approx.tolist()
    with open(path, "w", encoding="ascii") as fh:
        json.dump(payload, fh)
        fh.write("\n")


def write_feature_csv(rows: list[FeatureVector], path) -> None:
    """Feature table: header of names + label, one row per segment."""
    if not rows:
        raise ValueError("no feature rows to write")
    names = rows[0].names
    with open(path, "w", encoding="ascii") as fh:
        fh.write(",".join(names) + ",label\n")
        for row in rows:
            if row.names != names:
                raise ValueError("inconsistent feature names across rows")
            fh.write(
                ",".join(_fmt(v) for v in row.values)
                + f",{row.label if row.label is not None else ''}\n"
            )


def read_feature_csv(path) -> tuple[list[str], np.ndarray, list[str]]:
    """Read a feature table back as (names, values matrix, labels)."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip().split(",")
        if header[-1] != "label":
            raise SignalParseError(path, 1, "feature CSV must end with a label column")
        names = header[:-1]
        values, labels = [], []
        for line_no, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(header):
                raise SignalParseError(
                    path, line_no, f"expected {len(header)} columns, got {len(parts)}"
                )
            try:
                values.append([float(p) for p in parts[:-1]])
            except ValueError:
                raise SignalParseError(path, line_no, "non-numeric feature value") from None
            labels.append(parts[-1])
    return names, np.array(values), labels
