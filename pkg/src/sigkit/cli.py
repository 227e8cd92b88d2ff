"""Command-line interface.

Two subcommands: ``transform`` runs one analysis method on a signal CSV and
writes its natural serialization (spectra and PSDs as freq/value CSV,
time-frequency maps as time/freq/value CSV, coefficient trees as JSON);
``pipeline`` runs a full feature-extraction pipeline over a dataset
directory.  Input problems exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import emd as emd_mod
from . import hilbert as hilbert_mod
from . import io as io_mod
from . import pipeline as pipeline_mod
from . import spectral
from . import wavelet as wavelet_mod
from . import wvd as wvd_mod
from .core import read_signal_csv
from .errors import InvalidArgument
from .preprocess import FilterSpec, apply_filter

TRANSFORM_METHODS = (
    "fft",
    "stft",
    "psd-periodogram",
    "psd-welch",
    "hilbert",
    "dwt",
    "swt",
    "wpt",
    "cwt",
    "emd",
    "hht",
    "wvd",
    "pwvd",
)


def _parse_scales(text: str) -> np.ndarray:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return np.arange(float(lo), float(hi) + 1.0)
    return np.array([float(v) for v in text.split(",")])


def _parse_band(text: str):
    if text == "none":
        return None
    lo, hi = text.split(":", 1)
    return float(lo), float(hi)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigkit")
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("transform", help="run one transform on a signal CSV")
    tr.add_argument("--method", required=True, choices=TRANSFORM_METHODS)
    tr.add_argument("--input", required=True)
    tr.add_argument("--output", required=True)
    tr.add_argument("--filter", help="JSON FilterSpec applied before the transform")
    tr.add_argument("--nfft", type=int)
    tr.add_argument("--window", default="hann")
    tr.add_argument("--seg-len", type=int, default=256)
    tr.add_argument("--overlap", type=float, default=0.5)
    tr.add_argument("--wavelet", default="db4")
    tr.add_argument("--levels", type=int, default=3)
    tr.add_argument("--scales", default="1:64")
    tr.add_argument("--mother", default="morlet", choices=("morlet", "ricker"))
    tr.add_argument("--sd-threshold", type=float, default=0.2)
    tr.add_argument("--max-imfs", type=int, default=12)
    tr.add_argument("--lag-window", default="hamming", choices=("hamming", "hann"))
    tr.add_argument("--lag-window-len", type=int)

    pl = sub.add_parser("pipeline", help="run a dataset feature pipeline")
    pl_sub = pl.add_subparsers(dest="task", required=True)

    vb = pl_sub.add_parser("vbcm", help="vibration condition-monitoring features")
    vb.add_argument("--input", required=True)
    vb.add_argument("--output", required=True)
    vb.add_argument("--workers", type=int, default=1)

    eeg = pl_sub.add_parser("eeg", help="EEG epilepsy-detection features")
    eeg.add_argument("--method", required=True, choices=("psd", "wpt"))
    eeg.add_argument("--input", required=True)
    eeg.add_argument("--output", required=True)
    eeg.add_argument("--wavelet", default="db6")
    eeg.add_argument("--level", type=int, default=3)
    eeg.add_argument("--band", default="0.5:30")
    eeg.add_argument("--workers", type=int, default=1)
    return parser


def _run_transform(args) -> None:
    sig = read_signal_csv(args.input)
    if args.filter:
        sig = apply_filter(sig, FilterSpec.from_dict(json.loads(args.filter)))
    method = args.method
    if method == "fft":
        io_mod.write_spectrum_csv(spectral.amplitude_spectrum(sig, args.nfft), args.output)
    elif method == "stft":
        tf = spectral.stft(sig, args.window, args.seg_len, args.overlap, args.nfft)
        io_mod.write_tfmap_csv(tf, args.output)
    elif method == "psd-periodogram":
        io_mod.write_spectrum_csv(spectral.periodogram(sig, args.nfft), args.output)
    elif method == "psd-welch":
        psd = spectral.welch(sig, args.window, args.seg_len, args.overlap, args.nfft)
        io_mod.write_spectrum_csv(psd, args.output)
    elif method == "hilbert":
        a = hilbert_mod.analytic_signal(sig)
        io_mod.write_hilbert_csv(
            sig.times,
            hilbert_mod.envelope(a),
            hilbert_mod.instantaneous_phase(a),
            hilbert_mod.instantaneous_frequency(a),
            args.output,
        )
    elif method == "dwt":
        io_mod.write_tree_json(wavelet_mod.dwt(sig, args.wavelet, args.levels), args.output)
    elif method == "swt":
        modes = wavelet_mod.swt(sig, args.wavelet, args.levels)
        io_mod.write_modes_csv(modes, args.output)
    elif method == "wpt":
        io_mod.write_tree_json(wavelet_mod.wpt(sig, args.wavelet, args.levels), args.output)
    elif method == "cwt":
        tf = wavelet_mod.cwt(sig, args.mother, _parse_scales(args.scales))
        io_mod.write_tfmap_csv(tf, args.output)
    elif method == "emd":
        result = emd_mod.emd(sig, emd_mod.SiftConfig(
            max_imfs=args.max_imfs, sd_threshold=args.sd_threshold))
        io_mod.write_imfs_csv(result, args.output)
    elif method == "hht":
        tf = emd_mod.hht(sig, emd_mod.SiftConfig(
            max_imfs=args.max_imfs, sd_threshold=args.sd_threshold))
        io_mod.write_tfmap_csv(tf, args.output)
    elif method in ("wvd", "pwvd"):
        if method == "wvd":
            tf = wvd_mod.wvd(sig)
        else:
            tf = wvd_mod.pwvd(sig, wvd_mod.WvdConfig(
                smoothing_window=args.lag_window,
                smoothing_window_len=args.lag_window_len))
        io_mod.write_tfmap_csv(tf, args.output)


def _run_pipeline(args) -> None:
    if args.task == "vbcm":
        config = pipeline_mod.vbcm_config(args.input, args.output, workers=args.workers)
        rows = pipeline_mod.run_vbcm(config)
    else:
        config = pipeline_mod.eeg_config(
            args.input,
            args.output,
            band=_parse_band(args.band),
            wavelet=args.wavelet,
            wpt_level=args.level,
            workers=args.workers,
        )
        rows = pipeline_mod.run_eeg(config, method=args.method)
    print(f"wrote {len(rows)} feature rows to {args.output}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "transform":
            _run_transform(args)
        else:
            _run_pipeline(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
