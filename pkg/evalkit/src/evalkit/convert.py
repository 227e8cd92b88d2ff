"""Dataset conversion into the feature pipelines' ingestion layouts.

Bearing vibration (Paderborn-style MAT archives) becomes a per-class
signal-CSV tree: ``dest/{healthy,ir,or,ir_or}/*.csv`` with ``fs=64000.0``
headers.  Bonn-style EEG zip archives (or unpacked directories) become a
per-set text tree ``dest/{A..E}/*.txt`` with one sample per line.
"""

from __future__ import annotations

import logging
import zipfile
from pathlib import Path

import numpy as np
from scipy.io import loadmat

logger = logging.getLogger(__name__)

VIBRATION_FS = 64000.0

# bearing-code prefixes -> operating-condition class
_CODE_CLASSES = (
    ("KB", "ir_or"),   # combined inner+outer damage
    ("KI", "ir"),
    ("KA", "or"),
    ("K", "healthy"),
)

BONN_SET_ALIASES = {
    "Z": "A", "O": "B", "N": "C", "F": "D", "S": "E",
    "A": "A", "B": "B", "C": "C", "D": "D", "E": "E",
}
BONN_FILES_PER_SET = 100
BONN_SAMPLES_PER_FILE = 4097


class IntegrityError(ValueError):
    """Converted dataset does not match the published shape."""


def classify_bearing_code(name: str) -> str | None:
    """Class label from the bearing code embedded in a file name."""
    for token in Path(name).stem.split("_"):
        for prefix, cls in _CODE_CLASSES:
            if token.startswith(prefix) and token[len(prefix):].isdigit():
                return cls
    return None


def _walk_mat_value(value, found):
    """Collect (name, array) pairs for every named 1-D numeric series."""
    if isinstance(value, np.ndarray):
        if value.dtype.names:
            for record in np.atleast_1d(value).ravel():
                for field in value.dtype.names:
                    _walk_mat_value(record[field], found)
        elif value.dtype == object:
            for item in value.ravel():
                _walk_mat_value(item, found)
        elif value.size > 1:
            found.append(value)
    return found


def extract_vibration_channel(mat: dict) -> np.ndarray:
    """Vibration series from a loaded MAT structure.

    Prefers a channel stored under a record with a Name mentioning
    "vibration"; otherwise falls back to the longest numeric series.
    """
    named = []

    def scan(value, label=""):
        if isinstance(value, np.ndarray):
            if value.dtype.names:
                fields = value.dtype.names
                for record in np.atleast_1d(value).ravel():
                    name = ""
                    if "Name" in fields:
                        raw = record["Name"]
                        name = str(raw.ravel()[0]) if isinstance(raw, np.ndarray) and raw.size else str(raw)
                    for field in fields:
                        if field != "Name":
                            scan(record[field], name or label)
            elif value.dtype == object:
                for item in value.ravel():
                    scan(item, label)
            elif value.size > 1 and np.issubdtype(value.dtype, np.number):
                named.append((label.lower(), np.asarray(value, dtype=float).ravel()))

    for key, value in mat.items():
        if not key.startswith("__"):
            scan(value)
    if not named:
        raise IntegrityError("no numeric series found in MAT file")
    vibration = [arr for label, arr in named if "vibration" in label]
    if vibration:
        return max(vibration, key=len)
    return max((arr for _, arr in named), key=len)


def write_signal_csv(samples: np.ndarray, fs: float, path: Path) -> None:
    """sigkit signal CSV: fs header line then one repr'd sample per line."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"fs={float(fs)!r}\n")
        for v in samples:
            fh.write(f"{float(v)!r}\n")


def convert_pu(source: Path, dest: Path, fs: float = VIBRATION_FS) -> dict:
    """MAT archive tree -> per-class signal CSV tree.

    Returns per-class converted-file counts.  Corrupt or unclassifiable
    files are skipped with a logged warning.
    """
    source, dest = Path(source), Path(dest)
    mats = sorted(source.rglob("*.mat"))
    if not mats:
        raise IntegrityError(f"no MAT files under {source}")
    counts: dict[str, int] = {}
    for mat_path in mats:
        cls = classify_bearing_code(mat_path.name)
        if cls is None:
            logger.warning("skipping %s: no recognizable bearing code", mat_path)
            continue
        try:
            samples = extract_vibration_channel(loadmat(mat_path))
        except Exception as exc:  # corrupt file or missing channel
            logger.warning("skipping %s: %s", mat_path, exc)
            continue
        out_dir = dest / cls
        out_dir.mkdir(parents=True, exist_ok=True)
        write_signal_csv(samples, fs, out_dir / (mat_path.stem + ".csv"))
        counts[cls] = counts.get(cls, 0) + 1
    if not counts:
        raise IntegrityError(f"no convertible MAT files under {source}")
    return counts


def _bonn_sources(source: Path):
    """Yield (set_letter, [text file payloads]) from zips or directories."""
    source = Path(source)
    for entry in sorted(source.iterdir()):
        key = entry.stem.upper()
        if key not in BONN_SET_ALIASES:
            continue
        letter = BONN_SET_ALIASES[key]
        if entry.suffix.lower() == ".zip":
            with zipfile.ZipFile(entry) as zf:
                names = sorted(
                    n for n in zf.namelist() if n.lower().endswith(".txt")
                )
                yield letter, [zf.read(n).decode("ascii") for n in names]
        elif entry.is_dir():
            files = sorted(entry.glob("*.txt")) + sorted(entry.glob("*.TXT"))
            yield letter, [f.read_text(encoding="ascii") for f in files]


def convert_bonn(source: Path, dest: Path, strict: bool = True) -> dict:
    """Bonn-style zips/directories -> dest/{A..E}/*.txt tree.

    With ``strict`` the published shape is enforced: 5 sets of 100 files
    with 4097 samples each; any mismatch raises IntegrityError.
    """
    dest = Path(dest)
    counts: dict[str, int] = {}
    for letter, payloads in _bonn_sources(source):
        if strict and len(payloads) != BONN_FILES_PER_SET:
            raise IntegrityError(
                f"set {letter}: expected {BONN_FILES_PER_SET} files, "
                f"got {len(payloads)}"
            )
        set_dir = dest / letter
        set_dir.mkdir(parents=True, exist_ok=True)
        for i, text in enumerate(payloads):
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if strict and len(lines) != BONN_SAMPLES_PER_FILE:
                raise IntegrityError(
                    f"set {letter} file {i}: expected "
                    f"{BONN_SAMPLES_PER_FILE} samples, got {len(lines)}"
                )
            (set_dir / f"{letter}{i + 1:03d}.txt").write_text(
                "\n".join(lines) + "\n", encoding="ascii"
            )
        counts[letter] = len(payloads)
    if strict and sorted(counts) != ["A", "B", "C", "D", "E"]:
        raise IntegrityError(
            f"expected sets A..E, found {sorted(counts) or 'none'}"
        )
    if not counts:
        raise IntegrityError(f"no recognizable set archives under {source}")
    return counts
