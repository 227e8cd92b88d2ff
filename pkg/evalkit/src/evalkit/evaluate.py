"""Seed-fixed random-forest scoring of sigkit feature tables.

Protocol: stratified 70/30 split, 200-tree forest, metrics reported as
accuracy percent, macro F1, and one-vs-rest macro AUROC with the full
confusion matrix.  Identical seed and input give an identical report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from sklearn.ensemble import RandomForestClassifier
from sklearn.metrics import confusion_matrix, f1_score, roc_auc_score
from sklearn.model_selection import train_test_split

N_TREES = 200


class InvalidDataset(ValueError):
    """Feature table cannot support the evaluation protocol."""


@dataclass(frozen=True)
class EvalReport:
    accuracy: float          # percent
    f1: float                # macro-averaged
    auroc: float             # one-vs-rest macro
    confusion: np.ndarray    # rows = true class, cols = predicted
    classes: tuple[str, ...]
    split_seed: int
    n_rows: int

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "f1": self.f1,
            "auroc": self.auroc,
            "confusion": self.confusion.tolist(),
            "classes": list(self.classes),
            "seed": self.split_seed,
            "n_rows": self.n_rows,
        }

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")


def read_feature_csv(path) -> tuple[list[str], np.ndarray, list[str]]:
    """Feature table per the sigkit contract: named columns plus label."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip().split(",")
        if header[-1] != "label":
            raise InvalidDataset(f"{path}: final column must be 'label'")
        names = header[:-1]
        values, labels = [], []
        for line_no, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(header):
                raise InvalidDataset(
                    f"{path}:{line_no}: expected {len(header)} columns"
                )
            values.append([float(p) for p in parts[:-1]])
            labels.append(parts[-1])
    if not labels:
        raise InvalidDataset(f"{path}: no feature rows")
    return names, np.asarray(values), labels


def evaluate(
    features_csv, split: float = 0.7, seed: int = 42
) -> EvalReport:
    """Train/test a random forest on a feature table and report metrics."""
    _, x, labels = read_feature_csv(Path(features_csv))
    classes = sorted(set(labels))
    if len(classes) < 2:
        raise InvalidDataset(
            f"need at least 2 classes, found {classes}"
        )
    if not (0.0 < split < 1.0):
        raise InvalidDataset(f"split fraction {split} not in (0, 1)")
    y = np.asarray(labels)
    x_train, x_test, y_train, y_test = train_test_split(
        x, y, train_size=split, random_state=seed, stratify=y
    )
    model = RandomForestClassifier(n_estimators=N_TREES, random_state=seed)
    model.fit(x_train, y_train)
    y_pred = model.predict(x_test)
    proba = model.predict_proba(x_test)
    conf = confusion_matrix(y_test, y_pred, labels=classes)
    accuracy = 100.0 * np.trace(conf) / conf.sum()
    f1 = f1_score(y_test, y_pred, labels=classes, average="macro")
    if len(classes) == 2:
        auroc = roc_auc_score(y_test == classes[1], proba[:, 1])
    else:
        auroc = roc_auc_score(
            y_test, proba, multi_class="ovr", average="macro", labels=classes
        )
    return EvalReport(
        accuracy=float(accuracy),
        f1=float(f1),
        auroc=float(auroc),
        confusion=conf,
        classes=tuple(classes),
        split_seed=seed,
        n_rows=len(labels),
    )
