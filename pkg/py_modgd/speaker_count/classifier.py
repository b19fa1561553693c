import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Mapping, Sequence

import numpy as np

from py_modgd.declarative import RecordAggregator
from py_modgd.errors import EmptyInputError
from py_modgd.spectral.types import SignalBuffer
from py_modgd.speaker_count.gmm import gmm_train, score_samples
from py_modgd.speaker_count.smcc import smcc_features
from py_modgd.speaker_count.types import (
    ConfusionRow,
    CountModelSet,
    CountOutcome,
    GmmConfig,
    GmmModel,
    SmccFeatures,
)

logger = logging.getLogger(__name__)

TRAIN_FRACTION = 0.6


def _stack(features: Sequence[SmccFeatures]) -> np.ndarray:
    return np.vstack([item.vectors for item in features])


def train_count_models(
    features_by_class: Mapping[int, Sequence[SmccFeatures]],
    cfg: GmmConfig | None = None,
    workers: int = 1,
) -> list[GmmModel]:
    """One mixture per speaker count, trained on the pooled vectors of its clips."""
    cfg = cfg or GmmConfig()
    labels = sorted(features_by_class)

    def train(label: int) -> GmmModel:
        return gmm_train(_stack(features_by_class[label]), label, cfg)

    if workers <= 1:
        return [train(label) for label in labels]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(train, labels))


def class_scores(features: SmccFeatures, models: Sequence[GmmModel]) -> dict[int, float]:
    """Accumulated log-likelihood of the whole utterance under each class model."""
    return {
        model.class_label: float(np.sum(score_samples(model, features.vectors)))
        for model in models
    }


def classify_features(features: SmccFeatures, models: Sequence[GmmModel]) -> int:
    """
    The class whose model gives the highest accumulated likelihood; ties go to
    the smaller speaker count.

    Raises:
        EmptyInputError: If there are no feature vectors.
        ValueError: If no model is given.
    """
    if not models:
        raise ValueError("At least one class model is required.")
    if features.n_frames == 0:
        raise EmptyInputError("empty input")

    scores = class_scores(features, models)
    best = min(scores)
    for label in sorted(scores):
        if scores[label] > scores[best]:
            best = label
    return best


def count_speakers(signal: SignalBuffer, model_set: CountModelSet) -> int:
    features = smcc_features(signal, model_set.smcc)
    label = classify_features(features, model_set.models)
    logger.debug("Counted %d speaker(s) over %d frames", label, features.n_frames)
    return label


def train_test_split(
    labels: Sequence[int], train_fraction: float = TRAIN_FRACTION, seed: int = 0
) -> tuple[list[int], list[int]]:
    """
    Seeded per-class split of item indices into training and test sets.

    Each class keeps round(train_fraction * n) items for training, at least one
    when it has any.
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"The training fraction must lie in (0, 1), got {train_fraction}.")

    rng = np.random.default_rng(seed)
    train, test = [], []
    for label in sorted(set(labels)):
        indices = np.flatnonzero(np.asarray(labels) == label)
        rng.shuffle(indices)
        n_train = max(1, int(round(train_fraction * indices.size)))
        train.extend(int(index) for index in indices[:n_train])
        test.extend(int(index) for index in indices[n_train:])
    return sorted(train), sorted(test)


class ConfusionMatrixAggregator(RecordAggregator[ConfusionRow, CountOutcome]):
    """Rows of true classes, counts of predicted classes, per-class accuracy."""

    def first(self, values: list[int]) -> int:
        return values[0]

    def predicted_counts(self, values: list[int]) -> dict[int, int]:
        counts = Counter(values)
        return {label: counts.get(label, 0) for label in self.context["labels"]}

    def class_accuracy(self, group: list[CountOutcome]) -> float:
        correct = sum(outcome.predicted_label == outcome.true_label for outcome in group)
        return 100.0 * correct / len(group)

    group_by = ("true_label",)
    sort_by = ("true_label", "clip")
    aggregations = {
        "true_label": ("true_label", first),
        "n_clips": ("clip", len),
        "predicted": ("predicted_label", predicted_counts),
        "accuracy": class_accuracy,
    }


def confusion_matrix(outcomes: Sequence[CountOutcome]) -> list[ConfusionRow]:
    labels = sorted(
        {outcome.true_label for outcome in outcomes}
        | {outcome.predicted_label for outcome in outcomes}
    )
    return ConfusionMatrixAggregator(context={"labels": labels}).aggregate(list(outcomes))


def overall_accuracy(outcomes: Sequence[CountOutcome]) -> float:
    if not outcomes:
        raise EmptyInputError("empty input")
    correct = sum(outcome.predicted_label == outcome.true_label for outcome in outcomes)
    return 100.0 * correct / len(outcomes)


def format_confusion(rows: Sequence[ConfusionRow]) -> str:
    labels = sorted({label for row in rows for label in row.predicted})
    header = ["true \\ predicted"] + [f"SP-{label}" for label in labels] + ["accuracy"]
    lines = ["  ".join(f"{cell:>16}" for cell in header)]
    for row in rows:
        cells = [f"SP-{row.true_label}"] + [str(row.predicted.get(label, 0)) for label in labels]
        cells.append(f"{row.accuracy:.2f}")
        lines.append("  ".join(f"{cell:>16}" for cell in cells))
    return "\n".join(lines) + "\n"
