__all__ = [
    "ConfusionMatrixAggregator",
    "ConfusionRow",
    "CountModelSet",
    "CountOutcome",
    "GmmConfig",
    "GmmModel",
    "SmccConfig",
    "SmccFeatures",
    "classify_features",
    "confusion_matrix",
    "count_speakers",
    "format_confusion",
    "gmm_train",
    "load_models",
    "overall_accuracy",
    "read_features_csv",
    "responsibilities",
    "save_models",
    "score_samples",
    "smcc_features",
    "train_count_models",
    "train_test_split",
    "write_features_csv",
]

from py_modgd.speaker_count.classifier import (
    ConfusionMatrixAggregator,
    classify_features,
    confusion_matrix,
    count_speakers,
    format_confusion,
    overall_accuracy,
    train_count_models,
    train_test_split,
)
from py_modgd.speaker_count.gmm import gmm_train, responsibilities, score_samples
from py_modgd.speaker_count.model_io import (
    load_models,
    read_features_csv,
    save_models,
    write_features_csv,
)
from py_modgd.speaker_count.smcc import smcc_features
from py_modgd.speaker_count.types import (
    ConfusionRow,
    CountModelSet,
    CountOutcome,
    GmmConfig,
    GmmModel,
    SmccConfig,
    SmccFeatures,
)
