import csv
import logging
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from py_modgd.errors import ModelFileError
from py_modgd.speaker_count.types import CountModelSet, SmccFeatures

logger = logging.getLogger(__name__)


def save_models(path: str | Path, model_set: CountModelSet) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model_set.model_dump_json(indent=2), encoding="utf-8")
    logger.info("Saved %d class model(s) to %s", len(model_set.models), path)


def load_models(path: str | Path) -> CountModelSet:
    """
    Raises:
        FileNotFoundError: If the file does not exist.
        ModelFileError: If the file is not a model set of a supported format version.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"No such model file: {path}")
    try:
        return CountModelSet.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as error:
        raise ModelFileError(f"{path} is not a valid speaker-count model set: {error}") from error


def write_features_csv(path: str | Path, features: SmccFeatures) -> None:
    """One row per frame, columns c0..c{n-1}."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow([f"c{index}" for index in range(features.dimension)])
        writer.writerows([f"{value:.6g}" for value in row] for row in features.vectors)


def read_features_csv(path: str | Path) -> SmccFeatures:
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise ModelFileError(f"{path} is empty.")
        try:
            rows = [[float(value) for value in row] for row in reader if row]
        except ValueError as error:
            raise ModelFileError(f"{path} holds a non-numeric feature: {error}") from error

    return SmccFeatures(vectors=np.asarray(rows, dtype=np.float64).reshape(-1, len(header)))
