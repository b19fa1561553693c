import logging
from pathlib import Path
from typing import Sequence

import numpy as np

from py_modgd.errors import PitchFileError

logger = logging.getLogger(__name__)


def write_pitch_columns(
    path: str | Path, times: np.ndarray, tracks: Sequence[np.ndarray]
) -> None:
    """
    Writes `time_sec f0_1_hz [f0_2_hz ...]` lines; 0 marks unvoiced frames.

    A single track gives the reference pitch format, two tracks the trajectory
    format of `estimate`.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    columns = [np.asarray(times)] + [np.asarray(track) for track in tracks]
    if len({column.size for column in columns}) != 1:
        raise ValueError("Time and pitch columns must have the same length.")

    lines = [
        " ".join([f"{row[0]:.3f}"] + [f"{value:.2f}" for value in row[1:]])
        for row in zip(*columns)
    ]
    path.write_text("\n".join(lines) + ("\n" if lines else ""))
    logger.debug("Wrote %d frames of %d track(s) to %s", len(lines), len(tracks), path)


def read_pitch_columns(path: str | Path) -> tuple[np.ndarray, list[np.ndarray]]:
    """
    Reads a pitch file back as (times, [track, ...]).

    Raises:
        FileNotFoundError: If the file does not exist.
        PitchFileError: If lines are malformed or have differing column counts.
    """
    path = Path(path)
    rows = []
    for number, line in enumerate(path.read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([float(field) for field in line.split()])
        except ValueError as error:
            raise PitchFileError(f"{path}:{number}: not a number in {line!r}") from error

    if not rows:
        return np.zeros(0), []
    widths = {len(row) for row in rows}
    if len(widths) != 1 or widths.pop() < 2:
        raise PitchFileError(f"{path}: expected a time column and at least one pitch column.")

    table = np.asarray(rows)
    return table[:, 0], [table[:, column] for column in range(1, table.shape[1])]
