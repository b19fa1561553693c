import csv
import json
import logging
from pathlib import Path

import numpy as np

from py_modgd.config.types import PipelineConfig
from py_modgd.errors import ModelFileError
from py_modgd.pipeline import FrameIntermediates, TrajectoryResult

logger = logging.getLogger(__name__)

DUMP_FORMAT_VERSION = 1
CURVES = ("flattened", "modgd_pass1", "modgd_pass2")
META_FILE = "meta.json"


def write_intermediates(directory: str | Path, result: TrajectoryResult, config: PipelineConfig) -> None:
    """
    Stores per-frame curves as `.npy` arrays next to `meta.json`, which holds the
    run configuration and the per-frame trajectory columns.
    """
    if result.intermediates is None:
        raise ValueError("The result was computed without intermediates.")

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name in CURVES:
        np.save(directory / f"{name}.npy", getattr(result.intermediates, name))

    meta = {
        "format_version": DUMP_FORMAT_VERSION,
        "sample_rate": result.sample_rate,
        "hop_ms": result.hop_ms,
        "config": config.model_dump(mode="json"),
        "frames": {
            "time": result.times.tolist(),
            "f0_a": [pitches.f0_a or 0.0 for pitches in result.per_frame],
            "f0_b": [pitches.f0_b or 0.0 for pitches in result.per_frame],
            "region": [str(region) for region in result.regions],
            "flux": result.flux.tolist(),
            "high": result.high.f0.tolist(),
            "low": result.low.f0.tolist(),
        },
    }
    (directory / META_FILE).write_text(json.dumps(meta, indent=2, sort_keys=True), encoding="utf-8")
    logger.info("Dumped %d frames of intermediates to %s", result.n_frames, directory)


def read_intermediates(directory: str | Path) -> tuple[FrameIntermediates, dict]:
    """
    Raises:
        FileNotFoundError: If the directory does not exist.
        ModelFileError: If the dump is incomplete or of another format version.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"No such dump directory: {directory}")

    missing = [
        name for name in (META_FILE, *(f"{curve}.npy" for curve in CURVES))
        if not (directory / name).is_file()
    ]
    if missing:
        raise ModelFileError(f"Incomplete dump in {directory}: missing {', '.join(missing)}.")

    meta = json.loads((directory / META_FILE).read_text(encoding="utf-8"))
    if meta.get("format_version") != DUMP_FORMAT_VERSION:
        raise ModelFileError(f"Unsupported dump format {meta.get('format_version')!r}.")

    curves = {name: np.load(directory / f"{name}.npy") for name in CURVES}
    return FrameIntermediates(**curves), meta


def _write_rows(path: Path, header: list[str], rows) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def export_plot_data(directory: str | Path, out_dir: str | Path) -> list[Path]:
    """
    Writes one CSV per curve (a row per frame, a column per bin) and a
    `trajectories.csv` with the per-frame estimates and final tracks.
    """
    intermediates, meta = read_intermediates(directory)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    written = []
    times = meta["frames"]["time"]
    for name in CURVES:
        curve = getattr(intermediates, name)
        path = out_dir / f"{name}.csv"
        _write_rows(
            path,
            ["time"] + [f"bin{index}" for index in range(curve.shape[1])],
            ([f"{time:.3f}"] + [f"{value:.6g}" for value in row] for time, row in zip(times, curve)),
        )
        written.append(path)

    columns = ["time", "f0_a", "f0_b", "region", "flux", "high", "low"]
    path = out_dir / "trajectories.csv"
    _write_rows(path, columns, zip(*(meta["frames"][column] for column in columns)))
    written.append(path)

    logger.info("Exported plot data for %d frames to %s", len(times), out_dir)
    return written
