import csv
import json

import numpy as np
from pytest import raises

from py_modgd.config.types import PipelineConfig
from py_modgd.errors import ModelFileError
from py_modgd.intermediates import export_plot_data, read_intermediates, write_intermediates
from py_modgd.pipeline import estimate_trajectories


def dump(tmp_path, make_signal):
    config = PipelineConfig()
    result = estimate_trajectories(make_signal((140.0, 230.0), duration=0.2), config, keep_intermediates=True)
    directory = tmp_path / "dump"
    write_intermediates(directory, result, config)
    return directory, result


def test_write_and_read(tmp_path, make_signal):
    directory, result = dump(tmp_path, make_signal)

    intermediates, meta = read_intermediates(directory)

    assert np.array_equal(intermediates.modgd_pass1, result.intermediates.modgd_pass1)
    assert meta["format_version"] == 1
    assert meta["sample_rate"] == 16000
    assert meta["config"]["grouping"] == "high_low"
    assert meta["frames"]["high"] == result.high.f0.tolist()
    assert len(meta["frames"]["region"]) == result.n_frames


def test_write_without_intermediates_fails(tmp_path, make_signal):
    result = estimate_trajectories(make_signal((140.0,), duration=0.1))
    with raises(ValueError):
        write_intermediates(tmp_path, result, PipelineConfig())


def test_read_bad_dumps(tmp_path, make_signal):
    with raises(FileNotFoundError):
        read_intermediates(tmp_path / "missing")

    directory, _ = dump(tmp_path, make_signal)
    meta = json.loads((directory / "meta.json").read_text())
    meta["format_version"] = 7
    (directory / "meta.json").write_text(json.dumps(meta))
    with raises(ModelFileError):
        read_intermediates(directory)

    (directory / "modgd_pass2.npy").unlink()
    with raises(ModelFileError, match="modgd_pass2"):
        read_intermediates(directory)


def test_export_plot_data(tmp_path, make_signal):
    directory, result = dump(tmp_path, make_signal)

    written = export_plot_data(directory, tmp_path / "plots")

    assert [path.name for path in written] == [
        "flattened.csv",
        "modgd_pass1.csv",
        "modgd_pass2.csv",
        "trajectories.csv",
    ]
    with written[1].open() as handle:
        rows = list(csv.reader(handle))
    assert rows[0][:3] == ["time", "bin0", "bin1"]
    assert len(rows) == result.n_frames + 1
    with written[3].open() as handle:
        trajectories = list(csv.DictReader(handle))
    assert [float(row["high"]) for row in trajectories] == result.high.f0.tolist()
