__all__ = [
    "DpPath",
    "PitchTrack",
    "PostprocessConfig",
    "Region",
    "TrackLabel",
    "detect_single_or_silent",
    "dp_group",
    "group_dp",
    "group_high_low",
    "read_pitch_columns",
    "remove_strays",
    "splice_monopitch",
    "transition_cost",
    "write_pitch_columns",
]

from py_modgd.tracking.grouping import dp_group, group_dp, group_high_low, transition_cost
from py_modgd.tracking.postprocess import remove_strays
from py_modgd.tracking.trajectory_io import read_pitch_columns, write_pitch_columns
from py_modgd.tracking.types import (
    DpPath,
    PitchTrack,
    PostprocessConfig,
    Region,
    TrackLabel,
)
from py_modgd.tracking.voicing import detect_single_or_silent, splice_monopitch
