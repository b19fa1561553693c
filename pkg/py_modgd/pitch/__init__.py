__all__ = [
    "CombConfig",
    "EstimatorSettings",
    "FrameAnalysis",
    "FramePitches",
    "PitchRange",
    "SalienceConfig",
    "analyse_frame",
    "analyse_frames",
    "comb_annihilate",
    "comb_filter",
    "comb_magnitude",
    "estimate_frame_pitches",
    "estimate_monopitch",
]

from py_modgd.pitch.comb import comb_annihilate, comb_filter, comb_magnitude
from py_modgd.pitch.estimator import (
    FrameAnalysis,
    analyse_frame,
    analyse_frames,
    estimate_frame_pitches,
    estimate_monopitch,
)
from py_modgd.pitch.types import (
    CombConfig,
    EstimatorSettings,
    FramePitches,
    PitchRange,
    SalienceConfig,
)
