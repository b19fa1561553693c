import logging

import numpy as np

from py_modgd.config.types import Grouping, PipelineConfig
from py_modgd.pitch.estimator import analyse_frames
from py_modgd.pitch.types import FramePitches
from py_modgd.spectral.framing import frame_signal, frame_times
from py_modgd.spectral.transforms import flux_series, power_bins
from py_modgd.spectral.types import SignalBuffer
from py_modgd.tracking.grouping import group_dp, group_high_low
from py_modgd.tracking.postprocess import remove_strays
from py_modgd.tracking.types import PitchTrack, Region
from py_modgd.tracking.voicing import detect_single_or_silent, splice_monopitch
from py_modgd.types import ArrayModel, FloatArray

logger = logging.getLogger(__name__)


class FrameIntermediates(ArrayModel):
    """Per-frame curves behind the estimates, one row per frame."""

    flattened: FloatArray
    modgd_pass1: FloatArray
    modgd_pass2: FloatArray


class TrajectoryResult(ArrayModel):
    """
    Output of one utterance.

    Attributes:
        times (FloatArray): Frame start times in seconds.
        high (PitchTrack): Final higher-pitch trajectory.
        low (PitchTrack): Final lower-pitch trajectory.
        per_frame (list[FramePitches]): Two-pass estimates before grouping.
        regions (list[Region]): Two, one or no pitch per frame.
        flux (FloatArray): Spectral flux per frame.
        energy (FloatArray): RMS of every windowed frame.
        intermediates (FrameIntermediates | None): Kept when requested.
    """

    sample_rate: int
    hop_ms: float
    times: FloatArray
    high: PitchTrack
    low: PitchTrack
    per_frame: list[FramePitches]
    regions: list[Region]
    flux: FloatArray
    energy: FloatArray
    intermediates: FrameIntermediates | None = None

    @property
    def n_frames(self) -> int:
        return self.times.size


def _silence(track: PitchTrack, regions: list[Region]) -> PitchTrack:
    f0 = track.f0.copy()
    f0[np.array([region is Region.NONE for region in regions], dtype=bool)] = 0.0
    return track.model_copy(update={"f0": f0})


def estimate_trajectories(
    signal: SignalBuffer,
    config: PipelineConfig | None = None,
    keep_intermediates: bool = False,
) -> TrajectoryResult:
    """
    Two pitch trajectories of a co-channel recording.

    Frames are analysed in two passes, labelled by spectral flux and energy,
    grouped into a high and a low track, given their monopitch estimate where a
    single talker is active, and finally cleaned of strays and short gaps.
    """
    config = config or PipelineConfig()
    settings = config.estimator_settings(signal.sample_rate)

    frames = frame_signal(signal, config.frames)
    analyses = analyse_frames(frames, settings, workers=config.workers)
    per_frame = [analysis.pitches for analysis in analyses]

    flux = flux_series(power_bins(frames, settings.n_fft))
    energy = np.sqrt(np.mean(frames**2, axis=1))
    regions = detect_single_or_silent(
        flux,
        energy,
        [pitches.count for pitches in per_frame],
        config.postprocess,
        config.salience.silence_rms,
    )

    if config.grouping is Grouping.DP:
        high, low = group_dp(per_frame, signal.sample_rate, config.dp_block_len)
    else:
        high, low = group_high_low(per_frame)

    mono_f0 = [pitches.f0_a for pitches in per_frame]
    high, low = splice_monopitch(high, low, regions, mono_f0)
    high, low = (
        remove_strays(_silence(track, regions), config.postprocess, config.frames.hop_ms)
        for track in (high, low)
    )

    intermediates = None
    if keep_intermediates:
        intermediates = FrameIntermediates(
            flattened=np.vstack([analysis.flattened for analysis in analyses]),
            modgd_pass1=np.vstack([analysis.modgd_pass1 for analysis in analyses]),
            modgd_pass2=np.vstack([analysis.modgd_pass2 for analysis in analyses]),
        )

    logger.info(
        "Estimated %d frames (%.2f s): %d with two pitches, %d with one, %d silent",
        len(frames),
        signal.duration,
        regions.count(Region.TWO),
        regions.count(Region.ONE),
        regions.count(Region.NONE),
    )
    return TrajectoryResult(
        sample_rate=signal.sample_rate,
        hop_ms=config.frames.hop_ms,
        times=frame_times(len(frames), config.frames),
        high=high,
        low=low,
        per_frame=per_frame,
        regions=regions,
        flux=flux,
        energy=energy,
        intermediates=intermediates,
    )
