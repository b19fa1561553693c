import math

import numpy as np

from py_modgd.errors import EmptyEvaluationError
from py_modgd.evaluation.types import EvalReport, ReferencePitch
from py_modgd.tracking.types import PitchTrack

FINE_THRESHOLD = 10.0

Track = PitchTrack | ReferencePitch | np.ndarray


def _values(track: Track) -> np.ndarray:
    if isinstance(track, (PitchTrack, ReferencePitch)):
        return track.f0
    return np.asarray(track, dtype=np.float64)


def align(det: Track, ref: Track) -> tuple[np.ndarray, np.ndarray]:
    """Cuts or zero-pads the detection to the reference length."""
    det_values, ref_values = _values(det), _values(ref)
    aligned = np.zeros(ref_values.size)
    n = min(det_values.size, ref_values.size)
    aligned[:n] = det_values[:n]
    return aligned, ref_values


def hits(det: Track, ref: Track, p: float) -> np.ndarray:
    """
    Frames where the detection is within `p` percent of a voiced reference.

    An unvoiced detection is never a hit.
    """
    det_values, ref_values = align(det, ref)
    voiced = ref_values > 0
    deviation = np.full(ref_values.size, np.inf)
    deviation[voiced] = np.abs(det_values[voiced] - ref_values[voiced]) / ref_values[voiced]
    return voiced & (det_values > 0) & (deviation < p / 100.0)


def accuracy(det: Track, ref: Track, p: float) -> float:
    """
    Percentage of voiced reference frames detected within `p` percent.

    Raises:
        EmptyEvaluationError: If the reference has no voiced frames.
    """
    n_voiced = int(np.count_nonzero(_values(ref) > 0))
    if n_voiced == 0:
        raise EmptyEvaluationError("empty evaluation set")
    return 100.0 * np.count_nonzero(hits(det, ref, p)) / n_voiced


def fine_pitch_stats(det: Track, ref: Track, p: float = FINE_THRESHOLD) -> tuple[float, float]:
    """
    Mean and standard deviation of `det - ref` in Hz over the correct frames.

    Raises:
        EmptyEvaluationError: If no frame is within `p` percent.
    """
    correct = hits(det, ref, p)
    if not correct.any():
        raise EmptyEvaluationError(f"no frame within {p:g} % of the reference")

    det_values, ref_values = align(det, ref)
    errors = det_values[correct] - ref_values[correct]
    mean = float(errors.mean())
    return mean, math.sqrt(max(float(np.mean(errors**2)) - mean**2, 0.0))


def evaluate_track(det: Track, ref: Track) -> EvalReport:
    n_correct = int(np.count_nonzero(hits(det, ref, FINE_THRESHOLD)))
    mean, spread = fine_pitch_stats(det, ref) if n_correct else (0.0, 0.0)
    return EvalReport(
        accuracy_10=accuracy(det, ref, 10.0),
        accuracy_20=accuracy(det, ref, 20.0),
        e_fs=spread,
        mean_fine_error=mean,
        n_voiced=int(np.count_nonzero(_values(ref) > 0)),
        n_correct=n_correct,
    )


def mean_abs_error(det: Track, ref: Track) -> float:
    """Over voiced reference frames, with an unvoiced detection counting as 0 Hz."""
    det_values, ref_values = align(det, ref)
    voiced = ref_values > 0
    if not voiced.any():
        return 0.0
    return float(np.mean(np.abs(det_values[voiced] - ref_values[voiced])))


def pair_assignment(det_tracks: tuple[Track, Track], ref_tracks: tuple[Track, Track]) -> tuple[int, int]:
    """
    Which detected track scores against each reference.

    The pairing with the smaller summed mean absolute error wins; ties keep
    the given order.
    """
    identity = mean_abs_error(det_tracks[0], ref_tracks[0]) + mean_abs_error(
        det_tracks[1], ref_tracks[1]
    )
    swapped = mean_abs_error(det_tracks[1], ref_tracks[0]) + mean_abs_error(
        det_tracks[0], ref_tracks[1]
    )
    return (1, 0) if swapped < identity else (0, 1)


def score_pair(
    det_tracks: tuple[Track, Track], ref_tracks: tuple[Track, Track]
) -> tuple[EvalReport, EvalReport]:
    """One report per reference speaker, in reference order."""
    first, second = pair_assignment(det_tracks, ref_tracks)
    return (
        evaluate_track(det_tracks[first], ref_tracks[0]),
        evaluate_track(det_tracks[second], ref_tracks[1]),
    )
