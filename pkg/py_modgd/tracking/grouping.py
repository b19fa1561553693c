import logging
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike

from py_modgd.errors import CandidateGapError
from py_modgd.pitch.types import FramePitches
from py_modgd.tracking.types import DpPath, PitchTrack, TrackLabel

logger = logging.getLogger(__name__)


def _last_voiced(values: list[float]) -> float | None:
    for value in reversed(values):
        if value > 0:
            return value
    return None


def group_high_low(per_frame: Sequence[FramePitches]) -> tuple[PitchTrack, PitchTrack]:
    """
    Splits frame estimates into a high and a low trajectory.

    With two candidates the larger goes high and the smaller low. A single
    candidate joins the track whose last voiced value is nearer; ties (including
    no history at all) go high.
    """
    high: list[float] = []
    low: list[float] = []

    for pitches in per_frame:
        candidates = pitches.candidates
        if len(candidates) == 2:
            high.append(max(candidates))
            low.append(min(candidates))
            continue
        if not candidates:
            high.append(0.0)
            low.append(0.0)
            continue

        f0 = candidates[0]
        last_high, last_low = _last_voiced(high), _last_voiced(low)
        distance_high = abs(f0 - last_high) if last_high is not None else np.inf
        distance_low = abs(f0 - last_low) if last_low is not None else np.inf
        if distance_low < distance_high:
            high.append(0.0)
            low.append(f0)
        else:
            high.append(f0)
            low.append(0.0)

    return (
        PitchTrack(f0=np.asarray(high, dtype=np.float64), label=TrackLabel.HIGH),
        PitchTrack(f0=np.asarray(low, dtype=np.float64), label=TrackLabel.LOW),
    )


def transition_cost(location: ArrayLike, previous_location: ArrayLike) -> np.ndarray | float:
    """Distance between a location and its predecessor; broadcasts over arrays."""
    cost = np.abs(np.subtract(location, previous_location))
    return float(cost) if cost.ndim == 0 else cost


def _dp_block(candidates: Sequence[Sequence[float]]) -> tuple[list[float], float]:
    layers = [np.sort(np.asarray(frame, dtype=np.float64)) for frame in candidates]
    costs = np.zeros(layers[0].size)
    back_pointers: list[np.ndarray] = []

    for previous, current in zip(layers, layers[1:]):
        transitions = costs[np.newaxis, :] + transition_cost(
            current[:, np.newaxis], previous[np.newaxis, :]
        )
        # argmin keeps the first minimum, which is the lowest lag after sorting
        pointers = np.argmin(transitions, axis=1)
        costs = transitions[np.arange(current.size), pointers]
        back_pointers.append(pointers)

    index = int(np.argmin(costs))
    total = float(costs[index])
    path = [float(layers[-1][index])]
    for layer, pointers in zip(reversed(layers[:-1]), reversed(back_pointers)):
        index = int(pointers[index])
        path.append(float(layer[index]))

    return path[::-1], total


def dp_group(
    per_frame_candidates: Sequence[Sequence[float]], block_len: int | None = None
) -> DpPath:
    """
    Minimum total transition cost path through per-frame candidate locations.

    The sequence is cut into blocks of `block_len` frames (one block when None);
    each block is solved by dynamic programming and backtracked from its last
    frame. Ties resolve toward the lower candidate.

    Raises:
        CandidateGapError: If a frame offers no candidate.
    """
    for index, frame in enumerate(per_frame_candidates):
        if len(frame) == 0:
            raise CandidateGapError(f"candidate gap in DP block at frame {index}")

    n_frames = len(per_frame_candidates)
    if n_frames == 0:
        return DpPath(values=np.zeros(0), cost=0.0)

    block_len = n_frames if block_len is None else max(1, block_len)
    values: list[float] = []
    cost = 0.0
    for start in range(0, n_frames, block_len):
        block_values, block_cost = _dp_block(per_frame_candidates[start : start + block_len])
        values.extend(block_values)
        cost += block_cost

    return DpPath(values=np.asarray(values), cost=cost)


def _voiced_runs(mask: np.ndarray) -> list[tuple[int, int]]:
    runs = []
    start = None
    for index, flag in enumerate(mask):
        if flag and start is None:
            start = index
        elif not flag and start is not None:
            runs.append((start, index))
            start = None
    if start is not None:
        runs.append((start, mask.size))
    return runs


def group_dp(
    per_frame: Sequence[FramePitches], sample_rate: float, block_len: int = 20
) -> tuple[PitchTrack, PitchTrack]:
    """
    Continuity grouping: within each block the smoothest lag path forms one
    trajectory and the leftover candidates the other; the trajectory with the
    higher mean f0 in the block is labelled high.
    """
    n_frames = len(per_frame)
    high = np.zeros(n_frames)
    low = np.zeros(n_frames)
    has_candidate = np.array([pitches.count > 0 for pitches in per_frame], dtype=bool)

    for run_start, run_end in _voiced_runs(has_candidate):
        for start in range(run_start, run_end, block_len):
            stop = min(start + block_len, run_end)
            lags = [
                [sample_rate / f0 for f0 in per_frame[index].candidates]
                for index in range(start, stop)
            ]
            path = dp_group(lags, block_len=None)

            chosen = sample_rate / path.values
            other = np.zeros(stop - start)
            for offset, index in enumerate(range(start, stop)):
                remaining = [
                    f0
                    for f0 in per_frame[index].candidates
                    if not np.isclose(f0, chosen[offset])
                ]
                other[offset] = remaining[0] if remaining else 0.0

            other_voiced = other[other > 0]
            if other_voiced.size and other_voiced.mean() > chosen.mean():
                chosen, other = other, chosen
            high[start:stop] = chosen
            low[start:stop] = other

    logger.debug("Grouped %d frames by continuity in blocks of %d", n_frames, block_len)
    return (
        PitchTrack(f0=high, label=TrackLabel.HIGH),
        PitchTrack(f0=low, label=TrackLabel.LOW),
    )
