import numpy as np

from py_modgd.tracking.types import PitchTrack, PostprocessConfig


def _interpolate(f0: np.ndarray, left: int, right: int, indices: range) -> None:
    for index in indices:
        weight = (index - left) / (right - left)
        f0[index] = (1.0 - weight) * f0[left] + weight * f0[right]


def _remove_jumps(f0: np.ndarray, cfg: PostprocessConfig, hop_ms: float) -> None:
    previous = None
    index = 0
    while index < f0.size:
        if f0[index] <= 0:
            index += 1
            continue
        if previous is not None and (index - previous - 1) * hop_ms >= cfg.max_gap_ms:
            previous = None
        if previous is None or abs(f0[index] - f0[previous]) <= cfg.rho:
            previous = index
            index += 1
            continue

        last_lookahead = min(index + cfg.stray_window, f0.size - 1)
        comeback = next(
            (
                ahead
                for ahead in range(index + 1, last_lookahead + 1)
                if f0[ahead] > 0 and abs(f0[ahead] - f0[previous]) <= cfg.rho
            ),
            None,
        )
        if comeback is None:
            previous = index
            index += 1
            continue

        strays = [stray for stray in range(index, comeback) if f0[stray] > 0]
        _interpolate(f0, previous, comeback, strays)
        previous = comeback
        index = comeback + 1


def _fill_gaps(f0: np.ndarray, cfg: PostprocessConfig, hop_ms: float) -> None:
    voiced = np.flatnonzero(f0 > 0)
    for left, right in zip(voiced, voiced[1:]):
        gap = right - left - 1
        if gap > 0 and gap * hop_ms < cfg.max_gap_ms:
            _interpolate(f0, left, right, range(left + 1, right))


def remove_strays(
    track: PitchTrack, cfg: PostprocessConfig = PostprocessConfig(), hop_ms: float = 10.0
) -> PitchTrack:
    """
    Smooths a trajectory with the stray rule and fills short unvoiced gaps.

    A voiced value more than `rho` away from the previous voiced value is a
    stray when the track comes back within `rho` of that value in the next
    `stray_window` frames; strays are replaced by linear interpolation. Jumps
    that do not come back are kept as genuine pitch movement. Afterwards,
    unvoiced gaps shorter than `max_gap_ms` are interpolated linearly; longer
    gaps stay unvoiced and also break the stray comparison.
    """
    f0 = track.f0.copy()
    _remove_jumps(f0, cfg, hop_ms)
    _fill_gaps(f0, cfg, hop_ms)
    return track.model_copy(update={"f0": f0})
