import numpy as np

from py_modgd.modgd.types import ModgdVector, PeakPick


def check_lag_range(length: int, lag_lo: int, lag_hi: int) -> None:
    if not 0 <= lag_lo < lag_hi < length:
        raise ValueError(
            f"Invalid lag range [{lag_lo}, {lag_hi}] for a vector of {length} bins."
        )


def _refine(values: np.ndarray, index: int, lag_lo: int, lag_hi: int) -> PeakPick:
    if index == 0 or index == values.size - 1:
        return PeakPick(bin=float(index), value=float(values[index]))

    left, middle, right = values[index - 1], values[index], values[index + 1]
    curvature = left - 2.0 * middle + right
    offset = 0.5 * (left - right) / curvature if curvature != 0 else 0.0

    return PeakPick(
        bin=float(np.clip(index + offset, lag_lo, lag_hi)),
        value=float(middle - 0.25 * (left - right) * offset),
    )


def peak_candidates(v: ModgdVector, lag_lo: int, lag_hi: int) -> list[PeakPick]:
    """
    Every strict local maximum at lags lag_lo..lag_hi, highest first.

    Neighbours are read from the whole vector, so a window edge counts when it
    rises above the lag just outside the window; the ends of the vector only
    have one neighbour. Locations and values are refined with a parabola
    through the peak and its neighbours, and locations stay inside the window.
    """
    check_lag_range(v.length, lag_lo, lag_hi)

    padded = np.concatenate(([-np.inf], v.values, [-np.inf]))
    centre = padded[lag_lo + 1 : lag_hi + 2]
    is_peak = (centre > padded[lag_lo : lag_hi + 1]) & (centre > padded[lag_lo + 2 : lag_hi + 3])

    indices = lag_lo + np.flatnonzero(is_peak)
    indices = indices[np.argsort(-v.values[indices], kind="stable")]
    return [_refine(v.values, int(index), lag_lo, lag_hi) for index in indices]


def pick_peak(v: ModgdVector, lag_lo: int, lag_hi: int) -> PeakPick | None:
    """Highest strict local maximum in [lag_lo, lag_hi], or None when there is none."""
    candidates = peak_candidates(v, lag_lo, lag_hi)
    return candidates[0] if candidates else None


def window_maximum(v: ModgdVector, lag_lo: int, lag_hi: int) -> float:
    check_lag_range(v.length, lag_lo, lag_hi)
    return float(np.max(v.values[lag_lo : lag_hi + 1]))


def median_magnitude(v: ModgdVector, lag_from: int = 0) -> float:
    return float(np.median(np.abs(v.values[lag_from:])))


def value_at(v: ModgdVector, lag: float) -> float:
    return float(np.interp(lag, np.arange(v.length), v.values))
