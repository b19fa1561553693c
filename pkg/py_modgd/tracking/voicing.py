import logging
from typing import Sequence

import numpy as np

from py_modgd.tracking.types import PitchTrack, PostprocessConfig, Region

logger = logging.getLogger(__name__)


def flux_threshold(flux: np.ndarray, active: np.ndarray, cfg: PostprocessConfig) -> float:
    if not np.any(active):
        return 0.0
    return cfg.flux_margin * float(np.percentile(flux[active], cfg.flux_percentile))


def detect_single_or_silent(
    flux_series: Sequence[float] | np.ndarray,
    energy_series: Sequence[float] | np.ndarray,
    peak_counts: Sequence[int] | np.ndarray,
    cfg: PostprocessConfig = PostprocessConfig(),
    silence_rms: float = 1e-4,
) -> list[Region]:
    """
    Labels every frame as carrying two pitches, one pitch or none.

    `energy_series` holds frame RMS values. Frames below `silence_rms` are silent.
    Frames whose flux is within the soft threshold (a margin over a low
    percentile of the utterance's flux) and whose estimate kept a single salient
    MODGD peak carry one pitch. Everything else is treated as two pitches.
    """
    flux = np.asarray(flux_series, dtype=np.float64)
    energy = np.asarray(energy_series, dtype=np.float64)
    counts = np.asarray(peak_counts)
    if not flux.shape == energy.shape == counts.shape:
        raise ValueError(
            f"Series lengths differ: flux {flux.shape}, energy {energy.shape}, "
            f"peaks {counts.shape}."
        )

    active = energy >= silence_rms
    threshold = flux_threshold(flux, active, cfg)

    regions = []
    for is_active, frame_flux, count in zip(active, flux, counts):
        if not is_active:
            regions.append(Region.NONE)
        elif frame_flux <= threshold and count == 1:
            regions.append(Region.ONE)
        else:
            regions.append(Region.TWO)

    logger.debug(
        "Flux threshold %.4g: %d two, %d one, %d none",
        threshold,
        regions.count(Region.TWO),
        regions.count(Region.ONE),
        regions.count(Region.NONE),
    )
    return regions


def _previous_voiced(f0: np.ndarray, index: int) -> float | None:
    voiced = np.flatnonzero(f0[:index] > 0)
    return float(f0[voiced[-1]]) if voiced.size else None


def splice_monopitch(
    high: PitchTrack,
    low: PitchTrack,
    regions: Sequence[Region],
    mono_f0: Sequence[float | None],
) -> tuple[PitchTrack, PitchTrack]:
    """
    Re-inserts monopitch estimates of single-pitch frames by continuity.

    Each re-estimated value goes to the track whose most recent voiced value is
    nearer, and the other track is unvoiced at that frame. When neither track
    has been voiced yet the value lands on the low track.
    """
    high_f0 = high.f0.copy()
    low_f0 = low.f0.copy()

    for index, (region, f0) in enumerate(zip(regions, mono_f0)):
        if region is not Region.ONE:
            continue
        high_f0[index] = 0.0
        low_f0[index] = 0.0
        if f0 is None:
            continue

        last_high = _previous_voiced(high_f0, index)
        last_low = _previous_voiced(low_f0, index)
        if last_high is not None and (last_low is None or abs(f0 - last_high) < abs(f0 - last_low)):
            high_f0[index] = f0
        else:
            low_f0[index] = f0

    return (
        high.model_copy(update={"f0": high_f0}),
        low.model_copy(update={"f0": low_f0}),
    )
