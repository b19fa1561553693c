import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from py_modgd.modgd.group_delay import modgd_of_flattened
from py_modgd.modgd.peaks import median_magnitude, peak_candidates, window_maximum
from py_modgd.modgd.types import ModgdVector, PeakPick
from py_modgd.pitch.comb import comb_annihilate
from py_modgd.pitch.types import EstimatorSettings, FramePitches
from py_modgd.spectral.transforms import (
    cepstral_envelope,
    flatten_spectrum,
    harmonic_band,
    power_spectrum,
)
from py_modgd.spectral.types import FlattenedSpectrum
from py_modgd.types import ArrayModel, FloatArray

logger = logging.getLogger(__name__)

# Lags a second-pass peak may sit from its first-pass counterpart and still be
# located on the first pass.
SNAP_LAGS = 2


class FrameAnalysis(ArrayModel):
    """Estimates of one frame together with the intermediates that produced them."""

    pitches: FramePitches
    flattened: FloatArray
    modgd_pass1: FloatArray
    modgd_pass2: FloatArray


def flattened_frame(frame: np.ndarray, settings: EstimatorSettings) -> FlattenedSpectrum:
    spectrum = power_spectrum(frame, settings.n_fft, settings.sample_rate)
    envelope = cepstral_envelope(spectrum, settings.envelope)
    flat = flatten_spectrum(spectrum, envelope, settings.flatten_gamma)
    if settings.band_hz is None:
        return flat
    return harmonic_band(flat, settings.band_hz)


def peak_prominence(vector: ModgdVector, pick: PeakPick, window: tuple[int, int]) -> float:
    """Peak value over the median MODGD magnitude from half the shortest lag upwards."""
    floor = median_magnitude(vector, window[0] // 2)
    return pick.value / floor if floor > 0 else np.inf


def is_harmonic_of(lag: float, reference_lag: float, tolerance: float) -> bool:
    return any(
        abs(lag - multiple * reference_lag) <= tolerance * multiple * reference_lag
        for multiple in (1, 2, 3)
    )


def _is_salient(
    pick: PeakPick,
    vector: ModgdVector,
    window: tuple[int, int],
    reference_max: float,
    settings: EstimatorSettings,
) -> bool:
    salience = settings.salience
    if reference_max <= 0.0 or pick.value < salience.relative_threshold * reference_max:
        return False
    if peak_prominence(vector, pick, window) < salience.min_prominence:
        return False
    return settings.pitch_range.contains(settings.sample_rate / pick.bin)


def _snap(
    first: ModgdVector,
    pick: PeakPick,
    reference_lag: float,
    window: tuple[int, int],
    settings: EstimatorSettings,
) -> PeakPick:
    """Relocates a residual peak on the first-pass MODGD when a peak lies close by."""
    lo = max(int(np.floor(pick.bin)) - SNAP_LAGS, window[0])
    hi = min(int(np.ceil(pick.bin)) + SNAP_LAGS, window[1])
    nearby = peak_candidates(first, lo, hi) if lo < hi else []
    if not nearby:
        return pick
    lag = nearby[0].bin
    if is_harmonic_of(lag, reference_lag, settings.salience.harmonic_guard):
        return pick
    if not settings.pitch_range.contains(settings.sample_rate / lag):
        return pick
    return pick.model_copy(update={"bin": lag})


def is_silent(frame: np.ndarray, settings: EstimatorSettings) -> bool:
    return float(np.sqrt(np.mean(np.square(frame)))) < settings.salience.silence_rms


def analyse_frame(
    frame: np.ndarray, settings: EstimatorSettings, second_pass: bool = True
) -> FrameAnalysis:
    """
    Two-pass estimate of one windowed frame.

    Pass one picks the predominant MODGD peak of the flattened spectrum in the
    lag window [sample_rate / f_max, sample_rate / f_min]. Pass two removes that
    pitch with the comb and takes the highest residual peak that is not a
    multiple of the first lag. A peak counts when it reaches the relative
    threshold of the first-pass maximum and stands out of its own MODGD by the
    minimum prominence.

    The second pitch is located on the first-pass MODGD when that curve has a
    peak within a couple of lags, so the slope of the comb does not pull it. Its
    salience is the residual peak value, and the two estimates are swapped when
    that value beats the first one.
    """
    frame = np.asarray(frame, dtype=np.float64)
    n_lags = settings.n_fft // 2 + 1
    empty = np.zeros(n_lags)

    if is_silent(frame, settings):
        return FrameAnalysis(
            pitches=FramePitches(),
            flattened=empty,
            modgd_pass1=empty,
            modgd_pass2=empty,
        )

    flat = flattened_frame(frame, settings)
    first = modgd_of_flattened(flat, settings.modgd)
    window = settings.pitch_range.lag_window(settings.sample_rate, first.length)
    reference_max = window_maximum(first, *window)

    candidates_a = peak_candidates(first, *window)
    pick_a = candidates_a[0] if candidates_a else None
    if pick_a is not None and not _is_salient(pick_a, first, window, reference_max, settings):
        pick_a = None

    if pick_a is None or not second_pass:
        pitches = (
            FramePitches()
            if pick_a is None
            else FramePitches(
                f0_a=settings.sample_rate / pick_a.bin, salience_a=pick_a.value
            )
        )
        return FrameAnalysis(
            pitches=pitches, flattened=flat.values, modgd_pass1=first.values, modgd_pass2=empty
        )

    f0_a = settings.sample_rate / pick_a.bin
    residual = comb_annihilate(flat, f0_a, settings.comb)
    second = modgd_of_flattened(residual, settings.modgd)

    guard = settings.salience.harmonic_guard
    pick_b = next(
        (
            pick
            for pick in peak_candidates(second, *window)
            if not is_harmonic_of(pick.bin, pick_a.bin, guard)
        ),
        None,
    )
    if pick_b is not None and not _is_salient(pick_b, second, window, reference_max, settings):
        pick_b = None

    if pick_b is None:
        pitches = FramePitches(f0_a=f0_a, salience_a=pick_a.value)
    else:
        pick_b = _snap(first, pick_b, pick_a.bin, window, settings)
        if pick_b.value > pick_a.value:
            pick_a, pick_b = pick_b, pick_a
        pitches = FramePitches(
            f0_a=settings.sample_rate / pick_a.bin,
            f0_b=settings.sample_rate / pick_b.bin,
            salience_a=pick_a.value,
            salience_b=pick_b.value,
        )

    return FrameAnalysis(
        pitches=pitches,
        flattened=flat.values,
        modgd_pass1=first.values,
        modgd_pass2=second.values,
    )


def estimate_frame_pitches(frame: np.ndarray, settings: EstimatorSettings) -> FramePitches:
    return analyse_frame(frame, settings).pitches


def estimate_monopitch(frame: np.ndarray, settings: EstimatorSettings) -> float | None:
    return analyse_frame(frame, settings, second_pass=False).pitches.f0_a


def analyse_frames(
    frames: Sequence[np.ndarray] | np.ndarray,
    settings: EstimatorSettings,
    workers: int = 1,
) -> list[FrameAnalysis]:
    """Analyses every frame; with `workers` > 1 frames run on a thread pool, in order."""
    if workers <= 1:
        analyses = [analyse_frame(frame, settings) for frame in frames]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            analyses = list(pool.map(lambda frame: analyse_frame(frame, settings), frames))

    logger.debug(
        "Analysed %d frames: %d with two pitches",
        len(analyses),
        sum(analysis.pitches.count == 2 for analysis in analyses),
    )
    return analyses
