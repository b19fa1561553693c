import logging
import math

import numpy as np

from py_modgd.lab.synthesis import synth_harmonic
from py_modgd.lab.types import NoiseConfig, SyntheticSource
from py_modgd.spectral.audio_io import read_wav
from py_modgd.spectral.types import SignalBuffer

logger = logging.getLogger(__name__)

ACTIVITY_FRAME_S = 0.01
ACTIVITY_FLOOR_DB = -40.0

BABBLE_F0_RANGE = (90.0, 260.0)
BABBLE_MAX_PARTIAL_HZ = 3500.0


def activity_mask(samples: np.ndarray, sample_rate: int) -> np.ndarray:
    """Samples in 10 ms blocks whose power is within 40 dB of the loudest block."""
    block = max(1, int(round(ACTIVITY_FRAME_S * sample_rate)))
    n_blocks = math.ceil(samples.size / block)
    padded = np.zeros(n_blocks * block)
    padded[: samples.size] = samples
    power = np.mean(padded.reshape(n_blocks, block) ** 2, axis=1)
    if power.max() == 0:
        return np.zeros(samples.size, dtype=bool)
    active = power > power.max() * 10.0 ** (ACTIVITY_FLOOR_DB / 10.0)
    return np.repeat(active, block)[: samples.size]


def fit_length(samples: np.ndarray, length: int) -> np.ndarray:
    """Truncates, or loops the sequence until it covers `length` samples."""
    return np.resize(samples, length) if samples.size else np.zeros(length)


def tmr_gains(target: SignalBuffer, masker: SignalBuffer, tmr_db: float) -> tuple[float, float]:
    """
    Gains (g_target, g_masker) giving the requested target-to-masker ratio.

    Powers are measured where both talkers are active, falling back to the whole
    signal when they never overlap. The sum of the two powers is kept, so
    swapping target and masker at 0 dB yields the same total power.

    Raises:
        ValueError: If the sample rates differ or either talker is silent.
    """
    if target.sample_rate != masker.sample_rate:
        raise ValueError(
            f"Cannot mix {target.sample_rate} Hz with {masker.sample_rate} Hz audio."
        )
    masker_samples = fit_length(masker.samples, target.samples.size)

    overlap = activity_mask(target.samples, target.sample_rate) & activity_mask(
        masker_samples, target.sample_rate
    )
    if not overlap.any():
        overlap = np.ones(target.samples.size, dtype=bool)

    target_power = float(np.mean(target.samples[overlap] ** 2))
    masker_power = float(np.mean(masker_samples[overlap] ** 2))
    if masker_power == 0:
        raise ValueError("The masker has zero power.")
    if target_power == 0:
        raise ValueError("The target has zero power.")

    ratio = 10.0 ** (tmr_db / 10.0)
    total = target_power + masker_power
    target_gain = math.sqrt(total * ratio / (1.0 + ratio) / target_power)
    masker_gain = math.sqrt(total / (1.0 + ratio) / masker_power)
    return target_gain, masker_gain


def mix_tmr(target: SignalBuffer, masker: SignalBuffer, tmr_db: float) -> SignalBuffer:
    """
    Sums two talkers at `tmr_db` dB target-to-masker ratio.

    The masker is truncated or looped to the target length.
    """
    target_gain, masker_gain = tmr_gains(target, masker, tmr_db)
    masker_samples = fit_length(masker.samples, target.samples.size)
    logger.debug("Mixing at %.1f dB TMR (gains %.3f, %.3f)", tmr_db, target_gain, masker_gain)
    return SignalBuffer(
        samples=target_gain * target.samples + masker_gain * masker_samples,
        sample_rate=target.sample_rate,
    )


def _gated_contour(n_points: int, hop_s: float, rng: np.random.Generator) -> np.ndarray:
    """A drifting f0 with syllable-like on/off gating."""
    base = rng.uniform(*BABBLE_F0_RANGE)
    drift = np.cumsum(rng.standard_normal(n_points)) * 0.004
    contour = base * np.clip(1.0 + drift - drift.mean(), 0.8, 1.2)

    gate = np.zeros(n_points, dtype=bool)
    position = 0
    while position < n_points:
        on = int(rng.uniform(0.1, 0.3) / hop_s)
        off = int(rng.uniform(0.05, 0.2) / hop_s)
        gate[position : position + on] = True
        position += on + off
    return np.where(gate, contour, 0.0)


def synth_babble(
    n_samples: int, sample_rate: int, rng: np.random.Generator, n_streams: int
) -> np.ndarray:
    """Sum of independently drawn harmonic talkers, each circularly shifted; unit power."""
    duration = n_samples / sample_rate
    hop_s = 0.01
    n_points = int(math.ceil(duration / hop_s)) + 1

    babble = np.zeros(n_samples)
    for _ in range(n_streams):
        contour = _gated_contour(n_points, hop_s, rng)
        n_harmonics = max(
            1,
            min(
                int(BABBLE_MAX_PARTIAL_HZ / max(contour.max(), 1.0)),
                int(0.45 * sample_rate / max(contour.max(), 1.0)),
            ),
        )
        stream = synth_harmonic(
            SyntheticSource(
                f0_contour=contour,
                contour_hop_s=hop_s,
                num_harmonics=n_harmonics,
                amplitudes=1.0 / np.arange(1, n_harmonics + 1),
                phases=rng.uniform(0.0, 2.0 * np.pi, n_harmonics),
                duration=duration,
            ),
            sample_rate,
        ).samples
        babble += np.roll(stream, int(rng.integers(0, max(n_samples, 1))))

    power = np.mean(babble**2) if n_samples else 0.0
    return babble / math.sqrt(power) if power > 0 else babble


def noise_samples(n_samples: int, sample_rate: int, cfg: NoiseConfig) -> np.ndarray:
    rng = np.random.default_rng(cfg.seed)
    if cfg.kind == "white":
        return rng.standard_normal(n_samples)

    if cfg.babble_path is not None:
        recording = read_wav(cfg.babble_path)
        if recording.sample_rate != sample_rate:
            raise ValueError(
                f"Babble recording is {recording.sample_rate} Hz, expected {sample_rate} Hz."
            )
        return fit_length(recording.samples, n_samples)

    return synth_babble(n_samples, sample_rate, rng, cfg.babble_streams)


def add_noise(signal: SignalBuffer, cfg: NoiseConfig) -> SignalBuffer:
    """
    Adds white or babble noise at `cfg.snr_db` dB against the signal's mean power.

    The noise realisation is rescaled to the exact power implied by the SNR;
    an SNR of +inf, or a silent signal, leaves the input untouched.
    """
    if math.isinf(cfg.snr_db) or signal.samples.size == 0:
        return signal

    signal_power = float(np.mean(signal.samples**2))
    if signal_power == 0:
        return signal

    noise = noise_samples(signal.samples.size, signal.sample_rate, cfg)
    noise_power = float(np.mean(noise**2))
    if noise_power == 0:
        return signal

    wanted = signal_power / 10.0 ** (cfg.snr_db / 10.0)
    noise *= math.sqrt(wanted / noise_power)
    logger.debug("Added %s noise at %.1f dB SNR", cfg.kind, cfg.snr_db)
    return SignalBuffer(samples=signal.samples + noise, sample_rate=signal.sample_rate)
