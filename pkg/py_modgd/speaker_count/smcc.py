import logging

import numpy as np
from scipy import fft as sp_fft

from py_modgd.errors import EmptyInputError
from py_modgd.modgd.group_delay import modgd_values
from py_modgd.spectral.framing import frame_signal
from py_modgd.spectral.transforms import cepstral_smooth, flatten_bins, power_bins
from py_modgd.spectral.types import SignalBuffer
from py_modgd.speaker_count.types import SmccConfig, SmccFeatures

logger = logging.getLogger(__name__)


def hz_to_mel(hz: np.ndarray | float) -> np.ndarray | float:
    return 2595.0 * np.log10(1.0 + np.asarray(hz) / 700.0)


def mel_to_hz(mel: np.ndarray | float) -> np.ndarray | float:
    return 700.0 * (10.0 ** (np.asarray(mel) / 2595.0) - 1.0)


def mel_filterbank(n_filters: int, n_fft: int, sample_rate: float) -> np.ndarray:
    """Triangular filters with mel-spaced edges, one row per filter over the half spectrum."""
    n_bins = n_fft // 2 + 1
    edges = mel_to_hz(np.linspace(0.0, hz_to_mel(sample_rate / 2.0), n_filters + 2))
    bin_freqs = np.arange(n_bins) * sample_rate / n_fft

    lower, centre, upper = edges[:-2, None], edges[1:-1, None], edges[2:, None]
    rising = (bin_freqs - lower) / (centre - lower)
    falling = (upper - bin_freqs) / (upper - centre)
    return np.maximum(0.0, np.minimum(rising, falling))


def smcc_from_frames(frames: np.ndarray, sample_rate: int, cfg: SmccConfig) -> np.ndarray:
    """
    SMCC of windowed frames, one vector per row.

    Each frame's power spectrum is flattened by its cepstral envelope, the MODGD
    of the flattened spectrum is shifted to be non-negative, pooled by mel
    filters, and the log energies are decorrelated with an orthonormal DCT-II.
    """
    n_fft = cfg.frames.fft_size(sample_rate)
    bins = power_bins(frames, n_fft)
    envelope = cepstral_smooth(bins, cfg.envelope.lifter_len)
    flattened = flatten_bins(bins, envelope, cfg.flatten_gamma)

    modgd = modgd_values(flattened, cfg.modgd, n_fft)
    shifted = modgd - modgd.min(axis=-1, keepdims=True)

    energies = shifted @ mel_filterbank(cfg.n_filters, n_fft, sample_rate).T
    log_energies = np.log(energies + cfg.energy_floor)
    return sp_fft.dct(log_energies, type=2, norm="ortho", axis=-1)[:, : cfg.n_coeffs]


def smcc_features(signal: SignalBuffer, cfg: SmccConfig | None = None) -> SmccFeatures:
    """
    Raises:
        EmptyInputError: If the signal has no samples.
    """
    cfg = cfg or SmccConfig()
    if signal.samples.size == 0:
        raise EmptyInputError("empty input")

    frames = frame_signal(signal, cfg.frames)
    vectors = smcc_from_frames(frames, signal.sample_rate, cfg)
    logger.debug("Extracted %d SMCC vectors of dimension %d", *vectors.shape)
    return SmccFeatures(vectors=vectors)
