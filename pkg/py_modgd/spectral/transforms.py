import numpy as np
from scipy import fft as sp_fft
from scipy.signal import windows

from py_modgd.spectral.types import (
    CepstralEnvelopeConfig,
    FlattenedSpectrum,
    PowerSpectrum,
)

SPECTRAL_FLOOR = 1e-10
BAND_TAPER = 0.2


def floor_spectrum(values: np.ndarray, floor: float = SPECTRAL_FLOOR) -> np.ndarray:
    """Raises bins below `floor * max` (per row) so that logs stay finite."""
    peak = np.max(values, axis=-1, keepdims=True)
    threshold = np.maximum(floor * peak, np.finfo(np.float64).tiny)
    return np.maximum(values, threshold)


def power_spectrum(frame: np.ndarray, n_fft: int, sample_rate: float) -> PowerSpectrum:
    frame = np.asarray(frame, dtype=np.float64)
    if n_fft < frame.size:
        raise ValueError(f"n_fft={n_fft} is shorter than the frame ({frame.size} samples).")
    if n_fft % 2:
        raise ValueError(f"n_fft must be even, got {n_fft}.")

    return PowerSpectrum(
        bins=power_bins(frame, n_fft),
        bin_width=sample_rate / n_fft,
        n_fft=n_fft,
    )


def power_bins(frames: np.ndarray, n_fft: int) -> np.ndarray:
    spectrum = sp_fft.rfft(frames, n=n_fft, axis=-1)
    return spectrum.real**2 + spectrum.imag**2


def cepstral_smooth(half_spectrum: np.ndarray, lifter_len: int) -> np.ndarray:
    """
    Low-quefrency liftering of a non-negative half spectrum, row-wise.

    The log of the floored spectrum is taken to the real cepstrum, every
    coefficient at quefrency >= `lifter_len` (and its mirror) is zeroed, and the
    result is brought back with an exponential. A lifter at least as long as half
    the cepstrum keeps everything.
    """
    log_spectrum = np.log(floor_spectrum(np.asarray(half_spectrum, dtype=np.float64)))
    n_cepstrum = 2 * (log_spectrum.shape[-1] - 1)
    cepstrum = sp_fft.irfft(log_spectrum, n=n_cepstrum, axis=-1)

    if lifter_len <= n_cepstrum // 2:
        cepstrum[..., lifter_len : n_cepstrum - lifter_len + 1] = 0.0

    return np.exp(sp_fft.rfft(cepstrum, axis=-1).real)


def cepstral_envelope(spec: PowerSpectrum, cfg: CepstralEnvelopeConfig) -> np.ndarray:
    return cepstral_smooth(spec.bins, cfg.lifter_len)


def flatten_bins(bins: np.ndarray, envelope: np.ndarray, gamma: float) -> np.ndarray:
    if np.any(envelope <= 0):
        raise ValueError("The spectral envelope must be strictly positive.")
    if not 0.0 < gamma <= 1.0:
        raise ValueError(f"Flattening exponent must lie in (0, 1], got {gamma}.")

    ratio = (bins / envelope) ** gamma
    return ratio - np.mean(ratio, axis=-1, keepdims=True)


def flatten_spectrum(
    spec: PowerSpectrum, env: np.ndarray, gamma: float = 1.0
) -> FlattenedSpectrum:
    env = np.asarray(env, dtype=np.float64)
    if env.shape != spec.bins.shape:
        raise ValueError(
            f"Envelope shape {env.shape} does not match the spectrum {spec.bins.shape}."
        )

    return FlattenedSpectrum(
        values=flatten_bins(spec.bins, env, gamma),
        bin_width=spec.bin_width,
        n_fft=spec.n_fft,
        flatten_gamma=gamma,
    )


def harmonic_band(
    flat: FlattenedSpectrum, max_hz: float, taper: float = BAND_TAPER
) -> FlattenedSpectrum:
    """
    Keeps the part of a flattened spectrum below `max_hz`.

    The band is faded out with a cosine over its top `taper` fraction,
    re-centred and padded with zeros, so the sequence keeps its length and
    stays zero-mean.
    """
    if max_hz <= 0:
        raise ValueError(f"The band edge must be positive, got {max_hz} Hz.")

    cut = min(int(max_hz / flat.bin_width) + 1, flat.values.size)
    band = flat.values[:cut] * windows.tukey(2 * cut, alpha=taper)[cut:]

    values = np.zeros_like(flat.values)
    values[:cut] = band - np.mean(band)
    return flat.model_copy(update={"values": values})


def normalized_magnitudes(bins: np.ndarray) -> np.ndarray:
    magnitudes = np.sqrt(bins)
    peak = np.max(magnitudes, axis=-1, keepdims=True)
    return np.divide(magnitudes, peak, out=np.zeros_like(magnitudes), where=peak > 0)


def spectral_flux(cur: PowerSpectrum, prev: PowerSpectrum) -> float:
    if cur.bins.shape != prev.bins.shape:
        raise ValueError(
            f"Cannot compare spectra of {cur.bins.size} and {prev.bins.size} bins."
        )

    difference = normalized_magnitudes(cur.bins) - normalized_magnitudes(prev.bins)
    return float(np.sum(difference**2))


def flux_series(power_frames: np.ndarray) -> np.ndarray:
    """Spectral flux of every frame against its predecessor; the first frame scores 0."""
    magnitudes = normalized_magnitudes(power_frames)
    flux = np.zeros(power_frames.shape[0])
    flux[1:] = np.sum(np.diff(magnitudes, axis=0) ** 2, axis=-1)
    return flux
