import numpy as np
from scipy.signal import fftconvolve

from py_modgd.lab.types import RirConfig
from py_modgd.spectral.types import SignalBuffer


def gen_rir(cfg: RirConfig, sample_rate: int) -> np.ndarray:
    """Gaussian noise under an exponential envelope; the same seed gives the same taps."""
    rng = np.random.default_rng(cfg.seed)
    n = np.arange(cfg.n_taps(sample_rate))
    return rng.standard_normal(n.size) * np.exp(-cfg.delta(sample_rate) * n)


def apply_reverb(signal: SignalBuffer, rir: np.ndarray) -> SignalBuffer:
    """Full linear convolution: the output is len(signal) + len(rir) - 1 samples long."""
    rir = np.asarray(rir, dtype=np.float64)
    if rir.ndim != 1 or rir.size == 0:
        raise ValueError("The room impulse response must be a non-empty 1-D array.")
    if signal.samples.size == 0:
        return signal
    return SignalBuffer(
        samples=fftconvolve(signal.samples, rir, mode="full"),
        sample_rate=signal.sample_rate,
    )
