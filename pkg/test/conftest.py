import numpy as np
import pytest

from py_modgd.config.types import PipelineConfig
from py_modgd.pitch.types import EstimatorSettings
from py_modgd.spectral.framing import window_coefficients
from py_modgd.spectral.types import SignalBuffer, Window

SAMPLE_RATE = 16000
FRAME_LENGTH = 480


def harmonic_complex(
    f0s: tuple[float, ...],
    n_samples: int,
    sample_rate: int = SAMPLE_RATE,
    n_partials: int = 10,
    seed: int = 0,
) -> np.ndarray:
    """Equal-power harmonic talkers with 1/l partial amplitudes and random phases."""
    rng = np.random.default_rng(seed)
    t = np.arange(n_samples) / sample_rate
    signal = np.zeros(n_samples)
    for f0 in f0s:
        talker = np.zeros(n_samples)
        for partial in range(1, n_partials + 1):
            talker += np.cos(2.0 * np.pi * partial * f0 * t + rng.uniform(0, 2 * np.pi)) / partial
        signal += talker / np.sqrt(np.mean(talker**2))
    return 0.1 * signal


@pytest.fixture
def settings() -> EstimatorSettings:
    return PipelineConfig().estimator_settings(SAMPLE_RATE)


@pytest.fixture
def make_frame():
    def make(f0s: tuple[float, ...], n_partials: int = 10, seed: int = 0) -> np.ndarray:
        samples = harmonic_complex(f0s, FRAME_LENGTH, n_partials=n_partials, seed=seed)
        return samples * window_coefficients(Window.HAMMING, FRAME_LENGTH)

    return make


@pytest.fixture
def make_signal():
    def make(f0s: tuple[float, ...], duration: float = 1.0, n_partials: int = 10) -> SignalBuffer:
        samples = harmonic_complex(f0s, int(duration * SAMPLE_RATE), n_partials=n_partials)
        return SignalBuffer(samples=samples, sample_rate=SAMPLE_RATE)

    return make
