import logging

import numpy as np

from py_modgd.lab.types import SyntheticSource
from py_modgd.spectral.types import SignalBuffer

logger = logging.getLogger(__name__)


def contour_times(source: SyntheticSource) -> np.ndarray:
    return np.arange(source.f0_contour.size) * source.contour_hop_s


def synth_harmonic(source: SyntheticSource, sample_rate: int) -> SignalBuffer:
    """
    Renders a harmonic talker following its f0 contour.

    The instantaneous phase is the running integral of the contour, starting at 0,
    so glides stay continuous. Contour zeros gate the output to silence; the f0
    itself is held across silent stretches.

    Raises:
        ValueError: If the highest partial of the highest f0 reaches the Nyquist frequency.
    """
    contour = source.f0_contour
    nyquist = sample_rate / 2.0
    if contour.max() * source.num_harmonics >= nyquist:
        raise ValueError(
            f"Partial {source.num_harmonics} of {contour.max():.1f} Hz aliases "
            f"above {nyquist:.0f} Hz."
        )

    n_samples = int(round(source.duration * sample_rate))
    voiced = contour > 0
    if n_samples == 0 or not voiced.any():
        return SignalBuffer(samples=np.zeros(n_samples), sample_rate=sample_rate)

    t = np.arange(n_samples) / sample_rate
    tc = contour_times(source)
    f0 = np.interp(t, tc[voiced], contour[voiced])
    gate = np.interp(t, tc, voiced.astype(np.float64))

    phase = 2.0 * np.pi * (np.cumsum(f0) - f0) / sample_rate
    samples = np.zeros(n_samples)
    for harmonic, (amplitude, offset) in enumerate(
        zip(source.partial_amplitudes, source.partial_phases), start=1
    ):
        samples += amplitude * np.cos(harmonic * phase + offset)

    logger.debug(
        "Synthesised %d partials over %.2f s (f0 %.1f-%.1f Hz)",
        source.num_harmonics,
        source.duration,
        contour[voiced].min(),
        contour[voiced].max(),
    )
    return SignalBuffer(samples=samples * gate, sample_rate=sample_rate)
