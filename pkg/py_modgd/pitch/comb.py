import numpy as np
from scipy.signal import lfilter

from py_modgd.errors import EmptyInputError, PitchResolutionError
from py_modgd.pitch.types import CombConfig
from py_modgd.spectral.types import FlattenedSpectrum


def comb_magnitude(omega: float | np.ndarray, cfg: CombConfig) -> float | np.ndarray:
    """|H(e^jw)| = sqrt((1 + alpha^2) + 2 alpha cos(w D))."""
    alpha = cfg.alpha_c
    radicand = (1.0 + alpha**2) + 2.0 * alpha * np.cos(np.asarray(omega) * cfg.delay)
    return np.sqrt(np.maximum(radicand, 0.0))


def comb_filter(values: np.ndarray, delay: int, alpha_c: float) -> np.ndarray:
    """y[n] = x[n] + alpha_c x[n - delay]; samples before `delay` pass unchanged."""
    coefficients = np.zeros(delay + 1)
    coefficients[0] = 1.0
    coefficients[delay] = alpha_c
    return lfilter(coefficients, [1.0], values)


def harmonic_spacing(f0: float, bin_width: float) -> int:
    return int(round(f0 / bin_width))


def comb_annihilate(
    flat: FlattenedSpectrum, f0: float, template: CombConfig
) -> FlattenedSpectrum:
    """
    Removes a pitch and all its partials from a flattened spectrum.

    The comb runs along the spectral sequence with a delay equal to the harmonic
    spacing in bins, so one stage notches every multiple of f0. The residual is
    re-centred to zero mean.

    Raises:
        PitchResolutionError: If f0 rounds to less than one bin.
    """
    if flat.values.size == 0:
        raise EmptyInputError("empty input")

    delay = harmonic_spacing(f0, flat.bin_width)
    if delay == 0:
        raise PitchResolutionError(
            f"pitch below spectral resolution: {f0} Hz with bins of {flat.bin_width} Hz"
        )

    residual = comb_filter(flat.values, delay, template.alpha_c)
    return flat.model_copy(update={"values": residual - np.mean(residual)})
