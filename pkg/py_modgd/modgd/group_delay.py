import numpy as np
from scipy import fft as sp_fft

from py_modgd.errors import EmptyInputError
from py_modgd.modgd.types import GdParts, ModgdConfig, ModgdVector
from py_modgd.spectral.transforms import cepstral_smooth
from py_modgd.spectral.types import FlattenedSpectrum

DENOMINATOR_FLOOR = 1e-12


def _transforms(x: np.ndarray, n_fft: int) -> tuple[np.ndarray, np.ndarray]:
    ramp = np.arange(x.shape[-1], dtype=np.float64)
    return sp_fft.rfft(x, n=n_fft, axis=-1), sp_fft.rfft(ramp * x, n=n_fft, axis=-1)


def _check_input(x: np.ndarray, n_fft: int | None) -> tuple[np.ndarray, int]:
    x = np.asarray(x, dtype=np.float64)
    if x.shape[-1] == 0:
        raise EmptyInputError("empty input")
    n_fft = x.shape[-1] if n_fft is None else n_fft
    if n_fft < x.shape[-1]:
        raise ValueError(f"n_fft={n_fft} is shorter than the sequence ({x.shape[-1]}).")
    return x, n_fft


def gd_parts(x: np.ndarray, n_fft: int | None = None) -> GdParts:
    x, n_fft = _check_input(x, n_fft)
    X, Y = _transforms(x, n_fft)
    return GdParts(X_R=X.real, X_I=X.imag, Y_R=Y.real, Y_I=Y.imag)


def group_delay(x: np.ndarray, n_fft: int | None = None) -> np.ndarray:
    """
    Group delay in samples, computed without phase unwrapping.

    tau[k] = (X_R Y_R + X_I Y_I) / |X|^2 where Y is the transform of n * x[n].
    Bins whose power falls below 1e-12 of the maximum are set to zero.
    """
    parts = gd_parts(x, n_fft)
    power = parts.power
    floor = DENOMINATOR_FLOOR * np.max(power)
    valid = power > floor

    tau = np.zeros_like(power)
    tau[valid] = parts.numerator[valid] / power[valid]
    return tau


def modgd_values(x: np.ndarray, cfg: ModgdConfig, n_fft: int | None = None) -> np.ndarray:
    """Row-wise modified group delay of one sequence or a stack of sequences."""
    x, n_fft = _check_input(x, n_fft)
    X, Y = _transforms(x, n_fft)

    numerator = X.real * Y.real + Y.imag * X.imag
    smoothed = cepstral_smooth(np.abs(X), cfg.lifter_len)

    denominator = smoothed ** (2.0 * cfg.gamma)
    floor = DENOMINATOR_FLOOR * np.max(denominator, axis=-1, keepdims=True)
    tau = numerator / np.maximum(denominator, floor)

    return np.sign(tau) * np.abs(tau) ** cfg.alpha


def modified_group_delay(
    x: np.ndarray,
    cfg: ModgdConfig,
    n_fft: int | None = None,
    lag_unit: float = 1.0,
) -> ModgdVector:
    return ModgdVector(values=modgd_values(x, cfg, n_fft), lag_unit=lag_unit)


def modgd_of_flattened(flat: FlattenedSpectrum, cfg: ModgdConfig) -> ModgdVector:
    """
    Modified group delay of a flattened spectrum read as a signal.

    The transform has the size of the original analysis transform, so a ripple
    of f0 / bin_width bins lands on lag bin sample_rate / f0: the pitch period
    in samples.
    """
    return modified_group_delay(
        flat.values, cfg, n_fft=flat.n_fft, lag_unit=1.0 / flat.sample_rate
    )
