import numpy as np
from pydantic import Field, PositiveFloat, PositiveInt, model_validator

from py_modgd.types import ArrayModel, FloatArray, FrozenConfig


class ModgdConfig(FrozenConfig):
    """
    Attributes:
        alpha (float): Compression exponent applied as sign(tau) * |tau|^alpha.
            Defaults to 0.9.
        gamma (float): Exponent of the smoothed magnitude in the denominator,
            |S|^(2 gamma). Defaults to 0.4.
        lifter_len (int): Cepstral lifter used to smooth |X| into S. Defaults to 30.
    """

    alpha: float = Field(default=0.9, gt=0.0, le=1.0)
    gamma: float = Field(default=0.4, gt=0.0, le=1.0)
    lifter_len: PositiveInt = 30


class GdParts(ArrayModel):
    """Half-spectrum transforms of x[n] (X) and of n * x[n] (Y)."""

    X_R: FloatArray
    X_I: FloatArray
    Y_R: FloatArray
    Y_I: FloatArray

    @model_validator(mode="after")
    def check_lengths(self) -> "GdParts":
        lengths = {part.shape for part in (self.X_R, self.X_I, self.Y_R, self.Y_I)}
        if len(lengths) != 1:
            raise ValueError(f"Group delay parts differ in shape: {sorted(lengths)}.")
        return self

    @property
    def numerator(self) -> np.ndarray:
        return self.X_R * self.Y_R + self.Y_I * self.X_I

    @property
    def power(self) -> np.ndarray:
        return self.X_R**2 + self.X_I**2


class ModgdVector(ArrayModel):
    """
    Modified group delay over lag bins.

    When computed on a flattened spectrum the abscissa is time lag, one sample
    per bin, so `lag_unit` is 1 / sample_rate seconds.
    """

    values: FloatArray
    lag_unit: PositiveFloat = 1.0

    @property
    def length(self) -> int:
        return self.values.size


class PeakPick(ArrayModel):
    bin: float
    value: float
