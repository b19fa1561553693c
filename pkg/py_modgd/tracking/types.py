from enum import StrEnum

import numpy as np
from pydantic import Field, PositiveFloat, PositiveInt, field_validator

from py_modgd.types import ArrayModel, FloatArray, FrozenConfig


class TrackLabel(StrEnum):
    HIGH = "high"
    LOW = "low"


class Region(StrEnum):
    TWO = "two"
    ONE = "one"
    NONE = "none"


class PitchTrack(ArrayModel):
    """One f0 value per frame in Hz; 0 marks an unvoiced frame."""

    f0: FloatArray
    label: TrackLabel

    @field_validator("f0")
    @classmethod
    def check_values(cls, f0: np.ndarray) -> np.ndarray:
        if f0.ndim != 1:
            raise ValueError(f"A pitch track is one-dimensional, got shape {f0.shape}.")
        if np.any(f0 < 0):
            raise ValueError("Pitch values must be non-negative (0 marks unvoiced).")
        return f0

    @property
    def voiced(self) -> np.ndarray:
        return self.f0 > 0

    def __len__(self) -> int:
        return self.f0.size


class PostprocessConfig(FrozenConfig):
    """
    Attributes:
        rho (float): Stray threshold in Hz. Defaults to 10.
        max_gap_ms (float): Unvoiced gaps this long or longer are never filled.
            Defaults to 40.
        stray_window (int): Frames within which a jump must return to the trend
            to count as a stray. Defaults to 2.
        flux_percentile (float): Percentile of the utterance's spectral flux used
            as the soft threshold base. Defaults to 25.
        flux_margin (float): Multiplier on that percentile. Defaults to 4.
    """

    rho: PositiveFloat = 10.0
    max_gap_ms: PositiveFloat = 40.0
    stray_window: PositiveInt = 2
    flux_percentile: float = Field(default=25.0, ge=0.0, le=100.0)
    flux_margin: PositiveFloat = 4.0


class DpPath(ArrayModel):
    values: FloatArray
    cost: float
