import math
from enum import StrEnum
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import Field, NonNegativeInt, PositiveFloat, PositiveInt, field_validator, model_validator

from py_modgd.types import ArrayModel, FloatArray, FrozenConfig


class SyntheticSource(ArrayModel):
    """
    A harmonic talker: sum over l of A_l cos(l * phase(t) + phi_l).

    Attributes:
        f0_contour (FloatArray): f0 in Hz every `contour_hop_s` seconds; 0 is silence.
        contour_hop_s (float): Spacing of the contour samples. Defaults to 10 ms.
        num_harmonics (int): Number of partials L.
        amplitudes (FloatArray | None): Positive gain per partial. Defaults to ones.
        phases (FloatArray | None): Phase per partial in radians. Defaults to zeros.
        duration (float): Length of the rendering in seconds.
    """

    f0_contour: FloatArray
    contour_hop_s: PositiveFloat = 0.01
    num_harmonics: PositiveInt
    amplitudes: FloatArray | None = None
    phases: FloatArray | None = None
    duration: PositiveFloat

    @field_validator("f0_contour")
    @classmethod
    def check_contour(cls, contour: np.ndarray) -> np.ndarray:
        if contour.ndim != 1 or contour.size == 0:
            raise ValueError("The f0 contour must be a non-empty 1-D array.")
        if np.any(contour < 0):
            raise ValueError("Contour values must be non-negative.")
        return contour

    @model_validator(mode="after")
    def check_partials(self) -> "SyntheticSource":
        for name in ("amplitudes", "phases"):
            values = getattr(self, name)
            if values is not None and values.shape != (self.num_harmonics,):
                raise ValueError(
                    f"Expected {self.num_harmonics} {name}, got shape {values.shape}."
                )
        if self.amplitudes is not None and np.any(self.amplitudes <= 0):
            raise ValueError("Harmonic amplitudes must be positive.")
        return self

    @property
    def partial_amplitudes(self) -> np.ndarray:
        return np.ones(self.num_harmonics) if self.amplitudes is None else self.amplitudes

    @property
    def partial_phases(self) -> np.ndarray:
        return np.zeros(self.num_harmonics) if self.phases is None else self.phases


class NoiseConfig(FrozenConfig):
    """
    Attributes:
        kind ("white" | "babble"): Gaussian white noise or a babble of synthetic talkers.
        snr_db (float): Signal-to-noise ratio; +inf disables the noise.
        seed (int): Seed of the noise generator.
        babble_path (Path | None): A recorded babble WAV to loop instead of the
            synthetic babble. Defaults to None.
        babble_streams (int): Talkers in the synthetic babble. Defaults to 8.
    """

    kind: Literal["white", "babble"] = "white"
    snr_db: float
    seed: NonNegativeInt = 0
    babble_path: Path | None = None
    babble_streams: int = Field(default=8, ge=6)

    @field_validator("snr_db")
    @classmethod
    def check_snr(cls, snr_db: float) -> float:
        if math.isnan(snr_db) or snr_db == -math.inf:
            raise ValueError(f"SNR must be finite or +inf, got {snr_db}.")
        return snr_db


class RirConfig(FrozenConfig):
    """Exponentially decaying Gaussian noise, h[n] = b[n] exp(-delta n)."""

    t60: PositiveFloat
    seed: NonNegativeInt = 0
    length: PositiveInt | None = None

    def delta(self, sample_rate: float) -> float:
        """Decay rate per sample giving a 60 dB energy drop after t60 seconds."""
        return 3.0 * math.log(10.0) / (self.t60 * sample_rate)

    def n_taps(self, sample_rate: float) -> int:
        if self.length is not None:
            return self.length
        return int(math.ceil(self.t60 * sample_rate)) + 1


class Category(StrEnum):
    CLEAN = "clean"
    BABBLE = "babble"
    WHITE = "white"
    REVERB = "reverb"


class GenderPattern(StrEnum):
    MALE_FEMALE = "mf"
    FEMALE_FEMALE = "ff"
    MALE_MALE = "mm"


class SourceSpec(FrozenConfig):
    """
    Commanded pitch of one scenario talker.

    Attributes:
        f0_start (float): f0 at the start in Hz.
        f0_end (float | None): f0 at the end; a linear glide. Defaults to a constant pitch.
        jitter (float): Peak relative deviation of a smooth random contour wobble.
        harmonics (int): Number of partials. Defaults to 10.
        amplitude_decay (float): Partial l gets amplitude l^-decay. Defaults to 1.
        silent (tuple[tuple[float, float], ...]): Time spans in seconds where the
            talker is quiet.
    """

    f0_start: PositiveFloat
    f0_end: PositiveFloat | None = None
    jitter: float = Field(default=0.0, ge=0.0, le=0.5)
    harmonics: PositiveInt = 10
    amplitude_decay: float = Field(default=1.0, ge=0.0)
    silent: tuple[tuple[float, float], ...] = ()


class Scenario(FrozenConfig):
    """A replayable two-talker mixture: talkers, level ratio, noise and room."""

    name: str = "scenario"
    category: Category = Category.CLEAN
    pattern: GenderPattern = GenderPattern.MALE_FEMALE
    sample_rate: PositiveInt = 16000
    duration_s: PositiveFloat = 2.0
    frame_len_ms: PositiveFloat = 30.0
    hop_ms: PositiveFloat = 10.0
    sources: tuple[SourceSpec, SourceSpec]
    tmr_db: float = 0.0
    noise: Literal["none", "white", "babble"] = "none"
    snr_db: float = math.inf
    babble_wav: Path | None = None
    t60_ms: float = Field(default=0.0, ge=0.0)
    seed: NonNegativeInt = 0
