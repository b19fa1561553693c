from enum import StrEnum

import numpy as np
from pydantic import Field, PositiveFloat, PositiveInt, field_validator, model_validator

from py_modgd.types import ArrayModel, FloatArray, FrozenConfig


class Window(StrEnum):
    HAMMING = "hamming"
    RECTANGULAR = "rectangular"


class SignalBuffer(ArrayModel):
    """Mono sampled audio; amplitudes are dimensionless with full scale 1.0."""

    samples: FloatArray
    sample_rate: PositiveInt

    @field_validator("samples")
    @classmethod
    def check_mono(cls, samples: np.ndarray) -> np.ndarray:
        if samples.ndim != 1:
            raise ValueError(f"Expected mono samples, got an array of shape {samples.shape}.")
        return samples

    @property
    def duration(self) -> float:
        return self.samples.size / self.sample_rate

    def __len__(self) -> int:
        return self.samples.size


class FrameConfig(FrozenConfig):
    """
    Short-time analysis grid.

    Attributes:
        frame_len_ms (float): Frame length in milliseconds. Defaults to 30.
        hop_ms (float): Frame shift in milliseconds; must not exceed the frame length.
            Defaults to 10.
        window (Window): Analysis window. Defaults to hamming.
        n_fft (int | None): Transform size. Defaults to None, which picks the next
            power of two at or above four times the frame length.
    """

    frame_len_ms: PositiveFloat = 30.0
    hop_ms: PositiveFloat = 10.0
    window: Window = Window.HAMMING
    n_fft: PositiveInt | None = None

    @model_validator(mode="after")
    def check_hop(self) -> "FrameConfig":
        if self.hop_ms > self.frame_len_ms:
            raise ValueError(
                f"Hop of {self.hop_ms} ms exceeds the frame length of {self.frame_len_ms} ms."
            )
        return self

    def frame_length(self, sample_rate: int) -> int:
        return int(round(self.frame_len_ms * sample_rate / 1000.0))

    def hop_length(self, sample_rate: int) -> int:
        return max(1, int(round(self.hop_ms * sample_rate / 1000.0)))

    def fft_size(self, sample_rate: int) -> int:
        if self.n_fft is not None:
            return self.n_fft
        return 1 << (4 * self.frame_length(sample_rate) - 1).bit_length()


class CepstralEnvelopeConfig(FrozenConfig):
    lifter_len: PositiveInt = 30


class PowerSpectrum(ArrayModel):
    """Half spectrum of a real frame: `bins[k] = |X[k]|^2` for k = 0..n_fft/2."""

    bins: FloatArray
    bin_width: PositiveFloat
    n_fft: PositiveInt

    @model_validator(mode="after")
    def check_bins(self) -> "PowerSpectrum":
        if self.bins.shape != (self.n_fft // 2 + 1,):
            raise ValueError(
                f"Expected {self.n_fft // 2 + 1} bins for n_fft={self.n_fft}, "
                f"got shape {self.bins.shape}."
            )
        if np.any(self.bins < 0):
            raise ValueError("Power spectrum bins must be non-negative.")
        return self

    @property
    def sample_rate(self) -> float:
        return self.bin_width * self.n_fft


class FlattenedSpectrum(ArrayModel):
    """Source-emphasised spectrum: envelope divided out, raised to gamma, DC removed."""

    values: FloatArray
    bin_width: PositiveFloat
    n_fft: PositiveInt
    flatten_gamma: float = Field(default=1.0, gt=0.0, le=1.0)

    @model_validator(mode="after")
    def check_zero_mean(self) -> "FlattenedSpectrum":
        if self.values.ndim != 1 or self.values.size == 0:
            raise ValueError("Flattened spectrum values must be a non-empty 1-D array.")
        scale = float(np.max(np.abs(self.values)))
        if abs(float(np.mean(self.values))) > 1e-9 * max(scale, 1e-300):
            raise ValueError("Flattened spectrum must be zero-mean.")
        return self

    @property
    def sample_rate(self) -> float:
        return self.bin_width * self.n_fft
