import math

from pydantic import Field, PositiveFloat, PositiveInt, model_validator

from py_modgd.modgd.types import ModgdConfig
from py_modgd.spectral.types import CepstralEnvelopeConfig
from py_modgd.types import ArrayModel, FrozenConfig


class PitchRange(FrozenConfig):
    f_min: PositiveFloat = 60.0
    f_max: PositiveFloat = 400.0

    @model_validator(mode="after")
    def check_order(self) -> "PitchRange":
        if self.f_min >= self.f_max:
            raise ValueError(
                f"f_min ({self.f_min} Hz) must be below f_max ({self.f_max} Hz)."
            )
        return self

    def check_sample_rate(self, sample_rate: float) -> None:
        if self.f_max >= sample_rate / 2.0:
            raise ValueError(
                f"f_max ({self.f_max} Hz) must be below Nyquist ({sample_rate / 2.0} Hz)."
            )

    def lag_window(self, sample_rate: float, n_lags: int) -> tuple[int, int]:
        """Lag bins [sample_rate / f_max, sample_rate / f_min], clipped to the vector."""
        self.check_sample_rate(sample_rate)
        lag_lo = int(math.floor(sample_rate / self.f_max))
        lag_hi = min(int(math.ceil(sample_rate / self.f_min)), n_lags - 1)
        return lag_lo, lag_hi

    def contains(self, f0: float) -> bool:
        return self.f_min <= f0 <= self.f_max


class CombConfig(FrozenConfig):
    """
    FIR comb H(z) = 1 + alpha_c z^-D.

    `delay` is a template value; the annihilation stage replaces it with the
    harmonic spacing of the pitch being removed.
    """

    alpha_c: float = Field(default=-0.98, ge=-1.0, lt=0.0)
    delay: PositiveInt = 1


class SalienceConfig(FrozenConfig):
    """
    When an estimation pass gives up.

    Attributes:
        relative_threshold (float): A peak below this fraction of the first-pass
            maximum inside the lag window is rejected. Defaults to 0.03.
        silence_rms (float): Frames whose RMS is below this value (full scale 1.0)
            are silent. Defaults to 1e-4.
        min_prominence (float): Minimum ratio of the peak value to the median
            MODGD magnitude from half the shortest lag upwards. Defaults to 10.
        harmonic_guard (float): Second-pass peaks within this relative distance
            of a multiple (1, 2 or 3) of the first-pass lag are skipped.
            Defaults to 0.03.
    """

    relative_threshold: float = Field(default=0.03, ge=0.0, le=1.0)
    silence_rms: float = Field(default=1e-4, ge=0.0)
    min_prominence: float = Field(default=10.0, ge=0.0)
    harmonic_guard: float = Field(default=0.03, ge=0.0, lt=0.5)


class EstimatorSettings(FrozenConfig):
    """
    Everything a per-frame estimate needs, resolved for one sample rate.

    `band_hz` bounds the part of the flattened spectrum the MODGD sees; None
    keeps the whole spectrum.
    """

    sample_rate: PositiveInt
    n_fft: PositiveInt
    envelope: CepstralEnvelopeConfig = CepstralEnvelopeConfig()
    flatten_gamma: float = Field(default=0.3, gt=0.0, le=1.0)
    band_hz: PositiveFloat | None = 3000.0
    modgd: ModgdConfig = ModgdConfig()
    pitch_range: PitchRange = PitchRange()
    comb: CombConfig = CombConfig()
    salience: SalienceConfig = SalienceConfig()

    @model_validator(mode="after")
    def check_range(self) -> "EstimatorSettings":
        self.pitch_range.check_sample_rate(self.sample_rate)
        return self


class FramePitches(ArrayModel):
    """Up to two pitch estimates of one frame; `f0_a` is the more salient one."""

    f0_a: PositiveFloat | None = None
    f0_b: PositiveFloat | None = None
    salience_a: float = 0.0
    salience_b: float = 0.0

    @property
    def candidates(self) -> list[float]:
        return [f0 for f0 in (self.f0_a, self.f0_b) if f0 is not None]

    @property
    def count(self) -> int:
        return len(self.candidates)
