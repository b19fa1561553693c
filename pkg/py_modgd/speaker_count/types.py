import numpy as np
from pydantic import Field, PositiveFloat, PositiveInt, model_validator

from py_modgd.modgd.types import ModgdConfig
from py_modgd.spectral.types import CepstralEnvelopeConfig, FrameConfig
from py_modgd.types import ArrayModel, FloatArray, FrozenConfig

MODEL_FORMAT_VERSION = 1


class SmccConfig(FrozenConfig):
    """
    Source-MODGD cepstral coefficients.

    Attributes:
        frames (FrameConfig): Defaults to 20 ms frames every 10 ms.
        envelope (CepstralEnvelopeConfig): Lifter of the flattening envelope.
        flatten_gamma (float): Flattening exponent. Defaults to 1.
        modgd (ModgdConfig): MODGD of the flattened spectrum.
        n_filters (int): Mel triangular filters. Defaults to 40.
        n_coeffs (int): Coefficients kept after the DCT. Defaults to 20.
        energy_floor (float): Added to filter-bank energies before the log.
    """

    frames: FrameConfig = FrameConfig(frame_len_ms=20.0, hop_ms=10.0)
    envelope: CepstralEnvelopeConfig = CepstralEnvelopeConfig()
    flatten_gamma: float = Field(default=1.0, gt=0.0, le=1.0)
    modgd: ModgdConfig = ModgdConfig()
    n_filters: PositiveInt = 40
    n_coeffs: PositiveInt = 20
    energy_floor: PositiveFloat = 1e-8

    @model_validator(mode="after")
    def check_coeffs(self) -> "SmccConfig":
        if self.n_coeffs > self.n_filters:
            raise ValueError(
                f"Cannot keep {self.n_coeffs} coefficients from {self.n_filters} filters."
            )
        return self


class GmmConfig(FrozenConfig):
    """
    Attributes:
        n_components (int): Mixture components per class. Defaults to 12.
        max_iter (int): EM iteration limit. Defaults to 100.
        tol (float): Stop once the relative log-likelihood gain falls below this.
            Defaults to 1e-6.
        variance_floor (float): Fraction of the global feature variance every
            component variance is kept above. Defaults to 1e-6.
        seed (int): Seed of the k-means initialisation. Defaults to 0.
    """

    n_components: PositiveInt = 12
    max_iter: PositiveInt = 100
    tol: PositiveFloat = 1e-6
    variance_floor: PositiveFloat = 1e-6
    seed: int = Field(default=0, ge=0)


class SmccFeatures(ArrayModel):
    """One SMCC vector per row."""

    vectors: FloatArray

    @model_validator(mode="after")
    def check_shape(self) -> "SmccFeatures":
        if self.vectors.ndim != 2:
            raise ValueError(f"Expected a frames x coefficients matrix, got {self.vectors.shape}.")
        return self

    @property
    def n_frames(self) -> int:
        return self.vectors.shape[0]

    @property
    def dimension(self) -> int:
        return self.vectors.shape[1]


class GmmModel(ArrayModel):
    """
    Diagonal-covariance Gaussian mixture for one speaker-count class.

    Attributes:
        class_label (int): Number of speakers the model stands for.
        weights (FloatArray): Component weights, summing to one.
        means (FloatArray): Components x dimensions.
        variances (FloatArray): Components x dimensions, strictly positive.
        log_likelihood (list[float]): Mean per-vector training log-likelihood
            after every EM iteration.
    """

    class_label: PositiveInt
    weights: FloatArray
    means: FloatArray
    variances: FloatArray
    log_likelihood: list[float] = []

    @model_validator(mode="after")
    def check_parameters(self) -> "GmmModel":
        if self.means.ndim != 2 or self.means.shape != self.variances.shape:
            raise ValueError(
                f"Means {self.means.shape} and variances {self.variances.shape} must be "
                "matching components x dimensions matrices."
            )
        if self.weights.shape != (self.means.shape[0],):
            raise ValueError(
                f"Expected {self.means.shape[0]} weights, got shape {self.weights.shape}."
            )
        if np.any(self.weights < 0) or abs(self.weights.sum() - 1.0) > 1e-9:
            raise ValueError("Component weights must be non-negative and sum to one.")
        if np.any(self.variances <= 0):
            raise ValueError("Component variances must be strictly positive.")
        return self

    @property
    def n_components(self) -> int:
        return self.weights.size

    @property
    def dimension(self) -> int:
        return self.means.shape[1]


class CountModelSet(ArrayModel):
    """Speaker-count models as stored on disk."""

    format_version: int = MODEL_FORMAT_VERSION
    smcc: SmccConfig = SmccConfig()
    models: list[GmmModel]

    @model_validator(mode="after")
    def check_models(self) -> "CountModelSet":
        if self.format_version != MODEL_FORMAT_VERSION:
            raise ValueError(
                f"Unsupported model format {self.format_version}; "
                f"expected {MODEL_FORMAT_VERSION}."
            )
        if not self.models:
            raise ValueError("A model set needs at least one class model.")
        labels = [model.class_label for model in self.models]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Duplicate class labels in {labels}.")
        return self


class CountOutcome(ArrayModel):
    """A predicted speaker count next to the truth, one per test clip."""

    clip: str
    true_label: PositiveInt
    predicted_label: PositiveInt


class ConfusionRow(ArrayModel):
    """One true class: how its clips were classified."""

    true_label: PositiveInt
    n_clips: int
    predicted: dict[int, int]
    accuracy: float = Field(ge=0.0, le=100.0)
