import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveFloat, field_validator, model_validator

from py_modgd.types import ArrayModel, FloatArray


class ReferencePitch(ArrayModel):
    """Ground-truth f0 of one speaker on the analysis grid; 0 marks unvoiced frames."""

    f0: FloatArray
    hop_ms: PositiveFloat = 10.0

    @field_validator("f0")
    @classmethod
    def check_values(cls, f0: np.ndarray) -> np.ndarray:
        if f0.ndim != 1:
            raise ValueError(f"A reference is one-dimensional, got shape {f0.shape}.")
        if np.any(f0 < 0):
            raise ValueError("Reference pitch values must be non-negative.")
        return f0


class EvalReport(BaseModel):
    """
    Scores of one detected track against one reference.

    Attributes:
        accuracy_10 (float): Percent of voiced reference frames within 10 %.
        accuracy_20 (float): Percent of voiced reference frames within 20 %.
        e_fs (float): Standard deviation of the fine pitch error in Hz, over
            the frames counted by `accuracy_10`. 0 when there are none.
        mean_fine_error (float): Mean of the same errors in Hz.
        n_voiced (int): Voiced reference frames.
        n_correct (int): Frames within 10 %, the population of `e_fs`.
    """

    model_config = ConfigDict(frozen=True)

    accuracy_10: float = Field(ge=0.0, le=100.0)
    accuracy_20: float = Field(ge=0.0, le=100.0)
    e_fs: float = Field(ge=0.0)
    mean_fine_error: float
    n_voiced: NonNegativeInt
    n_correct: NonNegativeInt

    @model_validator(mode="after")
    def check_order(self) -> "EvalReport":
        if self.accuracy_20 < self.accuracy_10:
            raise ValueError(
                f"Accuracy at 20 % ({self.accuracy_20}) is below accuracy at 10 % "
                f"({self.accuracy_10})."
            )
        return self


class UtteranceScore(BaseModel):
    model_config = ConfigDict(frozen=True)

    utterance: str
    condition: str
    speaker: NonNegativeInt
    report: EvalReport


class ConditionSummary(BaseModel):
    """Frame-weighted scores of every utterance recorded under one condition."""

    model_config = ConfigDict(frozen=True)

    condition: str
    n_utterances: NonNegativeInt
    n_voiced: NonNegativeInt
    accuracy_10: float = Field(ge=0.0, le=100.0)
    accuracy_20: float = Field(ge=0.0, le=100.0)
    e_fs: float = Field(ge=0.0)
    mean_fine_error: float
