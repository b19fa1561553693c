from typing import Annotated, Any, TypeVar

import numpy as np
from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer


def as_float_array(value: Any) -> np.ndarray:
    array = np.asarray(value, dtype=np.float64)
    if not np.all(np.isfinite(array)):
        raise ValueError("Array values must be finite (no NaN or Inf).")
    return array


FloatArray = Annotated[
    np.ndarray,
    BeforeValidator(as_float_array),
    PlainSerializer(lambda array: array.tolist(), return_type=list),
]


class ArrayModel(BaseModel):
    """Base for frozen domain types that carry numpy arrays."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class FrozenConfig(BaseModel):
    """Base for configuration sections; unknown fields are rejected."""

    model_config = ConfigDict(frozen=True, extra="forbid")


SourceRecord = TypeVar("SourceRecord", bound=BaseModel)
TargetRecord = TypeVar("TargetRecord", bound=BaseModel)
