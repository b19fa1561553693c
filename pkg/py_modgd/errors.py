class ModgdError(Exception):
    """Root of every error raised deliberately by py_modgd."""


class EmptyInputError(ModgdError, ValueError):
    pass


class PitchResolutionError(ModgdError, ValueError):
    pass


class CandidateGapError(ModgdError, ValueError):
    pass


class EmptyEvaluationError(ModgdError, ValueError):
    pass


class ScenarioError(ModgdError, ValueError):
    pass


class AudioFormatError(ModgdError, OSError):
    pass


class NumericalError(ModgdError, ArithmeticError):
    pass


class ConfigError(ModgdError, ValueError):
    pass


class PitchFileError(ModgdError, OSError):
    pass


class ModelFileError(ModgdError, OSError):
    pass
