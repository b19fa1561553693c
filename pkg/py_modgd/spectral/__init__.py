__all__ = [
    "CepstralEnvelopeConfig",
    "FlattenedSpectrum",
    "FrameConfig",
    "PowerSpectrum",
    "SignalBuffer",
    "Window",
    "cepstral_envelope",
    "cepstral_smooth",
    "flatten_spectrum",
    "flux_series",
    "frame_signal",
    "power_spectrum",
    "read_wav",
    "spectral_flux",
    "write_wav",
]

from py_modgd.spectral.audio_io import read_wav, write_wav
from py_modgd.spectral.framing import frame_signal
from py_modgd.spectral.transforms import (
    cepstral_envelope,
    cepstral_smooth,
    flatten_spectrum,
    flux_series,
    power_spectrum,
    spectral_flux,
)
from py_modgd.spectral.types import (
    CepstralEnvelopeConfig,
    FlattenedSpectrum,
    FrameConfig,
    PowerSpectrum,
    SignalBuffer,
    Window,
)
