__all__ = [
    "config",
    "declarative",
    "evaluation",
    "lab",
    "modgd",
    "pitch",
    "spectral",
    "speaker_count",
    "tracking",
]

from py_modgd import declarative
from py_modgd import spectral
from py_modgd import modgd
from py_modgd import pitch
from py_modgd import tracking
from py_modgd import speaker_count
from py_modgd import config
from py_modgd import evaluation
from py_modgd import lab
