__all__ = [
    "GdParts",
    "ModgdConfig",
    "ModgdVector",
    "PeakPick",
    "gd_parts",
    "group_delay",
    "modgd_of_flattened",
    "modified_group_delay",
    "peak_candidates",
    "pick_peak",
]

from py_modgd.modgd.group_delay import (
    gd_parts,
    group_delay,
    modgd_of_flattened,
    modified_group_delay,
)
from py_modgd.modgd.peaks import peak_candidates, pick_peak
from py_modgd.modgd.types import GdParts, ModgdConfig, ModgdVector, PeakPick
