from typing import Callable

from pydantic import BaseModel

from py_modgd.config.types import PipelineConfig
from py_modgd.declarative import FlatSettings, SettingsMapper
from py_modgd.modgd.types import ModgdConfig
from py_modgd.pitch.types import CombConfig, PitchRange, SalienceConfig
from py_modgd.spectral.types import CepstralEnvelopeConfig, FrameConfig
from py_modgd.speaker_count.types import GmmConfig, SmccConfig
from py_modgd.tracking.types import PostprocessConfig


def section(mapper: type[SettingsMapper]) -> Callable[[FlatSettings], BaseModel]:
    """Maps a nested config section from the same flat settings."""

    def map_section(settings: FlatSettings) -> BaseModel:
        return mapper().map(settings)

    return map_section


class FrameSectionMapper(SettingsMapper[FrameConfig]):
    mapping = {
        "frame_len_ms": "frame_len_ms",
        "hop_ms": "hop_ms",
        "window": "window",
        "n_fft": "n_fft",
    }


class EnvelopeSectionMapper(SettingsMapper[CepstralEnvelopeConfig]):
    mapping = {"lifter_len": "lifter"}


class ModgdSectionMapper(SettingsMapper[ModgdConfig]):
    mapping = {
        "alpha": "alpha",
        "gamma": "gamma",
        "lifter_len": "modgd_lifter",
    }


class PitchRangeSectionMapper(SettingsMapper[PitchRange]):
    mapping = {"f_min": "fmin", "f_max": "fmax"}


class CombSectionMapper(SettingsMapper[CombConfig]):
    mapping = {"alpha_c": "comb_alpha"}


class SalienceSectionMapper(SettingsMapper[SalienceConfig]):
    mapping = {
        "relative_threshold": "relative_threshold",
        "silence_rms": "silence_rms",
        "min_prominence": "min_prominence",
        "harmonic_guard": "harmonic_guard",
    }


class PostprocessSectionMapper(SettingsMapper[PostprocessConfig]):
    mapping = {
        "rho": "rho",
        "max_gap_ms": "max_gap_ms",
        "stray_window": "stray_window",
        "flux_percentile": "flux_percentile",
        "flux_margin": "flux_margin",
    }


class SmccSectionMapper(SettingsMapper[SmccConfig]):
    """SMCC shares the MODGD and envelope settings of the pitch estimator."""

    def map_frames(self, settings: FlatSettings) -> FrameConfig:
        return FrameConfig(
            frame_len_ms=settings.get("smcc_frame_len_ms", 20.0),
            hop_ms=settings.get("smcc_hop_ms", 10.0),
        )

    mapping = {
        "frames": map_frames,
        "envelope": section(EnvelopeSectionMapper),
        "modgd": section(ModgdSectionMapper),
        "flatten_gamma": "flatten_gamma",
        "n_filters": "smcc_filters",
        "n_coeffs": "smcc_coeffs",
    }
    consumed_keys = ("smcc_frame_len_ms", "smcc_hop_ms")


class GmmSectionMapper(SettingsMapper[GmmConfig]):
    mapping = {
        "n_components": "gmm_components",
        "max_iter": "gmm_max_iter",
        "tol": "gmm_tol",
        "variance_floor": "gmm_variance_floor",
        "seed": "seed",
    }


SECTION_MAPPERS: dict[str, type[SettingsMapper]] = {
    "frames": FrameSectionMapper,
    "envelope": EnvelopeSectionMapper,
    "modgd": ModgdSectionMapper,
    "pitch_range": PitchRangeSectionMapper,
    "comb": CombSectionMapper,
    "salience": SalienceSectionMapper,
    "postprocess": PostprocessSectionMapper,
    "smcc": SmccSectionMapper,
    "gmm": GmmSectionMapper,
}


class PipelineMapper(SettingsMapper[PipelineConfig]):
    """
    Flat run settings such as `fmin = 80` or `grouping = dp` onto the nested
    PipelineConfig. Keys a section does not mention keep their defaults.
    """

    mapping = {
        **{field: section(mapper) for field, mapper in SECTION_MAPPERS.items()},
        "flatten_gamma": "flatten_gamma",
        "band_hz": "band_hz",
        "grouping": "grouping",
        "dp_block_len": "dp_block_len",
        "workers": "workers",
        "seed": "seed",
        "input_path": "input",
        "output_path": "output",
    }
    consumed_keys = tuple(
        sorted({key for mapper in SECTION_MAPPERS.values() for key in mapper().known_keys()})
    )
