__all__ = [
    "Grouping",
    "PipelineConfig",
    "PipelineMapper",
    "check_known_keys",
    "load_pipeline_config",
    "parse_settings",
    "pipeline_config_from_settings",
    "read_settings_file",
    "write_settings_file",
]

from py_modgd.config.loader import load_pipeline_config, pipeline_config_from_settings
from py_modgd.config.mappers import PipelineMapper
from py_modgd.config.settings_file import (
    check_known_keys,
    parse_settings,
    read_settings_file,
    write_settings_file,
)
from py_modgd.config.types import Grouping, PipelineConfig
