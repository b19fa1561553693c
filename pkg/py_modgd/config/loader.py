import logging
from pathlib import Path

from pydantic import ValidationError

from py_modgd.config.mappers import PipelineMapper
from py_modgd.config.settings_file import check_known_keys, read_settings_file
from py_modgd.config.types import PipelineConfig
from py_modgd.declarative import FlatSettings
from py_modgd.errors import ConfigError

logger = logging.getLogger(__name__)


def pipeline_config_from_settings(
    settings: FlatSettings, source: str = "<settings>"
) -> PipelineConfig:
    """
    Raises:
        ConfigError: If a key is unknown or a value breaks a section's constraints.
    """
    mapper = PipelineMapper()
    check_known_keys(settings, mapper.known_keys(), source)
    try:
        return mapper.map(settings)
    except ValidationError as error:
        raise ConfigError(f"Invalid configuration in {source}: {error}") from error


def load_pipeline_config(
    path: str | Path | None = None, overrides: FlatSettings | None = None
) -> PipelineConfig:
    """
    Reads a flat settings file, when given, and applies `overrides` on top.

    Command-line flags arrive as overrides, so they win over the file.
    """
    settings = read_settings_file(path) if path is not None else {}
    settings.update({key: value for key, value in (overrides or {}).items() if value is not None})
    source = str(path) if path is not None else "command line"
    config = pipeline_config_from_settings(settings, source)
    logger.debug("Loaded configuration from %s: %d explicit keys", source, len(settings))
    return config
