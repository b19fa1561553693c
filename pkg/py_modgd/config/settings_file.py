import logging
from pathlib import Path
from typing import Iterable, Mapping

from py_modgd.errors import ConfigError

logger = logging.getLogger(__name__)


def parse_settings(text: str, source: str = "<settings>") -> dict[str, str]:
    """
    Parses flat `key = value` lines. Blank lines and `#` comments are skipped.

    Raises:
        ConfigError: If a line has no `=`, an empty key, or repeats a key.
    """
    settings: dict[str, str] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue

        key, separator, value = line.partition("=")
        key = key.strip()
        if not separator or not key:
            raise ConfigError(f"{source}:{number}: expected `key = value`, got {raw_line!r}.")
        if key in settings:
            raise ConfigError(f"{source}:{number}: duplicate key {key!r}.")
        settings[key] = value.strip()

    return settings


def read_settings_file(path: str | Path) -> dict[str, str]:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"No such settings file: {path}")
    settings = parse_settings(path.read_text(encoding="utf-8"), source=str(path))
    logger.debug("Read %d settings from %s", len(settings), path)
    return settings


def dump_settings(settings: Mapping[str, str]) -> str:
    return "".join(f"{key} = {value}\n" for key, value in settings.items())


def write_settings_file(path: str | Path, settings: Mapping[str, str]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_settings(settings), encoding="utf-8")


def check_known_keys(settings: Mapping[str, str], known: Iterable[str], source: str) -> None:
    unknown = set(settings).difference(known)
    if unknown:
        raise ConfigError(f"Unknown keys in {source}: {', '.join(sorted(unknown))}.")
