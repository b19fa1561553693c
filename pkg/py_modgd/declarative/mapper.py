from typing import Any, Callable, Generic, Mapping

from py_modgd.declarative.resolver import CallableResolver
from py_modgd.types import TargetRecord

FlatSettings = Mapping[str, str]
FieldMapping = str | tuple[str, Callable[[str], Any]] | Callable[[FlatSettings], Any]

MISSING = object()


class SettingsMapper(Generic[TargetRecord], CallableResolver):
    """
    Maps flat `key=value` settings onto a pydantic model.

    Attributes:
        mapping (Mapping[str, str | tuple[str, Callable[[str], Any]] | Callable[[FlatSettings], Any]]):
            For each field of the target model, where its value comes from:
                - A string naming a flat key; the raw string is handed to pydantic,
                    which coerces it to the field type.
                - A tuple with a flat key and a converter applied to the raw string.
                - A callable that receives every flat setting and returns the value,
                    or `MISSING` to keep the model default.
            Fields whose flat key is absent keep their model default.
        consumed_keys (tuple[str, ...]):
            Flat keys read by callables in `mapping`, declared so that unknown
            keys can be detected.

    Methods:
        map(settings: FlatSettings) -> TargetRecord:
            Builds the target model from the flat settings.
        known_keys() -> set[str]:
            Every flat key this mapper understands.

    Raises:
        ValueError:
            If the mapper does not define a mapping, or maps a field that does
            not exist in the target model.
    """

    mapping: Mapping[str, FieldMapping]
    consumed_keys: tuple[str, ...] = ()

    def __init__(self) -> None:
        self.assert_is_valid_mapper()

    def map(self, settings: FlatSettings) -> TargetRecord:
        resolved = dict()
        for field_name, field_mapping in self.mapping.items():
            value = self.resolve_field(settings, field_mapping)
            if value is not MISSING:
                resolved[field_name] = value

        return self.target_model()(**resolved)

    def resolve_field(self, settings: FlatSettings, field_mapping: FieldMapping) -> Any:
        if isinstance(field_mapping, str):
            return settings.get(field_mapping, MISSING)

        if isinstance(field_mapping, tuple):
            key, converter = field_mapping
            if key not in settings:
                return MISSING
            return self.resolve_callable(converter)(settings[key])

        return self.resolve_callable(field_mapping)(settings)

    def known_keys(self) -> set[str]:
        keys = set(self.consumed_keys)
        for field_mapping in self.mapping.values():
            if isinstance(field_mapping, str):
                keys.add(field_mapping)
            elif isinstance(field_mapping, tuple):
                keys.add(field_mapping[0])
        return keys

    @classmethod
    def target_model(cls) -> type[TargetRecord]:
        return cls.generic_argument(0)

    def assert_is_valid_mapper(self) -> None:
        if getattr(self, "mapping", None) is None:
            raise ValueError("The mapper must define a mapping dictionary.")

        target_model = self.target_model()
        extra_fields = set(self.mapping.keys()).difference(target_model.model_fields)
        if extra_fields:
            fields = ", ".join(sorted(extra_fields))
            raise ValueError(
                f"Fields {fields} in the mapper do not exist "
                f"in target model {target_model.__name__}."
            )
