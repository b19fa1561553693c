from collections import defaultdict
from typing import Any, Callable, Generic, Mapping

from py_modgd.declarative.resolver import CallableResolver
from py_modgd.types import SourceRecord, TargetRecord

KeyAccessor = str | Callable[[SourceRecord], Any]
Aggregation = (
    tuple[str, Callable[[list[Any]], Any]] | Callable[[list[SourceRecord]], Any]
)


class RecordAggregator(Generic[TargetRecord, SourceRecord], CallableResolver):
    """
    Groups a list of source records and folds every group into one target record.

    Attributes:
        group_by (tuple[str | Callable[[SourceRecord], Any], ...] | None):
            Field names, or callables extracting a key from a record, to group by.
            Groups are emitted in order of first appearance after sorting.
            Defaults to None (a single group).
        sort_by (tuple[str | Callable[[SourceRecord], Any], ...] | None):
            Field names or callables to sort the records by before grouping.
            Defaults to None.
        aggregations (Mapping[str, tuple[str, Callable[[list[Any]], Any]] | Callable[[list[SourceRecord]], Any]]):
            For each field of the target record:
                - A tuple with a source field name and a callable receiving the
                    values of that field across the group, in `sort_by` order.
                - A callable receiving the whole group, in `sort_by` order.
        context (Mapping[str, Any] | None):
            Instance specific parameters available to aggregation methods.

    Methods:
        aggregate(data: list[SourceRecord]) -> list[TargetRecord]:
            Aggregates the source records into target records.

    Raises:
        ValueError:
            If the aggregator does not define aggregations, leaves a required
            target field unaggregated or aggregates a field the target lacks.
    """

    group_by: tuple[KeyAccessor, ...] | None = None
    sort_by: tuple[KeyAccessor, ...] | None = None
    aggregations: Mapping[str, Aggregation]

    context: Mapping[str, Any] | None = None

    def __init__(self, context: Mapping[str, Any] | None = None) -> None:
        self.assert_is_valid_aggregator()

        self.context = context

    def aggregate(self, data: list[SourceRecord]) -> list[TargetRecord]:
        if self.sort_by is not None:
            data = sorted(data, key=lambda item: self.resolve_key(item, self.sort_by))

        groups = self.group_data(data) if self.group_by is not None else [data]
        target_model = self.target_model()

        return [
            target_model(
                **{
                    field_name: self.resolve_aggregation(aggregation, group)
                    for field_name, aggregation in self.aggregations.items()
                }
            )
            for group in groups
            if group
        ]

    def group_data(self, data: list[SourceRecord]) -> list[list[SourceRecord]]:
        groups = defaultdict(list)
        for item in data:
            groups[self.resolve_key(item, self.group_by)].append(item)

        return list(groups.values())

    def resolve_key(
        self, item: SourceRecord, accessors: tuple[KeyAccessor, ...]
    ) -> tuple[Any, ...]:
        return tuple(
            getattr(item, accessor)
            if isinstance(accessor, str)
            else self.resolve_callable(accessor)(item)
            for accessor in accessors
        )

    def resolve_aggregation(
        self, aggregation: Aggregation, group: list[SourceRecord]
    ) -> Any:
        if isinstance(aggregation, tuple):
            source_field, function = aggregation
            return self.resolve_callable(function)(
                [getattr(item, source_field) for item in group]
            )

        return self.resolve_callable(aggregation)(group)

    @classmethod
    def target_model(cls) -> type[TargetRecord]:
        return cls.generic_argument(0)

    def assert_is_valid_aggregator(self) -> None:
        """Asserts that every aggregated group can be turned into a target record."""
        if getattr(self, "aggregations", None) is None:
            raise ValueError("Aggregator must define an aggregations attribute.")

        target_model = self.target_model()
        defined = set(self.aggregations.keys())
        required = {
            name for name, field in target_model.model_fields.items() if field.is_required()
        }

        missing_required = required.difference(defined)
        if missing_required:
            fields = ", ".join(sorted(missing_required))
            raise ValueError(
                f"Fields {fields} in the target model {target_model.__name__} "
                "do not have an aggregation in the aggregator."
            )

        extra_fields = defined.difference(target_model.model_fields)
        if extra_fields:
            fields = ", ".join(sorted(extra_fields))
            raise ValueError(
                f"Fields {fields} in the aggregator do not exist "
                f"in the target model {target_model.__name__}."
            )
