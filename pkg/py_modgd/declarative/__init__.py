__all__ = [
    "CallableResolver",
    "FlatSettings",
    "MISSING",
    "RecordAggregator",
    "SettingsMapper",
]

from py_modgd.declarative.aggregator import RecordAggregator
from py_modgd.declarative.mapper import MISSING, FlatSettings, SettingsMapper
from py_modgd.declarative.resolver import CallableResolver
