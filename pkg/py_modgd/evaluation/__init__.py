__all__ = [
    "ConditionSummary",
    "ConditionSummaryAggregator",
    "EvalReport",
    "ReferencePitch",
    "UtteranceScore",
    "accuracy",
    "evaluate_track",
    "fine_pitch_stats",
    "format_reports",
    "format_summaries",
    "pair_assignment",
    "score_pair",
    "speaker_scores",
    "summarize_conditions",
    "write_reports_csv",
    "write_summaries_csv",
]

from py_modgd.evaluation.battery import ConditionSummaryAggregator, summarize_conditions
from py_modgd.evaluation.metrics import (
    accuracy,
    evaluate_track,
    fine_pitch_stats,
    pair_assignment,
    score_pair,
)
from py_modgd.evaluation.report import (
    format_reports,
    format_summaries,
    speaker_scores,
    write_reports_csv,
    write_summaries_csv,
)
from py_modgd.evaluation.types import (
    ConditionSummary,
    EvalReport,
    ReferencePitch,
    UtteranceScore,
)
