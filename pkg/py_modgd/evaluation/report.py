import csv
from pathlib import Path
from typing import Sequence

from pydantic import BaseModel

from py_modgd.evaluation.types import ConditionSummary, EvalReport, UtteranceScore

REPORT_COLUMNS = ("accuracy_10", "accuracy_20", "e_fs", "mean_fine_error", "n_voiced", "n_correct")
SUMMARY_COLUMNS = tuple(ConditionSummary.model_fields)


def _cell(value: object) -> str:
    return f"{value:.2f}" if isinstance(value, float) else str(value)


def format_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """Left-aligned first column, right-aligned numbers."""
    cells = [list(header)] + [[_cell(value) for value in row] for row in rows]
    widths = [max(len(row[column]) for row in cells) for column in range(len(header))]
    lines = []
    for row in cells:
        first = row[0].ljust(widths[0])
        rest = [value.rjust(width) for value, width in zip(row[1:], widths[1:])]
        lines.append("  ".join([first] + rest))
    return "\n".join(lines) + "\n"


def report_rows(scores: Sequence[UtteranceScore]) -> list[list[object]]:
    return [
        [score.utterance, score.condition, score.speaker]
        + [getattr(score.report, column) for column in REPORT_COLUMNS]
        for score in scores
    ]


def format_reports(scores: Sequence[UtteranceScore]) -> str:
    return format_table(("utterance", "condition", "speaker") + REPORT_COLUMNS, report_rows(scores))


def format_summaries(summaries: Sequence[ConditionSummary]) -> str:
    return format_table(SUMMARY_COLUMNS, [_model_row(summary) for summary in summaries])


def _model_row(model: BaseModel) -> list[object]:
    return list(model.model_dump().values())


def write_reports_csv(path: str | Path, scores: Sequence[UtteranceScore]) -> None:
    _write_csv(path, ("utterance", "condition", "speaker") + REPORT_COLUMNS, report_rows(scores))


def write_summaries_csv(path: str | Path, summaries: Sequence[ConditionSummary]) -> None:
    _write_csv(path, SUMMARY_COLUMNS, [_model_row(summary) for summary in summaries])


def _write_csv(path: str | Path, header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def speaker_scores(
    utterance: str, condition: str, reports: Sequence[EvalReport]
) -> list[UtteranceScore]:
    return [
        UtteranceScore(utterance=utterance, condition=condition, speaker=index, report=report)
        for index, report in enumerate(reports)
    ]
