import math

from py_modgd.declarative import RecordAggregator
from py_modgd.evaluation.types import ConditionSummary, UtteranceScore


class ConditionSummaryAggregator(RecordAggregator[ConditionSummary, UtteranceScore]):
    """
    Pools utterance scores per condition.

    Accuracies are weighted by voiced frames. The fine pitch statistics are
    rebuilt from each report's sums over its correct frames, so the pooled
    E_fs is the spread over every correct frame of the condition.
    """

    def first(self, values: list[str]) -> str:
        return values[0]

    def count_utterances(self, values: list[str]) -> int:
        return len(set(values))

    def voiced_frames(self, group: list[UtteranceScore]) -> int:
        return sum(score.report.n_voiced for score in group)

    def weighted_accuracy(self, group: list[UtteranceScore], field: str) -> float:
        n_voiced = self.voiced_frames(group)
        if n_voiced == 0:
            return 0.0
        hits = sum(getattr(score.report, field) * score.report.n_voiced for score in group)
        return hits / n_voiced

    def accuracy_10(self, group: list[UtteranceScore]) -> float:
        return self.weighted_accuracy(group, "accuracy_10")

    def accuracy_20(self, group: list[UtteranceScore]) -> float:
        return self.weighted_accuracy(group, "accuracy_20")

    def pooled_moments(self, group: list[UtteranceScore]) -> tuple[float, float]:
        n = sum(score.report.n_correct for score in group)
        if n == 0:
            return 0.0, 0.0
        total = sum(score.report.n_correct * score.report.mean_fine_error for score in group)
        squares = sum(
            score.report.n_correct * (score.report.e_fs**2 + score.report.mean_fine_error**2)
            for score in group
        )
        mean = total / n
        return mean, math.sqrt(max(squares / n - mean**2, 0.0))

    def pooled_mean(self, group: list[UtteranceScore]) -> float:
        return self.pooled_moments(group)[0]

    def pooled_spread(self, group: list[UtteranceScore]) -> float:
        return self.pooled_moments(group)[1]

    group_by = ("condition",)
    sort_by = ("condition", "utterance", "speaker")
    aggregations = {
        "condition": ("condition", first),
        "n_utterances": ("utterance", count_utterances),
        "n_voiced": voiced_frames,
        "accuracy_10": accuracy_10,
        "accuracy_20": accuracy_20,
        "e_fs": pooled_spread,
        "mean_fine_error": pooled_mean,
    }


def summarize_conditions(scores: list[UtteranceScore]) -> list[ConditionSummary]:
    return ConditionSummaryAggregator().aggregate(scores)
