from statistics import mean

from pydantic import BaseModel
from pytest import raises

from py_modgd.declarative import RecordAggregator


class Score(BaseModel):
    utterance: str
    condition: str
    accuracy: float


def test_aggregator_field_tuple_aggregation():
    class Accuracies(BaseModel):
        values: list[float]

    class AccuracyAggregator(RecordAggregator[Accuracies, Score]):
        aggregations = {"values": ("accuracy", list)}

    assert AccuracyAggregator().aggregate(
        [Score(utterance="a", condition="clean", accuracy=90.0), Score(utterance="b", condition="clean", accuracy=80.0)]
    ) == [Accuracies(values=[90.0, 80.0])]


def test_aggregator_group_by_field():
    class Summary(BaseModel):
        condition: str
        accuracy: float

    class ConditionAggregator(RecordAggregator[Summary, Score]):
        group_by = ("condition",)
        aggregations = {
            "condition": ("condition", lambda values: values[0]),
            "accuracy": ("accuracy", mean),
        }

    assert ConditionAggregator().aggregate(
        [
            Score(utterance="a", condition="clean", accuracy=90.0),
            Score(utterance="b", condition="white", accuracy=60.0),
            Score(utterance="c", condition="clean", accuracy=70.0),
        ]
    ) == [Summary(condition="clean", accuracy=80.0), Summary(condition="white", accuracy=60.0)]


def test_aggregator_group_by_extractor():
    class Summary(BaseModel):
        utterances: list[str]

    class NoisyAggregator(RecordAggregator[Summary, Score]):
        @staticmethod
        def is_noisy(score: Score) -> bool:
            return score.condition != "clean"

        group_by = (is_noisy,)
        aggregations = {"utterances": ("utterance", list)}

    assert NoisyAggregator().aggregate(
        [
            Score(utterance="a", condition="clean", accuracy=90.0),
            Score(utterance="b", condition="white", accuracy=60.0),
            Score(utterance="c", condition="babble", accuracy=70.0),
        ]
    ) == [Summary(utterances=["a"]), Summary(utterances=["b", "c"])]


def test_aggregator_with_sort_by_field():
    class Summary(BaseModel):
        utterances: list[str]

    class SortedAggregator(RecordAggregator[Summary, Score]):
        sort_by = ("accuracy",)
        aggregations = {"utterances": ("utterance", list)}

    assert SortedAggregator().aggregate(
        [
            Score(utterance="a", condition="clean", accuracy=90.0),
            Score(utterance="b", condition="clean", accuracy=60.0),
            Score(utterance="c", condition="clean", accuracy=70.0),
        ]
    ) == [Summary(utterances=["b", "c", "a"])]


def test_aggregator_with_group_callable_and_context():
    class Summary(BaseModel):
        passed: int

    class PassAggregator(RecordAggregator[Summary, Score]):
        def count_passed(self, group: list[Score]) -> int:
            return sum(score.accuracy >= self.context["threshold"] for score in group)

        aggregations = {"passed": count_passed}

    aggregator = PassAggregator(context={"threshold": 75.0})
    assert aggregator.aggregate(
        [
            Score(utterance="a", condition="clean", accuracy=90.0),
            Score(utterance="b", condition="clean", accuracy=60.0),
        ]
    ) == [Summary(passed=1)]


def test_aggregator_empty_input():
    class Summary(BaseModel):
        n: int

    class CountAggregator(RecordAggregator[Summary, Score]):
        group_by = ("condition",)
        aggregations = {"n": len}

    assert CountAggregator().aggregate([]) == []


def test_aggregator_missing_required_field_fails():
    class Summary(BaseModel):
        condition: str
        accuracy: float

    class IncompleteAggregator(RecordAggregator[Summary, Score]):
        aggregations = {"condition": ("condition", lambda values: values[0])}

    with raises(ValueError):
        IncompleteAggregator()


def test_aggregator_extra_field_fails():
    class Summary(BaseModel):
        accuracy: float

    class ExtraAggregator(RecordAggregator[Summary, Score]):
        aggregations = {"accuracy": ("accuracy", mean), "spread": ("accuracy", max)}

    with raises(ValueError):
        ExtraAggregator()


def test_aggregator_without_aggregations_fails():
    class Summary(BaseModel):
        accuracy: float = 0.0

    class EmptyAggregator(RecordAggregator[Summary, Score]):
        pass

    with raises(ValueError):
        EmptyAggregator()
