import numpy as np
from pytest import raises

from py_modgd.errors import EmptyInputError
from py_modgd.lab.scenario import render_count_clip
from py_modgd.speaker_count.classifier import (
    class_scores,
    classify_features,
    confusion_matrix,
    count_speakers,
    format_confusion,
    overall_accuracy,
    train_count_models,
    train_test_split,
)
from py_modgd.speaker_count.smcc import smcc_features
from py_modgd.speaker_count.types import (
    CountModelSet,
    CountOutcome,
    GmmConfig,
    GmmModel,
    SmccFeatures,
)


def unit_model(label: int, mean: float = 0.0) -> GmmModel:
    return GmmModel(
        class_label=label, weights=[1.0], means=np.full((1, 2), mean), variances=np.ones((1, 2))
    )


def features(mean: float, seed: int = 0, n: int = 50) -> SmccFeatures:
    return SmccFeatures(vectors=np.random.default_rng(seed).normal(mean, 1.0, (n, 2)))


def test_classify_picks_best_model():
    models = [unit_model(1, 0.0), unit_model(2, 5.0)]
    assert classify_features(features(5.0), models) == 2
    assert classify_features(features(0.0), models) == 1


def test_classify_ties_go_to_fewer_speakers():
    models = [unit_model(3), unit_model(2), unit_model(1)]
    assert classify_features(features(0.0), models) == 1


def test_class_scores_sum_frame_likelihoods():
    scores = class_scores(features(0.0, n=2), [unit_model(1), unit_model(2, 1.0)])
    assert set(scores) == {1, 2}
    assert scores[1] > scores[2]


def test_classify_rejects_bad_input():
    with raises(EmptyInputError):
        classify_features(SmccFeatures(vectors=np.zeros((0, 2))), [unit_model(1)])
    with raises(ValueError):
        classify_features(features(0.0), [])


def test_train_count_models_in_label_order():
    cfg = GmmConfig(n_components=2)
    data = {2: [features(5.0, 1), features(5.0, 2)], 1: [features(0.0, 3)]}

    serial = train_count_models(data, cfg)
    threaded = train_count_models(data, cfg, workers=2)

    assert [model.class_label for model in serial] == [1, 2]
    for one, other in zip(serial, threaded):
        assert np.array_equal(one.means, other.means)


def test_train_test_split():
    labels = [1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3]

    train, test = train_test_split(labels, seed=4)

    assert sorted(train + test) == list(range(len(labels)))
    assert [labels[index] for index in train].count(1) == 3
    assert [labels[index] for index in train].count(2) == 3
    assert 10 in train
    assert (train, test) == train_test_split(labels, seed=4)
    with raises(ValueError):
        train_test_split(labels, train_fraction=1.0)


def test_confusion_matrix():
    outcomes = [
        CountOutcome(clip="a", true_label=1, predicted_label=1),
        CountOutcome(clip="b", true_label=1, predicted_label=2),
        CountOutcome(clip="c", true_label=2, predicted_label=2),
        CountOutcome(clip="d", true_label=1, predicted_label=1),
    ]

    one, two = confusion_matrix(outcomes)

    assert (one.true_label, one.n_clips, one.predicted, one.accuracy) == (1, 3, {1: 2, 2: 1}, 200 / 3)
    assert (two.true_label, two.n_clips, two.predicted, two.accuracy) == (2, 1, {1: 0, 2: 1}, 100.0)
    assert overall_accuracy(outcomes) == 75.0

    table = format_confusion([one, two]).splitlines()
    assert table[0].split()[-3:] == ["SP-1", "SP-2", "accuracy"]
    assert table[1].split() == ["SP-1", "2", "1", "66.67"]


def test_overall_accuracy_of_nothing_fails():
    with raises(EmptyInputError):
        overall_accuracy([])


def test_count_speakers_end_to_end():
    cfg = GmmConfig(n_components=2)
    data = {
        label: [smcc_features(render_count_clip(label, duration_s=0.5, seed=seed)) for seed in (0, 1)]
        for label in (1, 2)
    }
    model_set = CountModelSet(models=train_count_models(data, cfg))

    assert count_speakers(render_count_clip(1, duration_s=0.5, seed=7), model_set) in {1, 2}


def test_count_speakers_ignores_the_level():
    cfg = GmmConfig(n_components=2)
    data = {
        label: [smcc_features(render_count_clip(label, duration_s=0.5, seed=seed)) for seed in (0, 1)]
        for label in (1, 2)
    }
    model_set = CountModelSet(models=train_count_models(data, cfg))
    clip = render_count_clip(2, duration_s=0.5, seed=8)
    quiet = clip.model_copy(update={"samples": 0.01 * clip.samples})

    assert np.allclose(smcc_features(quiet).vectors, smcc_features(clip).vectors, atol=1e-6)
    assert count_speakers(quiet, model_set) == count_speakers(clip, model_set)
