import logging

import numpy as np

from py_modgd.config.types import PipelineConfig
from py_modgd.evaluation.metrics import score_pair
from py_modgd.evaluation.report import speaker_scores
from py_modgd.evaluation.types import UtteranceScore
from py_modgd.lab.scenario import ScenarioMapper, render_count_clip, render_scenario
from py_modgd.lab.types import Category
from py_modgd.pipeline import estimate_trajectories
from py_modgd.speaker_count.classifier import classify_features, train_count_models, train_test_split
from py_modgd.speaker_count.smcc import smcc_features
from py_modgd.speaker_count.types import CountModelSet, CountOutcome

logger = logging.getLogger(__name__)

LOW_TALKER_RANGE = (100.0, 140.0)
HIGH_TALKER_RANGE = (180.0, 240.0)
BATTERY_JITTER = 0.05


def pitch_battery(
    n_mixtures: int = 40,
    category: Category = Category.CLEAN,
    seed: int = 0,
    config: PipelineConfig | None = None,
    duration_s: float = 2.0,
) -> list[UtteranceScore]:
    """
    Scores the estimator on seeded cross-gender mixtures, one score per talker.

    Talker pitches are drawn from 100-140 Hz and 180-240 Hz and wobble by up
    to 5 %. The same seed always draws the same battery.
    """
    config = config or PipelineConfig()
    rng = np.random.default_rng(seed)
    mapper = ScenarioMapper()

    scores = []
    for index in range(n_mixtures):
        name = f"{category}-{index:03d}"
        scenario = mapper.map(
            {
                "name": name,
                "category": str(category),
                "duration_s": str(duration_s),
                "frame_len_ms": str(config.frames.frame_len_ms),
                "hop_ms": str(config.frames.hop_ms),
                "source1.f0_start": str(rng.uniform(*LOW_TALKER_RANGE)),
                "source1.jitter": str(BATTERY_JITTER),
                "source2.f0_start": str(rng.uniform(*HIGH_TALKER_RANGE)),
                "source2.jitter": str(BATTERY_JITTER),
                "seed": str(int(rng.integers(0, 2**31))),
            }
        )
        rendered = render_scenario(scenario)
        result = estimate_trajectories(rendered.mixture, config)
        reports = score_pair((result.low, result.high), rendered.references)
        scores.extend(speaker_scores(name, str(category), reports))

    logger.info("Scored %d %s mixtures", n_mixtures, category)
    return scores


def count_experiment(
    n_clips: int = 100,
    max_speakers: int = 2,
    seed: int = 0,
    config: PipelineConfig | None = None,
    duration_s: float = 2.0,
) -> tuple[CountModelSet, list[CountOutcome]]:
    """
    Trains speaker-count models on 60 % of seeded synthetic clips per class and
    classifies the remaining 40 %.
    """
    config = config or PipelineConfig()
    rng = np.random.default_rng(seed)

    labels = [1 + index % max_speakers for index in range(n_clips)]
    features = [
        smcc_features(
            render_count_clip(label, duration_s, seed=int(rng.integers(0, 2**31))),
            config.smcc,
        )
        for label in labels
    ]

    train, test = train_test_split(labels, seed=seed)
    by_class: dict[int, list] = {}
    for index in train:
        by_class.setdefault(labels[index], []).append(features[index])

    models = train_count_models(by_class, config.gmm, workers=config.workers)
    outcomes = [
        CountOutcome(
            clip=f"clip-{index:03d}",
            true_label=labels[index],
            predicted_label=classify_features(features[index], models),
        )
        for index in test
    ]
    return CountModelSet(smcc=config.smcc, models=models), outcomes
