import numpy as np
from pytest import raises

from py_modgd.config.types import Grouping, PipelineConfig
from py_modgd.errors import EmptyInputError
from py_modgd.evaluation.metrics import evaluate_track, score_pair
from py_modgd.lab.scenario import ScenarioMapper, render_scenario
from py_modgd.pipeline import estimate_trajectories
from py_modgd.spectral.types import SignalBuffer
from py_modgd.tracking.types import Region


def test_two_steady_talkers(make_signal):
    result = estimate_trajectories(make_signal((120.0, 210.0), duration=1.0))

    assert result.n_frames == 98
    assert result.times[1] == 0.01
    assert len(result.per_frame) == len(result.regions) == result.flux.size == 98
    high = evaluate_track(result.high, np.full(98, 210.0))
    low = evaluate_track(result.low, np.full(98, 120.0))
    assert high.accuracy_20 >= 50.0
    assert low.accuracy_20 >= 50.0


def test_silence_gives_unvoiced_tracks():
    silent = SignalBuffer(samples=np.zeros(8000), sample_rate=16000)

    result = estimate_trajectories(silent)

    assert set(result.regions) == {Region.NONE}
    assert not result.high.f0.any()
    assert not result.low.f0.any()


def test_estimates_are_deterministic(make_signal):
    signal = make_signal((130.0, 230.0), duration=0.4)
    config = PipelineConfig(workers=2)

    first = estimate_trajectories(signal, config)
    second = estimate_trajectories(signal, config)

    assert np.array_equal(first.high.f0, second.high.f0)
    assert np.array_equal(first.low.f0, second.low.f0)


def test_continuity_grouping(make_signal):
    result = estimate_trajectories(
        make_signal((120.0, 210.0), duration=0.5), PipelineConfig(grouping=Grouping.DP)
    )
    assert result.high.f0.size == result.low.f0.size == result.n_frames
    assert result.high.f0.any()


def test_intermediates_are_kept_on_request(make_signal):
    signal = make_signal((150.0,), duration=0.2)

    plain = estimate_trajectories(signal)
    kept = estimate_trajectories(signal, keep_intermediates=True)

    assert plain.intermediates is None
    assert kept.intermediates.flattened.shape == (kept.n_frames, 1025)
    assert kept.intermediates.modgd_pass1.shape == kept.intermediates.modgd_pass2.shape


def test_empty_signal_fails():
    with raises(EmptyInputError):
        estimate_trajectories(SignalBuffer(samples=np.zeros(0), sample_rate=16000))


def test_steady_two_talker_mixture_is_tracked_on_both_talkers():
    scenario = ScenarioMapper().map(
        {
            "name": "steady-200-280",
            "duration_s": "2.0",
            "tmr_db": "0",
            "source1.f0_start": "200",
            "source1.harmonics": "5",
            "source2.f0_start": "280",
            "source2.harmonics": "5",
        }
    )
    rendered = render_scenario(scenario)

    result = estimate_trajectories(rendered.mixture)

    reports = score_pair((result.low, result.high), rendered.references)
    assert all(report.accuracy_10 >= 95.0 for report in reports)
