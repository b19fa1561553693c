import numpy as np
from pytest import raises

from py_modgd.tracking.types import PitchTrack, PostprocessConfig, Region, TrackLabel
from py_modgd.tracking.voicing import detect_single_or_silent, flux_threshold, splice_monopitch


def test_detect_single_or_silent():
    regions = detect_single_or_silent(
        flux_series=[0.0, 0.1, 0.1, 5.0, 0.1],
        energy_series=[0.0, 1.0, 1.0, 1.0, 1.0],
        peak_counts=[0, 1, 2, 1, 1],
    )
    assert regions == [Region.NONE, Region.ONE, Region.TWO, Region.TWO, Region.ONE]


def test_flux_threshold_uses_active_frames_only():
    cfg = PostprocessConfig(flux_percentile=25.0, flux_margin=4.0)
    flux = np.array([100.0, 0.1, 0.1, 5.0, 0.1])
    active = np.array([False, True, True, True, True])
    assert np.isclose(flux_threshold(flux, active, cfg), 0.4)
    assert flux_threshold(flux, np.zeros(5, dtype=bool), cfg) == 0.0


def test_all_silent_input():
    assert detect_single_or_silent([0.0, 0.0], [0.0, 0.0], [0, 0]) == [Region.NONE, Region.NONE]


def test_detect_rejects_mismatched_series():
    with raises(ValueError):
        detect_single_or_silent([0.0], [1.0, 1.0], [1, 1])


def test_splice_monopitch_follows_nearest_track():
    high = PitchTrack(f0=np.array([200.0, 0.0, 210.0]), label=TrackLabel.HIGH)
    low = PitchTrack(f0=np.array([100.0, 0.0, 0.0]), label=TrackLabel.LOW)

    high, low = splice_monopitch(
        high, low, [Region.TWO, Region.ONE, Region.ONE], [None, 205.0, None]
    )

    assert high.f0.tolist() == [200.0, 205.0, 0.0]
    assert low.f0.tolist() == [100.0, 0.0, 0.0]


def test_splice_monopitch_without_history_goes_low():
    high = PitchTrack(f0=np.array([0.0, 180.0]), label=TrackLabel.HIGH)
    low = PitchTrack(f0=np.array([0.0, 90.0]), label=TrackLabel.LOW)

    high, low = splice_monopitch(high, low, [Region.ONE, Region.TWO], [120.0, None])

    assert high.f0.tolist() == [0.0, 180.0]
    assert low.f0.tolist() == [120.0, 90.0]
