import numpy as np
from pytest import approx, raises

from py_modgd.errors import EmptyEvaluationError
from py_modgd.evaluation.metrics import (
    accuracy,
    align,
    evaluate_track,
    fine_pitch_stats,
    hits,
    mean_abs_error,
    pair_assignment,
    score_pair,
)
from py_modgd.evaluation.types import EvalReport, ReferencePitch
from py_modgd.tracking.types import PitchTrack, TrackLabel

REF = np.array([100.0, 100.0, 200.0, 0.0, 150.0])


def test_hits_and_accuracy():
    det = np.array([105.0, 115.0, 0.0, 120.0, 150.0])

    assert hits(det, REF, 10).tolist() == [True, False, False, False, True]
    assert accuracy(det, REF, 10) == 50.0
    assert accuracy(det, REF, 20) == 75.0


def test_threshold_is_strict():
    assert accuracy([110.0], [100.0], 10) == 0.0
    assert accuracy([109.0], [100.0], 10) == 100.0


def test_accepts_tracks_and_references():
    det = PitchTrack(f0=np.array([100.0, 0.0]), label=TrackLabel.HIGH)
    ref = ReferencePitch(f0=np.array([100.0, 120.0]))
    assert accuracy(det, ref, 10) == 50.0


def test_align_pads_or_truncates_detection():
    det, ref = align([1.0, 2.0], [5.0, 5.0, 5.0])
    assert det.tolist() == [1.0, 2.0, 0.0]
    det, _ = align([1.0, 2.0, 3.0, 4.0], [5.0, 5.0])
    assert det.tolist() == [1.0, 2.0]


def test_unvoiced_reference_fails():
    with raises(EmptyEvaluationError, match="empty evaluation set"):
        accuracy([100.0, 120.0], [0.0, 0.0], 10)


def test_fine_pitch_stats():
    det = np.array([102.0, 96.0, 0.0, 0.0, 150.0])

    mean, spread = fine_pitch_stats(det, REF)

    errors = np.array([2.0, -4.0, 0.0])
    assert mean == approx(errors.mean())
    assert spread == approx(errors.std())


def test_fine_pitch_stats_without_correct_frames_fails():
    with raises(EmptyEvaluationError):
        fine_pitch_stats([300.0], [100.0])


def test_evaluate_track():
    report = evaluate_track(np.array([102.0, 96.0, 230.0, 0.0, 0.0]), REF)

    assert report.accuracy_10 == 50.0
    assert report.accuracy_20 == 75.0
    assert report.n_voiced == 4
    assert report.n_correct == 2
    assert report.mean_fine_error == approx(-1.0)
    assert report.e_fs == approx(3.0)


def test_evaluate_track_without_correct_frames():
    report = evaluate_track(np.zeros(5), REF)
    assert report == EvalReport(
        accuracy_10=0.0, accuracy_20=0.0, e_fs=0.0, mean_fine_error=0.0, n_voiced=4, n_correct=0
    )


def test_mean_abs_error_counts_missed_frames():
    assert mean_abs_error([0.0, 110.0, 50.0], [100.0, 100.0, 0.0]) == 55.0
    assert mean_abs_error([1.0], [0.0]) == 0.0


def test_pair_assignment():
    low, high = np.array([100.0, 101.0]), np.array([200.0, 201.0])
    assert pair_assignment((low, high), (low, high)) == (0, 1)
    assert pair_assignment((high, low), (low, high)) == (1, 0)
    assert pair_assignment((low, low), (low, low)) == (0, 1)


def test_score_pair_is_permutation_invariant():
    refs = (np.array([100.0, 100.0, 0.0]), np.array([200.0, 205.0, 210.0]))
    dets = (np.array([101.0, 99.0, 0.0]), np.array([200.0, 190.0, 0.0]))

    straight = score_pair(dets, refs)
    swapped = score_pair((dets[1], dets[0]), refs)

    assert straight == swapped
    assert straight[0].accuracy_10 == 100.0
    assert straight[1].accuracy_10 == approx(200.0 / 3.0)


def test_report_validation():
    with raises(ValueError):
        EvalReport(accuracy_10=60.0, accuracy_20=50.0, e_fs=0.0, mean_fine_error=0.0, n_voiced=1, n_correct=1)
    with raises(ValueError):
        ReferencePitch(f0=np.array([-1.0]))
