import numpy as np
from pytest import approx, raises

from py_modgd.errors import EmptyInputError
from py_modgd.speaker_count.smcc import hz_to_mel, mel_filterbank, mel_to_hz, smcc_features
from py_modgd.speaker_count.types import SmccConfig
from py_modgd.spectral.types import SignalBuffer


def test_mel_scale():
    assert hz_to_mel(0.0) == 0.0
    assert hz_to_mel(1000.0) == approx(1000.0, abs=0.1)
    assert np.allclose(mel_to_hz(hz_to_mel(np.array([50.0, 440.0, 7000.0]))), [50.0, 440.0, 7000.0])


def test_mel_filterbank():
    bank = mel_filterbank(40, 2048, 16000)

    assert bank.shape == (40, 1025)
    assert np.all(bank >= 0)
    assert np.all(bank.max(axis=1) <= 1.0)
    assert np.all(bank.sum(axis=1) > 0)
    # centres rise with the filter index
    assert np.all(np.diff(np.argmax(bank, axis=1)) >= 0)


def test_smcc_shape_and_determinism(make_signal):
    signal = make_signal((130.0, 220.0), duration=0.5)

    features = smcc_features(signal)

    assert features.vectors.shape == (49, 20)
    assert features.dimension == 20
    assert np.all(np.isfinite(features.vectors))
    assert np.array_equal(features.vectors, smcc_features(signal).vectors)


def test_smcc_follows_config(make_signal):
    cfg = SmccConfig(n_filters=24, n_coeffs=13)
    assert smcc_features(make_signal((150.0,), duration=0.2), cfg).dimension == 13


def test_smcc_differs_between_one_and_two_talkers(make_signal):
    one = smcc_features(make_signal((150.0,), duration=0.3)).vectors.mean(axis=0)
    two = smcc_features(make_signal((150.0, 235.0), duration=0.3)).vectors.mean(axis=0)
    assert not np.allclose(one, two)


def test_smcc_of_silence_is_finite():
    silent = SignalBuffer(samples=np.zeros(1600), sample_rate=16000)
    assert np.all(np.isfinite(smcc_features(silent).vectors))


def test_smcc_empty_signal_fails():
    with raises(EmptyInputError):
        smcc_features(SignalBuffer(samples=np.zeros(0), sample_rate=16000))


def test_smcc_config_rejects_too_many_coefficients():
    with raises(ValueError):
        SmccConfig(n_filters=10, n_coeffs=20)
