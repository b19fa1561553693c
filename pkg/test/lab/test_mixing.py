import math

import numpy as np
from pytest import approx, raises

from py_modgd.lab.mixing import (
    activity_mask,
    add_noise,
    fit_length,
    mix_tmr,
    synth_babble,
    tmr_gains,
)
from py_modgd.lab.types import NoiseConfig
from py_modgd.spectral.audio_io import write_wav
from py_modgd.spectral.types import SignalBuffer
from test.conftest import SAMPLE_RATE, harmonic_complex


def talker(f0: float, seconds: float = 0.5, scale: float = 1.0, seed: int = 0) -> SignalBuffer:
    samples = scale * harmonic_complex((f0,), int(seconds * SAMPLE_RATE), seed=seed)
    return SignalBuffer(samples=samples, sample_rate=SAMPLE_RATE)


def power(samples: np.ndarray) -> float:
    return float(np.mean(samples**2))


def test_tmr_gains_reach_requested_ratio():
    target, masker = talker(120.0), talker(210.0, scale=3.0)

    target_gain, masker_gain = tmr_gains(target, masker, 6.0)

    ratio = power(target_gain * target.samples) / power(masker_gain * masker.samples)
    assert 10 * math.log10(ratio) == approx(6.0)
    assert power(target_gain * target.samples) + power(masker_gain * masker.samples) == approx(
        power(target.samples) + power(masker.samples)
    )


def test_mix_at_zero_db_is_symmetric():
    a, b = talker(120.0), talker(210.0, scale=0.2)
    assert np.allclose(mix_tmr(a, b, 0.0).samples, mix_tmr(b, a, 0.0).samples)


def test_mix_loops_short_masker():
    mixed = mix_tmr(talker(120.0, seconds=0.5), talker(210.0, seconds=0.2), 0.0)
    assert len(mixed) == int(0.5 * SAMPLE_RATE)


def test_mix_rejects_bad_inputs():
    silent = SignalBuffer(samples=np.zeros(800), sample_rate=SAMPLE_RATE)
    with raises(ValueError):
        mix_tmr(talker(120.0), silent, 0.0)
    with raises(ValueError):
        mix_tmr(silent, talker(120.0), 0.0)
    with raises(ValueError):
        mix_tmr(talker(120.0), SignalBuffer(samples=np.ones(800), sample_rate=8000), 0.0)


def test_activity_mask_marks_quiet_blocks():
    samples = np.concatenate([np.ones(1600), 1e-3 * np.ones(1600)])
    mask = activity_mask(samples, SAMPLE_RATE)
    assert mask[:1600].all()
    assert not mask[1600:].any()
    assert not activity_mask(np.zeros(320), SAMPLE_RATE).any()


def test_fit_length():
    assert fit_length(np.array([1.0, 2.0]), 5).tolist() == [1.0, 2.0, 1.0, 2.0, 1.0]
    assert fit_length(np.array([1.0, 2.0, 3.0]), 2).tolist() == [1.0, 2.0]
    assert fit_length(np.zeros(0), 3).tolist() == [0.0, 0.0, 0.0]


def test_white_noise_at_exact_snr():
    clean = talker(150.0)

    noisy = add_noise(clean, NoiseConfig(kind="white", snr_db=10.0, seed=4))

    noise = noisy.samples - clean.samples
    assert 10 * math.log10(power(clean.samples) / power(noise)) == approx(10.0)


def test_babble_noise_at_exact_snr_and_seeded():
    clean = talker(150.0)
    cfg = NoiseConfig(kind="babble", snr_db=5.0, seed=2)

    noisy = add_noise(clean, cfg)

    noise = noisy.samples - clean.samples
    assert 10 * math.log10(power(clean.samples) / power(noise)) == approx(5.0)
    assert np.array_equal(noisy.samples, add_noise(clean, cfg).samples)
    assert not np.array_equal(
        noisy.samples, add_noise(clean, cfg.model_copy(update={"seed": 3})).samples
    )


def test_babble_from_recording(tmp_path):
    path = tmp_path / "babble.wav"
    write_wav(path, talker(180.0, seconds=0.1, scale=2.0))
    clean = talker(150.0)

    noisy = add_noise(clean, NoiseConfig(kind="babble", snr_db=0.0, babble_path=path))

    assert 10 * math.log10(power(clean.samples) / power(noisy.samples - clean.samples)) == approx(0.0, abs=1e-9)


def test_synth_babble_has_unit_power():
    babble = synth_babble(8000, SAMPLE_RATE, np.random.default_rng(0), 6)
    assert babble.size == 8000
    assert power(babble) == approx(1.0)


def test_infinite_snr_and_silence_leave_signal_alone():
    clean = talker(150.0)
    assert add_noise(clean, NoiseConfig(snr_db=math.inf)) is clean

    silent = SignalBuffer(samples=np.zeros(100), sample_rate=SAMPLE_RATE)
    assert add_noise(silent, NoiseConfig(snr_db=0.0)) is silent


def test_noise_config_validation():
    with raises(ValueError):
        NoiseConfig(snr_db=math.nan)
    with raises(ValueError):
        NoiseConfig(snr_db=-math.inf)
    with raises(ValueError):
        NoiseConfig(kind="babble", snr_db=0.0, babble_streams=5)
