import numpy as np
from pytest import raises

from py_modgd.errors import EmptyInputError
from py_modgd.spectral.framing import frame_centres, frame_count, frame_signal, frame_times
from py_modgd.spectral.types import FrameConfig, SignalBuffer, Window


def test_frame_count():
    assert frame_count(100, 480, 160) == 1
    assert frame_count(480, 480, 160) == 1
    assert frame_count(481, 480, 160) == 2
    assert frame_count(16000, 480, 160) == 98


def test_frame_signal_rectangular_copies_samples():
    samples = np.arange(1000, dtype=float)
    signal = SignalBuffer(samples=samples, sample_rate=16000)
    cfg = FrameConfig(frame_len_ms=30, hop_ms=10, window=Window.RECTANGULAR)

    frames = frame_signal(signal, cfg)

    assert frames.shape == (5, 480)
    assert np.array_equal(frames[1], samples[160:640])
    # trailing frame is zero padded
    assert np.array_equal(frames[4, : 1000 - 640], samples[640:])
    assert np.all(frames[4, 1000 - 640 :] == 0)


def test_frame_signal_applies_window():
    signal = SignalBuffer(samples=np.ones(480), sample_rate=16000)
    frames = frame_signal(signal, FrameConfig())

    assert frames.shape == (1, 480)
    assert np.isclose(frames[0, 0], 0.08)
    assert np.isclose(frames[0].max(), 1.0, atol=1e-4)


def test_frame_signal_short_signal_gives_one_frame():
    signal = SignalBuffer(samples=np.ones(10), sample_rate=16000)
    assert frame_signal(signal, FrameConfig()).shape == (1, 480)


def test_frame_signal_empty_fails():
    signal = SignalBuffer(samples=np.zeros(0), sample_rate=16000)
    with raises(EmptyInputError):
        frame_signal(signal, FrameConfig())


def test_frame_signal_too_short_frame_fails():
    signal = SignalBuffer(samples=np.ones(100), sample_rate=50)
    with raises(ValueError):
        frame_signal(signal, FrameConfig(frame_len_ms=20, hop_ms=10))


def test_frame_times_and_centres():
    cfg = FrameConfig()
    assert np.allclose(frame_times(3, cfg), [0.0, 0.01, 0.02])
    assert np.allclose(frame_centres(3, cfg), [0.015, 0.025, 0.035])


def test_frame_config_rejects_hop_longer_than_frame():
    with raises(ValueError):
        FrameConfig(frame_len_ms=20, hop_ms=30)


def test_fft_size_defaults_to_four_frames():
    assert FrameConfig().fft_size(16000) == 2048
    assert FrameConfig(n_fft=1024).fft_size(16000) == 1024


def test_signal_buffer_rejects_stereo():
    with raises(ValueError):
        SignalBuffer(samples=np.zeros((10, 2)), sample_rate=16000)
