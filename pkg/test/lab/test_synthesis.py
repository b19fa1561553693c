import numpy as np
from pytest import approx, raises

from py_modgd.lab.synthesis import contour_times, synth_harmonic
from py_modgd.lab.types import SyntheticSource


def source(contour, harmonics: int = 10, duration: float = 1.0, **kwargs) -> SyntheticSource:
    return SyntheticSource(
        f0_contour=np.asarray(contour, dtype=float),
        num_harmonics=harmonics,
        duration=duration,
        **kwargs,
    )


def test_constant_pitch_talker():
    amplitudes = 1.0 / np.arange(1, 11)
    signal = synth_harmonic(source([200.0] * 101, amplitudes=amplitudes), 16000)

    assert signal.sample_rate == 16000
    assert len(signal) == 16000
    assert signal.samples[0] == approx(amplitudes.sum())
    assert np.mean(signal.samples**2) == approx(0.5 * np.sum(amplitudes**2), rel=0.01)

    spectrum = np.abs(np.fft.rfft(signal.samples))
    assert np.argmax(spectrum) == 200


def test_amplitudes_and_phases_are_applied():
    talker = source(
        [250.0] * 11,
        harmonics=2,
        duration=0.1,
        amplitudes=np.array([1.0, 0.5]),
        phases=np.array([np.pi / 2, 0.0]),
    )
    signal = synth_harmonic(talker, 8000)
    assert signal.samples[0] == approx(0.5)


def test_glide_stays_continuous():
    signal = synth_harmonic(source(np.linspace(100.0, 200.0, 101), harmonics=1), 16000)
    assert np.max(np.abs(np.diff(signal.samples))) < 2 * np.pi * 200 / 16000 * 1.01


def test_silent_contour_gates_output():
    contour = [150.0] * 50 + [0.0] * 51
    signal = synth_harmonic(source(contour), 16000)

    assert np.mean(signal.samples[:7000] ** 2) > 1.0
    assert np.all(signal.samples[8100:] == 0.0)


def test_all_silent_contour_gives_zeros():
    signal = synth_harmonic(source([0.0] * 20, duration=0.2), 16000)
    assert len(signal) == 3200
    assert not np.any(signal.samples)


def test_aliasing_partials_fail():
    with raises(ValueError):
        synth_harmonic(source([800.0] * 10, harmonics=10), 8000)


def test_contour_times():
    assert np.allclose(contour_times(source([100.0] * 3)), [0.0, 0.01, 0.02])


def test_source_validation():
    with raises(ValueError):
        source([-1.0, 100.0])
    with raises(ValueError):
        source([100.0], harmonics=3, amplitudes=np.ones(2))
    with raises(ValueError):
        source([100.0], harmonics=2, amplitudes=np.array([1.0, 0.0]))
