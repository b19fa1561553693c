import math

import numpy as np
from scipy.signal import get_window

from py_modgd.errors import EmptyInputError
from py_modgd.spectral.types import FrameConfig, SignalBuffer, Window


def window_coefficients(window: Window, length: int) -> np.ndarray:
    if window is Window.RECTANGULAR:
        return np.ones(length)
    return get_window(str(window), length, fftbins=False)


def frame_count(n_samples: int, frame_length: int, hop_length: int) -> int:
    if n_samples <= frame_length:
        return 1
    return 1 + math.ceil((n_samples - frame_length) / hop_length)


def frame_signal(signal: SignalBuffer, cfg: FrameConfig) -> np.ndarray:
    """
    Cuts the signal into windowed frames, one per row.

    Frame k starts at k * hop samples. A trailing partial frame is zero-padded,
    so every sample belongs to at least one frame.

    Raises:
        EmptyInputError: If the signal has no samples.
        ValueError: If the frame is shorter than two samples at this sample rate.
    """
    if signal.samples.size == 0:
        raise EmptyInputError("empty input")

    frame_length = cfg.frame_length(signal.sample_rate)
    if frame_length < 2:
        raise ValueError(
            f"A {cfg.frame_len_ms} ms frame at {signal.sample_rate} Hz "
            f"holds {frame_length} samples; at least 2 are needed."
        )
    hop_length = cfg.hop_length(signal.sample_rate)

    n_frames = frame_count(signal.samples.size, frame_length, hop_length)
    padded_length = (n_frames - 1) * hop_length + frame_length
    padded = np.zeros(padded_length)
    padded[: signal.samples.size] = signal.samples

    frames = np.lib.stride_tricks.sliding_window_view(padded, frame_length)[::hop_length]
    return frames * window_coefficients(cfg.window, frame_length)


def frame_times(n_frames: int, cfg: FrameConfig) -> np.ndarray:
    """Start time of every frame in seconds; the trajectory files use this grid."""
    return np.arange(n_frames) * cfg.hop_ms / 1000.0


def frame_centres(n_frames: int, cfg: FrameConfig) -> np.ndarray:
    return (np.arange(n_frames) * cfg.hop_ms + cfg.frame_len_ms / 2.0) / 1000.0
