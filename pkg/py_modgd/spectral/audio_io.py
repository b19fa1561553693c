import logging
from pathlib import Path

import numpy as np
from scipy.io import wavfile

from py_modgd.errors import AudioFormatError
from py_modgd.spectral.types import SignalBuffer

logger = logging.getLogger(__name__)

PCM_FULL_SCALE = {
    np.dtype(np.int16): 32768.0,
    np.dtype(np.int32): 2147483648.0,
}


def read_wav(path: str | Path) -> SignalBuffer:
    """
    Reads a mono WAV file as floats with full scale 1.0.

    16-bit and 32-bit PCM as well as 32/64-bit float files are accepted.

    Raises:
        FileNotFoundError: If the file does not exist.
        AudioFormatError: If the file is not a readable mono WAV in a supported encoding.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"No such audio file: {path}")

    try:
        sample_rate, data = wavfile.read(path)
    except (ValueError, EOFError) as error:
        raise AudioFormatError(f"Cannot read {path} as WAV: {error}") from error

    if data.ndim != 1:
        raise AudioFormatError(
            f"{path} has {data.shape[1]} channels; only mono audio is supported."
        )

    if data.dtype in PCM_FULL_SCALE:
        samples = data.astype(np.float64) / PCM_FULL_SCALE[data.dtype]
    elif np.issubdtype(data.dtype, np.floating):
        samples = data.astype(np.float64)
    else:
        raise AudioFormatError(f"{path} uses unsupported sample type {data.dtype}.")

    logger.debug("Read %s: %d samples at %d Hz", path, samples.size, sample_rate)
    return SignalBuffer(samples=samples, sample_rate=sample_rate)


def write_wav(path: str | Path, signal: SignalBuffer) -> None:
    """Writes 16-bit PCM; samples outside [-1, 1] are clipped."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pcm = np.round(np.clip(signal.samples, -1.0, 1.0) * 32767.0).astype(np.int16)
    wavfile.write(path, signal.sample_rate, pcm)
    logger.debug("Wrote %s: %d samples at %d Hz", path, pcm.size, signal.sample_rate)
