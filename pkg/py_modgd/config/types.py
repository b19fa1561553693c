from enum import StrEnum
from pathlib import Path

from pydantic import Field, NonNegativeInt, PositiveFloat, PositiveInt

from py_modgd.modgd.types import ModgdConfig
from py_modgd.pitch.types import CombConfig, EstimatorSettings, PitchRange, SalienceConfig
from py_modgd.spectral.types import CepstralEnvelopeConfig, FrameConfig
from py_modgd.speaker_count.types import GmmConfig, SmccConfig
from py_modgd.tracking.types import PostprocessConfig
from py_modgd.types import FrozenConfig


class Grouping(StrEnum):
    HIGH_LOW = "high_low"
    DP = "dp"


class PipelineConfig(FrozenConfig):
    """
    Every setting of a run. The defaults reproduce each module's own defaults,
    so an empty config file is a valid one.

    Attributes:
        input_path (Path | None): Audio to analyse when none is given on the
            command line.
        output_path (Path | None): Where results go when none is given on the
            command line.
        grouping (Grouping): High-low ordering or continuity grouping of the
            per-frame pitches. Defaults to high-low.
        dp_block_len (int): Frames per continuity-grouping block. Defaults to 20.
        workers (int): Threads for per-frame analysis. Defaults to 1.
        seed (int): Seed of every random draw in the run. Defaults to 0.
        flatten_gamma (float): Flattening exponent of the pitch estimator.
            Defaults to 0.3.
        band_hz (float | None): Upper edge of the flattened spectrum the
            estimator analyses. Defaults to 3000.
    """

    frames: FrameConfig = FrameConfig()
    envelope: CepstralEnvelopeConfig = CepstralEnvelopeConfig()
    flatten_gamma: float = Field(default=0.3, gt=0.0, le=1.0)
    band_hz: PositiveFloat | None = 3000.0
    modgd: ModgdConfig = ModgdConfig()
    pitch_range: PitchRange = PitchRange()
    comb: CombConfig = CombConfig()
    salience: SalienceConfig = SalienceConfig()
    postprocess: PostprocessConfig = PostprocessConfig()
    smcc: SmccConfig = SmccConfig()
    gmm: GmmConfig = GmmConfig()
    grouping: Grouping = Grouping.HIGH_LOW
    dp_block_len: PositiveInt = 20
    workers: PositiveInt = 1
    seed: NonNegativeInt = 0
    input_path: Path | None = None
    output_path: Path | None = None

    def estimator_settings(self, sample_rate: int) -> EstimatorSettings:
        return EstimatorSettings(
            sample_rate=sample_rate,
            n_fft=self.frames.fft_size(sample_rate),
            envelope=self.envelope,
            flatten_gamma=self.flatten_gamma,
            band_hz=self.band_hz,
            modgd=self.modgd,
            pitch_range=self.pitch_range,
            comb=self.comb,
            salience=self.salience,
        )
