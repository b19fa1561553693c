import logging
import math
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ValidationError

from py_modgd.config.settings_file import check_known_keys, parse_settings, read_settings_file
from py_modgd.declarative import MISSING, FlatSettings, SettingsMapper
from py_modgd.errors import ScenarioError
from py_modgd.lab.mixing import add_noise, fit_length, tmr_gains
from py_modgd.lab.reverb import apply_reverb, gen_rir
from py_modgd.lab.synthesis import synth_harmonic
from py_modgd.lab.types import (
    Category,
    GenderPattern,
    NoiseConfig,
    RirConfig,
    Scenario,
    SourceSpec,
    SyntheticSource,
)
from py_modgd.spectral.framing import frame_centres, frame_count, frame_times
from py_modgd.spectral.types import FrameConfig, SignalBuffer
from py_modgd.types import ArrayModel, FloatArray

logger = logging.getLogger(__name__)

CONTOUR_HOP_S = 0.01
PEAK_LEVEL = 0.9
JITTER_SMOOTHING = 15

CATEGORY_PRESETS: dict[Category, dict[str, str]] = {
    Category.CLEAN: {"noise": "none", "snr_db": "inf", "t60_ms": "0"},
    Category.BABBLE: {"noise": "babble", "snr_db": "5", "t60_ms": "0"},
    Category.WHITE: {"noise": "white", "snr_db": "10", "t60_ms": "0"},
    Category.REVERB: {"noise": "none", "snr_db": "inf", "t60_ms": "200"},
}

PATTERN_PITCHES: dict[GenderPattern, tuple[float, float]] = {
    GenderPattern.MALE_FEMALE: (110.0, 210.0),
    GenderPattern.FEMALE_FEMALE: (200.0, 250.0),
    GenderPattern.MALE_MALE: (100.0, 135.0),
}

SOURCE_KEYS = ("f0_start", "f0_end", "jitter", "harmonics", "amplitude_decay", "silent")


def parse_spans(text: str) -> tuple[tuple[float, float], ...]:
    """Parses `0.5-0.8, 1.2-1.4` into ((0.5, 0.8), (1.2, 1.4))."""
    spans = []
    for chunk in filter(None, (part.strip() for part in text.split(","))):
        start, separator, end = chunk.partition("-")
        try:
            span = (float(start), float(end))
        except ValueError:
            span = None
        if not separator or span is None or span[0] >= span[1]:
            raise ScenarioError(f"Malformed silent span {chunk!r}; expected `start-end`.")
        spans.append(span)
    return tuple(spans)


def format_spans(spans: tuple[tuple[float, float], ...]) -> str:
    return ",".join(f"{start:g}-{end:g}" for start, end in spans)


class ScenarioMapper(SettingsMapper[Scenario]):
    """Flat scenario files; category presets fill the noise and room keys left out."""

    def category(self, settings: FlatSettings) -> Category:
        return Category(settings.get("category", Category.CLEAN))

    def preset(self, settings: FlatSettings, key: str) -> str:
        return settings.get(key, CATEGORY_PRESETS[self.category(settings)][key])

    def map_noise(self, settings: FlatSettings) -> str:
        return self.preset(settings, "noise")

    def map_snr(self, settings: FlatSettings) -> float:
        return float(self.preset(settings, "snr_db"))

    def map_t60(self, settings: FlatSettings) -> float:
        return float(self.preset(settings, "t60_ms"))

    def map_sources(self, settings: FlatSettings) -> tuple[SourceSpec, SourceSpec]:
        pattern = GenderPattern(settings.get("pattern", GenderPattern.MALE_FEMALE))
        defaults = PATTERN_PITCHES[pattern]

        sources = []
        for index, default_f0 in enumerate(defaults, start=1):
            fields: dict[str, Any] = {"f0_start": default_f0}
            for key in SOURCE_KEYS:
                raw = settings.get(f"source{index}.{key}")
                if raw is None:
                    continue
                fields[key] = parse_spans(raw) if key == "silent" else raw
            sources.append(SourceSpec(**fields))
        return sources[0], sources[1]

    def map_babble_wav(self, settings: FlatSettings) -> Any:
        return settings.get("babble_wav") or MISSING

    mapping = {
        "name": "name",
        "category": "category",
        "pattern": "pattern",
        "sample_rate": "sample_rate",
        "duration_s": "duration_s",
        "frame_len_ms": "frame_len_ms",
        "hop_ms": "hop_ms",
        "sources": map_sources,
        "tmr_db": ("tmr_db", float),
        "noise": map_noise,
        "snr_db": map_snr,
        "babble_wav": map_babble_wav,
        "t60_ms": map_t60,
        "seed": "seed",
    }
    consumed_keys = ("noise", "snr_db", "t60_ms", "babble_wav") + tuple(
        f"source{index}.{key}" for index in (1, 2) for key in SOURCE_KEYS
    )


def scenario_from_settings(settings: FlatSettings, source: str = "<scenario>") -> Scenario:
    """
    Raises:
        ScenarioError: If a key is unknown or a value is invalid.
    """
    mapper = ScenarioMapper()
    try:
        check_known_keys(settings, mapper.known_keys(), source)
        return mapper.map(settings)
    except (ValidationError, ValueError) as error:
        if isinstance(error, ScenarioError):
            raise
        raise ScenarioError(f"Invalid scenario {source}: {error}") from error


def load_scenario(path: str | Path, overrides: FlatSettings | None = None) -> Scenario:
    settings = read_settings_file(path)
    settings.update(overrides or {})
    return scenario_from_settings(settings, source=str(path))


def parse_scenario(text: str) -> Scenario:
    return scenario_from_settings(parse_settings(text, source="<scenario>"))


def scenario_settings(scenario: Scenario) -> dict[str, str]:
    """Flat settings that reload to the same scenario."""
    settings = {
        "name": scenario.name,
        "category": str(scenario.category),
        "pattern": str(scenario.pattern),
        "sample_rate": str(scenario.sample_rate),
        "duration_s": repr(scenario.duration_s),
        "frame_len_ms": repr(scenario.frame_len_ms),
        "hop_ms": repr(scenario.hop_ms),
        "tmr_db": repr(scenario.tmr_db),
        "noise": scenario.noise,
        "snr_db": repr(scenario.snr_db),
        "t60_ms": repr(scenario.t60_ms),
        "seed": str(scenario.seed),
    }
    if scenario.babble_wav is not None:
        settings["babble_wav"] = str(scenario.babble_wav)

    for index, spec in enumerate(scenario.sources, start=1):
        prefix = f"source{index}."
        settings[prefix + "f0_start"] = repr(spec.f0_start)
        if spec.f0_end is not None:
            settings[prefix + "f0_end"] = repr(spec.f0_end)
        settings[prefix + "jitter"] = repr(spec.jitter)
        settings[prefix + "harmonics"] = str(spec.harmonics)
        settings[prefix + "amplitude_decay"] = repr(spec.amplitude_decay)
        if spec.silent:
            settings[prefix + "silent"] = format_spans(spec.silent)
    return settings


def make_contour(spec: SourceSpec, n_points: int, rng: np.random.Generator) -> np.ndarray:
    """Commanded f0 every 10 ms: a glide with a smoothed random wobble and silent spans."""
    times = np.arange(n_points) * CONTOUR_HOP_S
    contour = np.linspace(spec.f0_start, spec.f0_end or spec.f0_start, n_points)

    wobble = np.convolve(
        rng.standard_normal(n_points), np.ones(JITTER_SMOOTHING) / JITTER_SMOOTHING, mode="same"
    )
    peak = np.abs(wobble).max()
    if spec.jitter > 0 and peak > 0:
        contour = contour * (1.0 + spec.jitter * wobble / peak)

    for start, end in spec.silent:
        contour[(times >= start) & (times < end)] = 0.0
    return contour


def source_from_spec(
    spec: SourceSpec, duration_s: float, rng: np.random.Generator
) -> SyntheticSource:
    n_points = int(math.ceil(duration_s / CONTOUR_HOP_S)) + 1
    contour = make_contour(spec, n_points, rng)
    return SyntheticSource(
        f0_contour=contour,
        contour_hop_s=CONTOUR_HOP_S,
        num_harmonics=spec.harmonics,
        amplitudes=np.arange(1, spec.harmonics + 1, dtype=np.float64) ** -spec.amplitude_decay,
        phases=rng.uniform(0.0, 2.0 * np.pi, spec.harmonics),
        duration=duration_s,
    )


def reference_on_grid(source: SyntheticSource, centres: np.ndarray) -> np.ndarray:
    """The commanded f0 at each analysis frame centre; 0 where the talker is gated off."""
    contour = source.f0_contour
    voiced = contour > 0
    if not voiced.any():
        return np.zeros(centres.size)
    times = np.arange(contour.size) * source.contour_hop_s
    f0 = np.interp(centres, times[voiced], contour[voiced])
    gate = np.interp(centres, times, voiced.astype(np.float64))
    return np.where(gate >= 0.5, f0, 0.0)


class RenderedScenario(ArrayModel):
    mixture: SignalBuffer
    sources: tuple[SignalBuffer, SignalBuffer]
    times: FloatArray
    references: tuple[FloatArray, FloatArray]


def _peak_gain(samples: np.ndarray) -> float:
    peak = np.abs(samples).max() if samples.size else 0.0
    return PEAK_LEVEL / peak if peak > 0 else 1.0


def render_scenario(scenario: Scenario) -> RenderedScenario:
    """
    Renders the mixture, the scaled dry talkers and their references.

    Every random draw comes from one generator seeded by `scenario.seed`, so
    the same scenario always renders the same samples. Noise is added after
    reverberation; a reverberant mixture is cut back to the dry length. The
    result is scaled to a 0.9 peak.
    """
    rng = np.random.default_rng(scenario.seed)
    sample_rate = scenario.sample_rate

    synthetic = [source_from_spec(spec, scenario.duration_s, rng) for spec in scenario.sources]
    dry = [synth_harmonic(source, sample_rate) for source in synthetic]

    target_gain, masker_gain = tmr_gains(dry[0], dry[1], scenario.tmr_db)
    scaled = [target_gain * dry[0].samples, masker_gain * fit_length(dry[1].samples, len(dry[0]))]
    mixture = SignalBuffer(samples=scaled[0] + scaled[1], sample_rate=sample_rate)

    noise_seed, rir_seed = (int(seed) for seed in rng.integers(0, 2**31, size=2))
    if scenario.t60_ms > 0:
        rir = gen_rir(RirConfig(t60=scenario.t60_ms / 1000.0, seed=rir_seed), sample_rate)
        wet = apply_reverb(mixture, rir)
        mixture = SignalBuffer(samples=wet.samples[: len(mixture)], sample_rate=sample_rate)

    if scenario.noise != "none":
        mixture = add_noise(
            mixture,
            NoiseConfig(
                kind=scenario.noise,
                snr_db=scenario.snr_db,
                seed=noise_seed,
                babble_path=scenario.babble_wav,
            ),
        )

    gain = _peak_gain(mixture.samples)
    frames = FrameConfig(frame_len_ms=scenario.frame_len_ms, hop_ms=scenario.hop_ms)
    n_frames = frame_count(
        len(mixture), frames.frame_length(sample_rate), frames.hop_length(sample_rate)
    )
    centres = frame_centres(n_frames, frames)

    logger.info(
        "Rendered scenario %s (%s, %s): %.2f s, %d frames",
        scenario.name,
        scenario.category,
        scenario.pattern,
        mixture.duration,
        n_frames,
    )
    return RenderedScenario(
        mixture=SignalBuffer(samples=gain * mixture.samples, sample_rate=sample_rate),
        sources=tuple(
            SignalBuffer(samples=gain * samples, sample_rate=sample_rate) for samples in scaled
        ),
        times=frame_times(n_frames, frames),
        references=tuple(reference_on_grid(source, centres) for source in synthetic),
    )


def render_count_clip(
    n_speakers: int,
    duration_s: float = 2.0,
    sample_rate: int = 16000,
    seed: int = 0,
) -> SignalBuffer:
    """
    A clip of `n_speakers` simultaneous synthetic talkers at equal power.

    Each talker gets a random pitch in 90-260 Hz, a glide, a wobble and a random
    spectral tilt. A faint white noise floor (30 dB SNR) keeps pauses non-silent.
    """
    if n_speakers < 1:
        raise ValueError(f"A clip needs at least one speaker, got {n_speakers}.")

    rng = np.random.default_rng(seed)
    n_samples = int(round(duration_s * sample_rate))
    clip = np.zeros(n_samples)
    for _ in range(n_speakers):
        f0_start = rng.uniform(90.0, 260.0)
        f0_end = f0_start * rng.uniform(0.85, 1.15)
        spec = SourceSpec(
            f0_start=f0_start,
            f0_end=f0_end,
            jitter=0.03,
            harmonics=max(1, min(15, int(0.45 * sample_rate / (1.05 * max(f0_start, f0_end))))),
            amplitude_decay=rng.uniform(0.5, 1.5),
        )
        talker = synth_harmonic(source_from_spec(spec, duration_s, rng), sample_rate).samples
        power = np.mean(talker**2)
        clip += talker / math.sqrt(power) if power > 0 else talker

    noisy = add_noise(
        SignalBuffer(samples=clip, sample_rate=sample_rate),
        NoiseConfig(kind="white", snr_db=30.0, seed=int(rng.integers(0, 2**31))),
    )
    return SignalBuffer(samples=_peak_gain(noisy.samples) * noisy.samples, sample_rate=sample_rate)
