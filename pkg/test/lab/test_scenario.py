import numpy as np
from pytest import approx, raises

from py_modgd.errors import ScenarioError
from py_modgd.lab.scenario import (
    ScenarioMapper,
    format_spans,
    load_scenario,
    make_contour,
    parse_scenario,
    parse_spans,
    reference_on_grid,
    render_count_clip,
    render_scenario,
    scenario_from_settings,
    scenario_settings,
    source_from_spec,
)
from py_modgd.lab.types import Category, GenderPattern, Scenario, SourceSpec

SCENARIO_TEXT = """
# two talkers, one pausing
name = pause
duration_s = 0.5
source1.f0_start = 110
source2.f0_start = 220
source2.silent = 0.2-0.3
seed = 3
"""


def short_scenario(**updates) -> Scenario:
    return parse_scenario(SCENARIO_TEXT).model_copy(update=updates)


def test_parse_scenario_defaults_and_sources():
    scenario = parse_scenario(SCENARIO_TEXT)

    assert scenario.name == "pause"
    assert scenario.category is Category.CLEAN
    assert scenario.noise == "none"
    assert scenario.snr_db == float("inf")
    assert scenario.sources[0] == SourceSpec(f0_start=110.0)
    assert scenario.sources[1].silent == ((0.2, 0.3),)
    assert scenario.seed == 3


def test_category_presets_fill_missing_keys():
    babble = scenario_from_settings({"category": "babble"})
    assert (babble.noise, babble.snr_db, babble.t60_ms) == ("babble", 5.0, 0.0)

    reverb = scenario_from_settings({"category": "reverb", "t60_ms": "350"})
    assert (reverb.noise, reverb.t60_ms) == ("none", 350.0)

    white = scenario_from_settings({"category": "white", "snr_db": "0"})
    assert (white.noise, white.snr_db) == ("white", 0.0)


def test_pattern_sets_default_pitches():
    scenario = scenario_from_settings({"pattern": "ff"})
    assert scenario.pattern is GenderPattern.FEMALE_FEMALE
    assert [spec.f0_start for spec in scenario.sources] == [200.0, 250.0]


def test_invalid_scenarios_fail():
    with raises(ScenarioError):
        scenario_from_settings({"colour": "blue"})
    with raises(ScenarioError):
        scenario_from_settings({"category": "underwater"})
    with raises(ScenarioError):
        scenario_from_settings({"source1.jitter": "0.9"})
    with raises(ScenarioError):
        scenario_from_settings({"source2.silent": "0.5"})


def test_spans():
    assert parse_spans("0.5-0.8, 1.2-1.4") == ((0.5, 0.8), (1.2, 1.4))
    assert parse_spans("") == ()
    assert format_spans(((0.5, 0.8), (1.2, 1.4))) == "0.5-0.8,1.2-1.4"
    with raises(ScenarioError):
        parse_spans("0.8-0.5")


def test_settings_reload_to_the_same_scenario():
    scenario = short_scenario(tmr_db=-3.0, t60_ms=150.0)
    assert scenario_from_settings(scenario_settings(scenario)) == scenario


def test_load_scenario_with_overrides(tmp_path):
    path = tmp_path / "pause.txt"
    path.write_text(SCENARIO_TEXT)

    scenario = load_scenario(path, {"tmr_db": "6"})

    assert scenario.tmr_db == 6.0
    assert scenario.name == "pause"
    with raises(FileNotFoundError):
        load_scenario(tmp_path / "missing.txt")


def test_known_keys_include_source_keys():
    keys = ScenarioMapper().known_keys()
    assert {"category", "tmr_db", "source1.f0_end", "source2.silent"} <= keys


def test_make_contour():
    rng = np.random.default_rng(0)

    glide = make_contour(SourceSpec(f0_start=100.0, f0_end=200.0), 11, rng)
    assert np.allclose(glide, np.linspace(100.0, 200.0, 11))

    wobbly = make_contour(SourceSpec(f0_start=100.0, jitter=0.1), 100, rng)
    assert np.all(np.abs(wobbly - 100.0) <= 10.0 + 1e-9)
    assert np.std(wobbly) > 0

    paused = make_contour(SourceSpec(f0_start=100.0, silent=((0.02, 0.05),)), 10, rng)
    assert paused.tolist() == [100.0, 100.0, 0.0, 0.0, 0.0, 100.0, 100.0, 100.0, 100.0, 100.0]


def test_reference_on_grid():
    spec = SourceSpec(f0_start=100.0, f0_end=200.0, silent=((0.5, 0.7),))
    source = source_from_spec(spec, 1.0, np.random.default_rng(0))

    reference = reference_on_grid(source, np.array([0.0, 0.25, 0.6, 1.0]))

    assert reference[0] == approx(100.0)
    assert reference[1] == approx(125.0)
    assert reference[2] == 0.0
    assert reference[3] == approx(200.0)


def test_render_scenario():
    rendered = render_scenario(short_scenario())

    assert len(rendered.mixture) == 8000
    assert np.max(np.abs(rendered.mixture.samples)) == approx(0.9)
    dry_sum = rendered.sources[0].samples + rendered.sources[1].samples
    assert np.allclose(rendered.mixture.samples, dry_sum)
    assert rendered.times.size == rendered.references[0].size == 48
    assert np.allclose(rendered.references[0], 110.0)
    # source 2 pauses between 0.2 and 0.3 s; frame k is centred at 10k + 15 ms
    assert np.all(rendered.references[1][19:28] == 0.0)
    assert np.allclose(rendered.references[1][:18], 220.0)


def test_render_scenario_is_deterministic():
    scenario = short_scenario(noise="white", snr_db=10.0, t60_ms=100.0)

    first = render_scenario(scenario)
    second = render_scenario(scenario)

    assert np.array_equal(first.mixture.samples, second.mixture.samples)
    assert len(first.mixture) == 8000
    assert not np.array_equal(
        first.mixture.samples,
        render_scenario(scenario.model_copy(update={"seed": 4})).mixture.samples,
    )


def test_render_scenario_tmr():
    steady = (SourceSpec(f0_start=110.0), SourceSpec(f0_start=220.0))
    rendered = render_scenario(short_scenario(tmr_db=10.0, sources=steady))
    target, masker = (np.mean(source.samples**2) for source in rendered.sources)
    assert 10 * np.log10(target / masker) == approx(10.0, abs=0.1)


def test_render_count_clip():
    clip = render_count_clip(3, duration_s=0.5, seed=1)

    assert len(clip) == 8000
    assert np.max(np.abs(clip.samples)) == approx(0.9)
    assert np.array_equal(clip.samples, render_count_clip(3, duration_s=0.5, seed=1).samples)
    with raises(ValueError):
        render_count_clip(0)
