__all__ = [
    "Category",
    "GenderPattern",
    "NoiseConfig",
    "RenderedScenario",
    "RirConfig",
    "Scenario",
    "ScenarioMapper",
    "SourceSpec",
    "SyntheticSource",
    "add_noise",
    "apply_reverb",
    "gen_rir",
    "load_scenario",
    "mix_tmr",
    "render_count_clip",
    "render_scenario",
    "scenario_settings",
    "synth_harmonic",
]

from py_modgd.lab.mixing import add_noise, mix_tmr
from py_modgd.lab.reverb import apply_reverb, gen_rir
from py_modgd.lab.scenario import (
    RenderedScenario,
    ScenarioMapper,
    load_scenario,
    render_count_clip,
    render_scenario,
    scenario_settings,
)
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
