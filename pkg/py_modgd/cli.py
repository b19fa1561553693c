import argparse
import csv
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

from py_modgd.config.loader import load_pipeline_config
from py_modgd.config.settings_file import write_settings_file
from py_modgd.config.types import PipelineConfig
from py_modgd.evaluation.battery import summarize_conditions
from py_modgd.evaluation.metrics import score_pair
from py_modgd.evaluation.report import (
    format_reports,
    format_summaries,
    speaker_scores,
    write_reports_csv,
    write_summaries_csv,
)
from py_modgd.evaluation.types import EvalReport, UtteranceScore
from py_modgd.experiments import count_experiment, pitch_battery
from py_modgd.intermediates import export_plot_data, write_intermediates
from py_modgd.lab.scenario import load_scenario, render_scenario, scenario_settings
from py_modgd.lab.types import Category
from py_modgd.pipeline import estimate_trajectories
from py_modgd.spectral.audio_io import read_wav, write_wav
from py_modgd.speaker_count.classifier import (
    classify_features,
    confusion_matrix,
    format_confusion,
    overall_accuracy,
    train_count_models,
)
from py_modgd.speaker_count.model_io import (
    load_models,
    read_features_csv,
    save_models,
    write_features_csv,
)
from py_modgd.speaker_count.smcc import smcc_features
from py_modgd.speaker_count.types import CountModelSet, SmccConfig, SmccFeatures
from py_modgd.tracking.trajectory_io import read_pitch_columns, write_pitch_columns

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NUMERICAL = 3

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

PIPELINE_FLAGS = {
    "fmin": "fmin",
    "fmax": "fmax",
    "alpha": "alpha",
    "gamma": "gamma",
    "rho": "rho",
    "grouping": "grouping",
    "workers": "workers",
    "seed": "seed",
}
SCENARIO_FLAGS = {"tmr_db": "tmr_db", "snr_db": "snr_db", "t60_ms": "t60_ms", "seed": "seed"}


class UsageParser(argparse.ArgumentParser):
    """Reports usage errors with exit code 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def flag_overrides(args: argparse.Namespace, flags: dict[str, str]) -> dict[str, str]:
    return {
        key: str(getattr(args, attribute))
        for attribute, key in flags.items()
        if getattr(args, attribute, None) is not None
    }


def pipeline_config(args: argparse.Namespace) -> PipelineConfig:
    return load_pipeline_config(args.config, flag_overrides(args, PIPELINE_FLAGS))


def cmd_estimate(args: argparse.Namespace) -> int:
    config = pipeline_config(args)
    audio = args.audio or config.input_path
    if audio is None:
        raise ValueError("No input audio given on the command line or in the config.")
    out = args.output or config.output_path or Path(audio).with_suffix(".f0.txt")

    signal = read_wav(audio)
    result = estimate_trajectories(signal, config, keep_intermediates=args.dump_intermediates is not None)
    write_pitch_columns(out, result.times, [result.high.f0, result.low.f0])
    if args.dump_intermediates is not None:
        write_intermediates(args.dump_intermediates, result, config)

    logger.info("Wrote %d frames to %s", result.n_frames, out)
    return EXIT_OK


def _render(args: argparse.Namespace):
    scenario = load_scenario(args.scenario, flag_overrides(args, SCENARIO_FLAGS))
    rendered = render_scenario(scenario)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for index, reference in enumerate(rendered.references, start=1):
        write_pitch_columns(out_dir / f"ref{index}.f0.txt", rendered.times, [reference])
    write_settings_file(out_dir / "scenario.txt", scenario_settings(scenario))
    return rendered, out_dir


def cmd_synth(args: argparse.Namespace) -> int:
    rendered, out_dir = _render(args)
    for index, source in enumerate(rendered.sources, start=1):
        write_wav(out_dir / f"source{index}.wav", source)
    return EXIT_OK


def cmd_mix(args: argparse.Namespace) -> int:
    rendered, out_dir = _render(args)
    write_wav(out_dir / "mixture.wav", rendered.mixture)
    logger.info("Wrote mixture and references to %s", out_dir)
    return EXIT_OK


def _score_files(det_path: Path, ref_paths: Sequence[Path]) -> tuple[EvalReport, EvalReport]:
    _, det_tracks = read_pitch_columns(det_path)
    refs = [read_pitch_columns(path)[1] for path in ref_paths]
    ref_tracks = [track for tracks in refs for track in tracks]
    if len(det_tracks) != 2 or len(ref_tracks) != 2:
        raise ValueError(
            f"Expected two detected and two reference tracks, got {len(det_tracks)} "
            f"and {len(ref_tracks)}."
        )
    return score_pair((det_tracks[0], det_tracks[1]), (ref_tracks[0], ref_tracks[1]))


def _manifest_scores(manifest: Path) -> list[UtteranceScore]:
    """Manifest CSV columns: utterance, condition, det, ref1[, ref2]; paths relative to it."""
    scores = []
    with manifest.open(newline="", encoding="utf-8") as handle:
        for number, row in enumerate(csv.DictReader(handle), start=2):
            try:
                refs = [manifest.parent / row[key] for key in ("ref1", "ref2") if row.get(key)]
                reports = _score_files(manifest.parent / row["det"], refs)
                scores.extend(speaker_scores(row["utterance"], row["condition"], reports))
            except KeyError as error:
                raise ValueError(f"{manifest}:{number}: missing column {error}.") from error
    return scores


def cmd_eval(args: argparse.Namespace) -> int:
    if args.battery:
        config = pipeline_config(args)
        scores = [
            score
            for category in args.categories
            for score in pitch_battery(args.battery, Category(category), config.seed, config)
        ]
    elif args.manifest:
        scores = _manifest_scores(Path(args.manifest))
    else:
        if args.det is None or not args.refs:
            raise ValueError("eval needs a detected file and reference files, a manifest or --battery.")
        reports = _score_files(Path(args.det), [Path(path) for path in args.refs])
        scores = speaker_scores(Path(args.det).stem, "single", reports)

    sys.stdout.write(format_reports(scores))
    summaries = summarize_conditions(scores)
    if args.manifest or args.battery:
        sys.stdout.write("\n" + format_summaries(summaries))
    if args.csv:
        write_reports_csv(args.csv, scores)
        write_summaries_csv(Path(args.csv).with_suffix(".summary.csv"), summaries)
    return EXIT_OK


def clip_features(path: Path, smcc: SmccConfig, dump_dir: Path | None = None) -> SmccFeatures:
    """SMCC of a WAV clip, or features read back from a CSV written earlier."""
    if path.suffix.lower() == ".csv":
        return read_features_csv(path)

    features = smcc_features(read_wav(path), smcc)
    if dump_dir is not None:
        write_features_csv(dump_dir / f"{path.stem}.csv", features)
        logger.debug("Wrote %d SMCC vectors of %s", features.n_frames, path)
    return features


def cmd_train_count(args: argparse.Namespace) -> int:
    config = pipeline_config(args)
    if args.synthetic:
        model_set, outcomes = count_experiment(args.synthetic, args.max_speakers, config.seed, config)
        sys.stdout.write(format_confusion(confusion_matrix(outcomes)))
        sys.stdout.write(f"overall accuracy: {overall_accuracy(outcomes):.2f}\n")
    else:
        if args.manifest is None:
            raise ValueError("train-count needs --manifest or --synthetic.")
        manifest = Path(args.manifest)
        by_class: dict[int, list] = {}
        with manifest.open(newline="", encoding="utf-8") as handle:
            for number, row in enumerate(csv.DictReader(handle), start=2):
                if "path" not in row or "label" not in row:
                    raise ValueError(f"{manifest}:{number}: expected path and label columns.")
                features = clip_features(manifest.parent / row["path"], config.smcc, args.features_csv)
                by_class.setdefault(int(row["label"]), []).append(features)
        models = train_count_models(by_class, config.gmm, workers=config.workers)
        model_set = CountModelSet(smcc=config.smcc, models=models)

    save_models(args.output, model_set)
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    model_set = load_models(args.model)
    for path in args.audio:
        features = clip_features(path, model_set.smcc, args.features_csv)
        sys.stdout.write(f"{path} {classify_features(features, model_set.models)}\n")
    return EXIT_OK


def cmd_plotdata(args: argparse.Namespace) -> int:
    for path in export_plot_data(args.dump_dir, args.out_dir):
        logger.info("Wrote %s", path)
    return EXIT_OK


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--fmin", type=float, help="lowest pitch in Hz")
    parser.add_argument("--fmax", type=float, help="highest pitch in Hz")
    parser.add_argument("--alpha", type=float, help="MODGD compression exponent")
    parser.add_argument("--gamma", type=float, help="MODGD smoothed-magnitude exponent")
    parser.add_argument("--rho", type=float, help="stray threshold in Hz")
    parser.add_argument("--grouping", choices=("high_low", "dp"))
    parser.add_argument("--workers", type=int, help="threads for per-frame analysis")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="flat key = value settings file")
    common.add_argument("--seed", type=int, help="seed of every random draw")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")

    parser = UsageParser(prog="py-modgd", description="Two-speaker pitch estimation with MODGD.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=UsageParser)

    def command(name: str, handler: Callable[[argparse.Namespace], int], summary: str):
        sub = commands.add_parser(name, parents=[common], help=summary)
        sub.set_defaults(handler=handler)
        return sub

    estimate = command("estimate", cmd_estimate, "estimate two pitch trajectories of a WAV file")
    estimate.add_argument("audio", nargs="?", type=Path)
    estimate.add_argument("-o", "--output", type=Path)
    estimate.add_argument("--dump-intermediates", type=Path, metavar="DIR")
    _add_pipeline_flags(estimate)

    for name, handler, summary in (
        ("synth", cmd_synth, "render the dry talkers of a scenario and their references"),
        ("mix", cmd_mix, "render the mixture of a scenario and its references"),
    ):
        sub = command(name, handler, summary)
        sub.add_argument("scenario", type=Path)
        sub.add_argument("out_dir", type=Path)
        sub.add_argument("--tmr-db", type=float)
        sub.add_argument("--snr-db", type=float)
        sub.add_argument("--t60-ms", type=float)

    evaluate = command("eval", cmd_eval, "score detected trajectories against references")
    evaluate.add_argument("det", nargs="?")
    evaluate.add_argument("refs", nargs="*")
    evaluate.add_argument("--manifest")
    evaluate.add_argument("--battery", type=int, metavar="N", help="score N synthetic mixtures")
    evaluate.add_argument(
        "--categories", nargs="+", default=["clean"], choices=[str(category) for category in Category]
    )
    evaluate.add_argument("--csv", type=Path)
    _add_pipeline_flags(evaluate)

    train = command("train-count", cmd_train_count, "train speaker-count models")
    train.add_argument("-o", "--output", type=Path, required=True)
    train.add_argument("--manifest", help="CSV with path and label columns")
    train.add_argument("--synthetic", type=int, metavar="N", help="train and test on N synthetic clips")
    train.add_argument("--max-speakers", type=int, default=2)
    train.add_argument(
        "--features-csv", type=Path, metavar="DIR", help="also write each clip's SMCC vectors as CSV"
    )

    count = command("count", cmd_count, "count speakers in WAV files")
    count.add_argument("audio", nargs="+", type=Path)
    count.add_argument("--model", type=Path, required=True)
    count.add_argument(
        "--features-csv", type=Path, metavar="DIR", help="also write each clip's SMCC vectors as CSV"
    )

    plotdata = command("plotdata", cmd_plotdata, "export dumped intermediates as CSV")
    plotdata.add_argument("dump_dir", type=Path)
    plotdata.add_argument("out_dir", type=Path)

    return parser


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args)
    try:
        return args.handler(args)
    except ValueError as error:
        logger.error("%s", error)
        return EXIT_USAGE
    except OSError as error:
        logger.error("%s", error)
        return EXIT_IO
    except ArithmeticError as error:
        logger.error("%s", error)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
