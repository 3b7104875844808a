"""Command-line interface.

    sloggen generate --summary "We bake fresh bread every morning."
    sloggen compare --summary-file about.txt --format json
    sloggen score "The magic of witchcraft" --summary "..."

Options come from flags, then an optional ``--config`` file of
``key = value`` lines, then built-in defaults. Exit codes: 0 success,
2 configuration error, 3 data-file error, 4 generation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .engine import Context, EngineConfig, NicheResult, run, run_niche, with_config
from .errors import ConfigError, DataFileError, NoSeeds, RunFailed, SloganError
from .fitness import (SKELETON_MEASURES, EmbeddingSimilarity, EnglishnessMeasure, FitnessWeights,
                      ScoringContext, evaluate)
from .pipeline import DataPaths, Resources, build_context, load_resources, make_provider
from .rng import NicheStreams
from .seeds import DEFAULT_RELATED_K
from .text import tokenize

EXIT_OK, EXIT_CONFIG, EXIT_DATA, EXIT_GENERATION = 0, 2, 3, 4

log = logging.getLogger("sloggen")

# name -> (type, default); these keys may appear in a config file
SETTINGS = {
    "corpus": (str, None),
    "ngrams": (str, None),
    "embeddings": (str, None),
    "tag_lexicon": (str, None),
    "coarse_map": (str, None),
    "stopwords": (str, None),
    "measure": (str, "full_skeleton/standard"),
    "measures": (str, ",".join(m.label for m in SKELETON_MEASURES)),
    "w_english": (float, 0.8),
    "w_similarity": (float, 0.2),
    "population": (int, 120),
    "generations": (int, 50),
    "niches": (int, 1),
    "top": (int, 10),
    "seed": (int, 0),
    "format": (str, "text"),
    "related_k": (int, DEFAULT_RELATED_K),
    "provider": (str, "offline"),
    "provider_url": (str, None),
}


@dataclass
class MeasureGroup:
    measure: str
    mean_length: float
    result: NicheResult

    def to_dict(self) -> dict:
        return {"measure": self.measure, "mean_length": self.mean_length, "result": self.result.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> MeasureGroup:
        return cls(d["measure"], d["mean_length"], NicheResult.from_dict(d["result"]))


@dataclass
class RunReport:
    command: str
    config: dict
    seeds: dict
    niches: list[NicheResult] = field(default_factory=list)
    groups: list[MeasureGroup] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    duration_s: float | None = None

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "command": self.command,
            "config": dict(self.config),
            "seeds": dict(self.seeds),
            "niches": [n.to_dict() for n in self.niches],
            "groups": [g.to_dict() for g in self.groups],
            "warnings": list(self.warnings),
        }
        if timing and self.duration_s is not None:
            d["duration_s"] = self.duration_s
        return d

    @classmethod
    def from_dict(cls, d: dict) -> RunReport:
        return cls(
            d["command"], dict(d["config"]), dict(d["seeds"]),
            [NicheResult.from_dict(n) for n in d["niches"]],
            [MeasureGroup.from_dict(g) for g in d["groups"]],
            list(d["warnings"]), d.get("duration_s"),
        )

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        return cls.from_dict(json.loads(text))


def read_config_file(path: str) -> dict[str, str]:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    values = {}
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in SETTINGS:
            raise ConfigError(f"{path}:{lineno}: unknown or malformed setting {line!r}")
        values[key] = value.strip()
    return values


def merge_settings(args: argparse.Namespace) -> dict:
    from_file = read_config_file(args.config) if args.config else {}
    settings = {}
    for key, (kind, default) in SETTINGS.items():
        value = getattr(args, key, None)
        if value is None and key in from_file:
            try:
                value = kind(from_file[key])
            except ValueError:
                raise ConfigError(f"{args.config}: bad value for {key}: {from_file[key]!r}") from None
        settings[key] = default if value is None else value
    if settings["format"] not in ("text", "json"):
        raise ConfigError(f"format must be text or json, got {settings['format']!r}")
    return settings


def read_summary(args: argparse.Namespace, required: bool = True) -> str:
    if args.summary is not None and args.summary_file is not None:
        raise ConfigError("give either --summary or --summary-file, not both")
    if required and args.summary is None and args.summary_file is None:
        raise ConfigError("a summary is required: pass --summary or --summary-file")
    if args.summary_file is not None:
        try:
            return Path(args.summary_file).read_text(encoding="utf-8")
        except FileNotFoundError:
            raise DataFileError(f"summary file not found: {args.summary_file}") from None
    return args.summary if args.summary is not None else ""


def engine_config(settings: dict) -> EngineConfig:
    return EngineConfig(
        population_size=settings["population"],
        generations=settings["generations"],
        niches=settings["niches"],
        rng_seed=settings["seed"],
        measure=EnglishnessMeasure.parse(settings["measure"]),
        weights=FitnessWeights(settings["w_english"], settings["w_similarity"]),
        top_output=settings["top"],
    )


def _paths(settings: dict) -> DataPaths:
    return DataPaths.resolve(
        corpus=settings["corpus"], ngrams=settings["ngrams"], embeddings=settings["embeddings"],
        tag_lexicon=settings["tag_lexicon"], coarse_map=settings["coarse_map"],
        stopwords=settings["stopwords"],
    )


def _prepare(settings: dict, summary: str) -> tuple[Resources, Context]:
    config = engine_config(settings)
    res = load_resources(_paths(settings))
    provider = make_provider(res, settings["provider"], settings["provider_url"])
    ctx = build_context(res, summary, config, provider, settings["related_k"])
    return res, ctx


def _warnings(res: Resources, ctx: Context) -> list[str]:
    out = []
    if res.ngrams is not None and res.ngrams.skipped:
        out.append(f"skipped {res.ngrams.skipped} n-gram lines of unsupported arity")
    for word in ctx.seeds.failures:
        out.append(f"related-word lookup failed for {word!r}")
    if ctx.scoring.similarity_failures:
        out.append(f"similarity provider failed {ctx.scoring.similarity_failures} times; scored as 0")
    return out


def _config_echo(settings: dict, config: EngineConfig) -> dict:
    echo = config.to_dict()
    echo.update(related_k=settings["related_k"], provider=settings["provider"])
    return echo


def cmd_generate(settings: dict, summary: str) -> RunReport:
    start = time.perf_counter()
    res, ctx = _prepare(settings, summary)
    results = run(ctx)
    return RunReport(
        command="generate",
        config=_config_echo(settings, ctx.config),
        seeds=ctx.seeds.summary(),
        niches=results,
        warnings=_warnings(res, ctx),
        duration_s=time.perf_counter() - start,
    )


def mean_length(result: NicheResult) -> float:
    if not result.top:
        return 0.0
    return sum(len(tokenize(text)) for text, _ in result.top) / len(result.top)


def compare_measures(ctx: Context, measures: list[EnglishnessMeasure]) -> list[MeasureGroup]:
    """One niche per measure, all on the niche-0 streams of the base seed."""
    groups = []
    for measure in measures:
        mctx = with_config(ctx, measure=measure)
        streams = NicheStreams.for_niche(ctx.config.rng_seed, 0)
        result = run_niche(mctx, 0, streams)
        groups.append(MeasureGroup(measure.label, mean_length(result), result))
    return groups


def cmd_compare_measures(settings: dict, summary: str) -> RunReport:
    start = time.perf_counter()
    measures = [EnglishnessMeasure.parse(m.strip()) for m in settings["measures"].split(",") if m.strip()]
    if not measures:
        raise ConfigError("no measures to compare")
    res, ctx = _prepare(settings, summary)
    groups = compare_measures(ctx, measures)
    echo = _config_echo(settings, ctx.config)
    echo["measures"] = [m.label for m in measures]
    return RunReport(
        command="compare",
        config=echo,
        seeds=ctx.seeds.summary(),
        groups=groups,
        warnings=_warnings(res, ctx),
        duration_s=time.perf_counter() - start,
    )


def cmd_score(settings: dict, text: str, summary: str) -> dict:
    """Full per-metric breakdown of one slogan."""
    if not tokenize(text):
        raise ConfigError("nothing to score: the slogan is empty")
    config = engine_config(settings)
    res = load_resources(_paths(settings))
    scoring = ScoringContext(config.measure, config.weights, res.index,
                             EmbeddingSimilarity(res.vectors, res.stopwords),
                             summary or text, res.ngrams)
    sentence = res.tagger.parse(text)
    report = evaluate(sentence, scoring)
    out = {"text": sentence.text, "measure": config.measure.label,
           "skeleton_standard": [p.standard for p in sentence.tags],
           "skeleton_universal": [p.universal for p in sentence.tags],
           **report.to_dict()}
    if not summary:
        out["note"] = "no summary given; similarity is self-similarity"
    return out


def format_text(report: RunReport) -> str:
    lines = [f"seeds: nouns={','.join(report.seeds['nouns'])} verbs={','.join(report.seeds['verbs'])}"]
    for result in report.niches:
        lines.append(f"niche {result.niche_id}")
        lines += [f"  {rep.total:.4f}  {text}" for text, rep in result.top]
    for group in report.groups:
        lines.append(f"measure {group.measure} (mean length {group.mean_length:.2f})")
        lines += [f"  {rep.total:.4f}  {text}" for text, rep in group.result.top]
    lines += [f"warning: {w}" for w in report.warnings]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sloggen", description="Evolve slogans from a product description.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--summary", help="product or company description")
    common.add_argument("--summary-file", help="read the description from a file")
    common.add_argument("--config", help="key = value settings file")
    for name in ("corpus", "ngrams", "embeddings", "tag-lexicon", "coarse-map", "stopwords"):
        common.add_argument(f"--{name}", metavar="PATH")
    common.add_argument("--measure", help="englishness measure, e.g. full_skeleton/standard")
    common.add_argument("--w-english", type=float)
    common.add_argument("--w-similarity", type=float)
    common.add_argument("--population", type=int)
    common.add_argument("--generations", type=int)
    common.add_argument("--niches", type=int)
    common.add_argument("--top", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--related-k", type=int)
    common.add_argument("--provider", choices=("offline", "http", "none"))
    common.add_argument("--provider-url")
    common.add_argument("--timing", action="store_true", help="include wall-clock duration in JSON")
    common.add_argument("-v", "--verbose", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("generate", parents=[common], help="run the evolutionary search")
    cmp_ = sub.add_parser("compare", parents=[common], help="one run per englishness measure")
    cmp_.add_argument("--measures", help="comma-separated measures (default: the four skeleton measures)")
    score = sub.add_parser("score", parents=[common], help="score a single slogan")
    score.add_argument("text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        settings = merge_settings(args)
        summary = read_summary(args, required=args.command != "score")
        if args.command == "score":
            out = cmd_score(settings, args.text, summary)
            if settings["format"] == "json":
                print(json.dumps(out, indent=2, ensure_ascii=False))
            else:
                for key in ("text", "measure", "englishness", "similarity", "total"):
                    print(f"{key}: {out[key]}")
                for key, value in out["breakdown"].items():
                    print(f"  {key}: {value:.6f}")
            return EXIT_OK
        if args.command == "generate":
            report = cmd_generate(settings, summary)
        else:
            report = cmd_compare_measures(settings, summary)
    except ConfigError as exc:
        print(f"sloggen: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataFileError as exc:
        print(f"sloggen: data file error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (NoSeeds, RunFailed) as exc:
        print(f"sloggen: generation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except SloganError as exc:
        print(f"sloggen: {exc}", file=sys.stderr)
        return EXIT_GENERATION

    if settings["format"] == "json":
        print(report.to_json(timing=args.timing))
    else:
        print(format_text(report))
        print(f"done in {report.duration_s:.2f}s", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
