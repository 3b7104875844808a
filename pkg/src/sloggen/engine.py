"""The evolutionary loop.

Each generation after the first is rebuilt from the ranked population:

* a third of fresh corpus samples,
* a sixth of mutants of distinct parents from the top third,
* a sixth of mutants of distinct parents from the bottom third,
* a third of unmodified elites (the top third, fitness kept).

There is no crossover. Niches are independent runs with their own random
streams; they share only the read-only scoring context.
"""

from __future__ import annotations

import dataclasses
import enum
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .corpus import SloganCorpus, sample_individual
from .errors import ConfigError, RunFailed, SloganError
from .fitness import DEFAULT_MEASURE, EnglishnessMeasure, FitnessReport, FitnessWeights, ScoringContext, evaluate
from .rng import NicheStreams
from .seeds import SeedLexicon
from .text import Tagger, Token, TaggedSentence

log = logging.getLogger(__name__)


class Lineage(str, enum.Enum):
    SAMPLED = "sampled"
    MUTATED_TOP = "mutated_top"
    MUTATED_BOTTOM = "mutated_bottom"
    ELITE = "elite"


@dataclass
class Individual:
    sentence: TaggedSentence
    fitness: FitnessReport | None = None
    lineage: Lineage = Lineage.SAMPLED
    noop: bool = False

    @property
    def text(self) -> str:
        return self.sentence.text

    @property
    def total(self) -> float:
        if self.fitness is None:
            raise ValueError(f"individual {self.text!r} has not been scored")
        return self.fitness.total


@dataclass(frozen=True)
class EngineConfig:
    population_size: int = 120
    generations: int = 50
    niches: int = 1
    rng_seed: int = 0
    measure: EnglishnessMeasure = DEFAULT_MEASURE
    weights: FitnessWeights = field(default_factory=FitnessWeights)
    top_output: int = 10

    def __post_init__(self):
        if self.population_size < 6 or self.population_size % 6:
            raise ConfigError(f"population_size must be a multiple of 6 (>= 6), got {self.population_size}")
        if self.generations < 0:
            raise ConfigError(f"generations must be >= 0, got {self.generations}")
        if self.niches < 1:
            raise ConfigError(f"niches must be >= 1, got {self.niches}")
        if self.top_output < 1:
            raise ConfigError(f"top_output must be >= 1, got {self.top_output}")
        if not 0 <= self.rng_seed < 2**64:
            raise ConfigError(f"rng_seed must fit in 64 bits, got {self.rng_seed}")

    def to_dict(self) -> dict:
        return {
            "population_size": self.population_size,
            "generations": self.generations,
            "niches": self.niches,
            "rng_seed": self.rng_seed,
            "measure": self.measure.label,
            "w_english": self.weights.english,
            "w_similarity": self.weights.similarity,
            "top_output": self.top_output,
        }


@dataclass(frozen=True)
class Context:
    """Everything a niche reads; nothing in here is mutated by a run."""
    corpus: SloganCorpus
    seeds: SeedLexicon
    scoring: ScoringContext
    tagger: Tagger
    config: EngineConfig


@dataclass
class NicheResult:
    niche_id: int
    top: list[tuple[str, FitnessReport]]
    history: list[dict[str, float]]

    def to_dict(self) -> dict:
        return {
            "niche_id": self.niche_id,
            "top": [{"text": text, **report.to_dict()} for text, report in self.top],
            "history": [dict(h) for h in self.history],
        }

    @classmethod
    def from_dict(cls, d: dict) -> NicheResult:
        top = [(item["text"], FitnessReport.from_dict(item)) for item in d["top"]]
        return cls(d["niche_id"], top, [dict(h) for h in d["history"]])


def mutable_slots(sentence: TaggedSentence, seeds: SeedLexicon) -> list[int]:
    return [i for i, pair in enumerate(sentence.tags) if seeds.words_for(pair.universal)]


def mutate(ind: Individual, seeds: SeedLexicon, rng: random.Random, tagger: Tagger) -> Individual:
    """Replace one noun or verb with a seed word of the same class.

    The slot and the replacement are both drawn uniformly. When the slogan
    has no noun or verb with seed words available, a copy flagged ``noop``
    is returned.
    """
    slots = mutable_slots(ind.sentence, seeds)
    if not slots:
        return Individual(ind.sentence, None, ind.lineage, noop=True)
    pos = slots[rng.randrange(len(slots))]
    choices = seeds.words_for(ind.sentence.tags[pos].universal)
    word = choices[rng.randrange(len(choices))]
    tokens = list(ind.sentence.tokens)
    tokens[pos] = Token.of(word)
    return Individual(tagger.tag(tokens), None, ind.lineage)


def rank(population: Sequence[Individual]) -> list[Individual]:
    """Best first: total descending, then text, then original order."""
    return sorted(population, key=lambda ind: (-ind.total, ind.text))


def _score(ind: Individual, ctx: Context) -> Individual:
    if ind.fitness is None:
        ind.fitness = evaluate(ind.sentence, ctx.scoring)
    return ind


def _fresh(ctx: Context, rng: random.Random, n: int) -> list[Individual]:
    return [Individual(sample_individual(ctx.corpus, rng)) for _ in range(n)]


def step_generation(population: Sequence[Individual], ctx: Context, streams: NicheStreams) -> list[Individual]:
    size = len(population)
    if size != ctx.config.population_size:
        raise ValueError(f"population has {size} members, expected {ctx.config.population_size}")
    third, sixth = size // 3, size // 6
    ranked = rank(population)
    top, bottom = ranked[:third], ranked[-third:]

    fresh = _fresh(ctx, streams.sample, third)
    mutants = []
    for group, lineage in ((top, Lineage.MUTATED_TOP), (bottom, Lineage.MUTATED_BOTTOM)):
        for parent in streams.mutate.sample(group, sixth):
            child = mutate(parent, ctx.seeds, streams.mutate, ctx.tagger)
            child.lineage = lineage
            mutants.append(child)
    elites = [Individual(ind.sentence, ind.fitness, Lineage.ELITE) for ind in top]

    new = fresh + mutants + elites
    for ind in new:
        _score(ind, ctx)
    return new


def _history_entry(population: Sequence[Individual]) -> dict[str, float]:
    totals = [ind.total for ind in population]
    return {"best": max(totals), "mean": sum(totals) / len(totals)}


def top_unique(population: Sequence[Individual], n: int) -> list[tuple[str, FitnessReport]]:
    out, seen = [], set()
    for ind in rank(population):
        if ind.text in seen:
            continue
        seen.add(ind.text)
        out.append((ind.text, ind.fitness))
        if len(out) == n:
            break
    return out


Observer = Callable[[int, list[Individual]], None]


def run_niche(ctx: Context, niche_id: int, streams: NicheStreams | None = None,
              observer: Observer | None = None) -> NicheResult:
    cfg = ctx.config
    if streams is None:
        streams = NicheStreams.for_niche(cfg.rng_seed, niche_id)
    population = [_score(ind, ctx) for ind in _fresh(ctx, streams.sample, cfg.population_size)]
    history = [_history_entry(population)]
    if observer is not None:
        observer(0, population)
    for gen in range(1, cfg.generations + 1):
        population = step_generation(population, ctx, streams)
        history.append(_history_entry(population))
        if observer is not None:
            observer(gen, population)
    return NicheResult(niche_id, top_unique(population, cfg.top_output), history)


def run(ctx: Context, niche_ids: Sequence[int] | None = None, workers: int = 1) -> list[NicheResult]:
    """Run every niche; a failed niche is logged and skipped.

    Raises :class:`RunFailed` when no niche succeeds.
    """
    ids = list(range(ctx.config.niches)) if niche_ids is None else list(niche_ids)

    def attempt(nid: int):
        try:
            return run_niche(ctx, nid)
        except SloganError as exc:
            log.error("niche %d failed: %s", nid, exc)
            return exc

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(attempt, ids))
    else:
        outcomes = [attempt(nid) for nid in ids]
    results = [r for r in outcomes if isinstance(r, NicheResult)]
    if not results:
        errors = "; ".join(str(e) for e in outcomes)
        raise RunFailed(f"all {len(ids)} niches failed: {errors}")
    return results


def with_config(ctx: Context, **changes) -> Context:
    """Copy of ``ctx`` with some config fields replaced.

    The scoring context is rebuilt so it follows the new measure and weights.
    """
    config = dataclasses.replace(ctx.config, **changes)
    scoring = dataclasses.replace(ctx.scoring, measure=config.measure, weights=config.weights)
    return dataclasses.replace(ctx, config=config, scoring=scoring)
