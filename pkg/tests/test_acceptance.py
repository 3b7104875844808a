"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import json
import random
import subprocess
import sys
import time
from collections import Counter

import pytest

from sloggen.cli import compare_measures, mean_length
from sloggen.corpus import build_skeleton_index, corpus_from_lines, load_surface_ngrams
from sloggen.engine import (EngineConfig, Individual, Lineage, mutable_slots, mutate, rank, run, run_niche,
                            with_config)
from sloggen.fitness import (ALL_MEASURES, FULL_SKELETON, SKELETON_MEASURES, SKELETON_TRIGRAM, EmbeddingSimilarity,
                             FitnessWeights, ScoringContext, evaluate, score_full_skeleton, score_skeleton_trigrams,
                             score_surface_ngrams)
from sloggen.pipeline import build_context, make_provider
from sloggen.seeds import SeedLexicon
from sloggen.text import Tagset, Token, skeleton

from . import oracles
from .conftest import HOGWARTS

pytestmark = pytest.mark.slow


def _vocabulary(corpus):
    return sorted({t.surface.lower() for s in corpus.slogans for t in s.tokens})


def _random_sentence(rng, vocab, tagger, max_len=8):
    words = [rng.choice(vocab) for _ in range(rng.randint(1, max_len))]
    return tagger.tag([Token.of(w) for w in words])


@pytest.fixture(scope="module")
def hogwarts_ctx(resources):
    return build_context(resources, HOGWARTS, EngineConfig(), make_provider(resources))


def test_criterion_1_composition(resources, record):
    start = time.perf_counter()
    violations = 0
    trials = 0
    for size in (6, 12, 120):
        base = build_context(resources, HOGWARTS, EngineConfig(population_size=size, generations=5))
        for seed in range(100):
            ctx = with_config(base, rng_seed=seed)
            want = Counter({Lineage.SAMPLED: size // 3, Lineage.MUTATED_TOP: size // 6,
                            Lineage.MUTATED_BOTTOM: size // 6, Lineage.ELITE: size // 3})
            censuses = []
            run_niche(ctx, 0, observer=lambda gen, pop: censuses.append(Counter(i.lineage for i in pop)))
            violations += sum(1 for c in censuses[1:] if c != want)
            trials += 1
    elapsed = time.perf_counter() - start
    ok = violations == 0 and elapsed < 10
    record("1", ok, f"{trials} trials, {violations} violations, {elapsed:.1f}s")
    assert violations == 0
    assert elapsed < 10


def test_criterion_2_oracle_equivalence(resources, record, tmp_path):
    rng = random.Random(2024)
    tagger = resources.tagger
    all_lines = [s.text for s in resources.corpus.slogans]
    mismatches = 0
    checks = 0
    for c in range(25):
        lines = rng.sample(all_lines, rng.randint(1, 20))
        corpus = corpus_from_lines(lines, tagger)
        idx = build_skeleton_index(corpus)
        vocab = _vocabulary(corpus)
        grams = []
        for s in corpus.slogans:
            norms = s.norms
            for n in (2, 3):
                grams += [" ".join(norms[i:i + n]) for i in range(len(norms) - n + 1)]
        ngram_lines = rng.sample(grams, max(1, len(grams) // 2)) if grams else ["the magic"]
        path = tmp_path / f"ngrams{c}.txt"
        path.write_text("\n".join(ngram_lines) + "\n", encoding="utf-8")
        ngrams = load_surface_ngrams(path)
        for k in range(200):
            if k % 4 == 0:
                s = rng.choice(corpus.slogans)
            else:
                s = _random_sentence(rng, vocab, tagger)
            for tagset in Tagset:
                checks += 2
                mismatches += score_full_skeleton(s, idx, tagset) != oracles.full_skeleton_score(s, corpus.slogans, tagset)
                mismatches += abs(score_skeleton_trigrams(s, idx, tagset)
                                  - oracles.trigram_score(s, corpus.slogans, tagset)) > 1e-12
            checks += 1
            mismatches += abs(score_surface_ngrams(s, ngrams)
                              - oracles.surface_ngram_score(list(s.norms), ngram_lines)) > 1e-12
    record("2", mismatches == 0, f"{checks} comparisons, {mismatches} mismatches")
    assert mismatches == 0


def test_criterion_3_range_and_combiner(resources, record):
    rng = random.Random(3)
    tagger = resources.tagger
    vocab = _vocabulary(resources.corpus)
    sim = EmbeddingSimilarity(resources.vectors, resources.stopwords)
    contexts = {}
    bad_range = bad_total = 0
    for _ in range(10_000):
        measure = rng.choice(ALL_MEASURES)
        we = round(rng.uniform(0.51, 0.99), 2)
        key = (measure, we)
        if key not in contexts:
            contexts[key] = ScoringContext(measure, FitnessWeights(we, round(1 - we, 2)), resources.index, sim,
                                           HOGWARTS, resources.ngrams)
        ctx = contexts[key]
        s = _random_sentence(rng, vocab, tagger) if rng.random() < 0.7 else rng.choice(resources.corpus.slogans)
        r = evaluate(s, ctx)
        values = list(r.breakdown.values()) + [r.englishness, r.similarity, r.total]
        bad_range += any(not 0.0 <= v <= 1.0 for v in values)
        expected = ctx.weights.english * r.englishness + ctx.weights.similarity * r.similarity
        bad_total += abs(r.total - expected) > 1e-12

    # ranking under weights rescaled by a common factor before normalization
    population = [Individual(_random_sentence(rng, vocab, tagger)) for _ in range(120)]
    base_ctx = ScoringContext(ALL_MEASURES[2], FitnessWeights.normalized(4, 1), resources.index, sim, HOGWARTS)
    for ind in population:
        ind.fitness = evaluate(ind.sentence, base_ctx)
    base_order = [ind.text for ind in rank(population)]
    flips = 0
    for factor in (1e-6, 0.01, 0.3, 7.0, 1e9):
        ctx = ScoringContext(ALL_MEASURES[2], FitnessWeights.normalized(4 * factor, 1 * factor), resources.index,
                             sim, HOGWARTS)
        scaled = [Individual(ind.sentence, evaluate(ind.sentence, ctx)) for ind in population]
        flips += [ind.text for ind in rank(scaled)] != base_order
    ok = bad_range == 0 and bad_total == 0 and flips == 0
    record("3", ok, f"range violations {bad_range}, combiner errors {bad_total}, ranking changes {flips}")
    assert bad_range == 0 and bad_total == 0 and flips == 0


def test_criterion_4_elitism(resources, hogwarts_ctx, record):
    drops = 0
    for seed in range(50):
        ctx = with_config(hogwarts_ctx, rng_seed=seed)
        best = [h["best"] for h in run_niche(ctx, 0).history]
        drops += any(b < a for a, b in zip(best, best[1:]))
    record("4", drops == 0, f"50 runs of 120x50, {drops} with a decrease")
    assert drops == 0


def test_criterion_5_mutation_contract(resources, hogwarts_ctx, record):
    rng = random.Random(5)
    tagger = resources.tagger
    lexicons = [
        hogwarts_ctx.seeds,
        SeedLexicon(("witchcraft",), (), {"witchcraft": "summary"}),
        SeedLexicon((), ("educate",), {"educate": "summary"}),
    ]
    violations = noops = 0
    for i in range(10_000):
        seeds = lexicons[i % 3]
        parent = rng.choice(resources.corpus.slogans)
        child = mutate(Individual(parent), seeds, rng, tagger)
        has_slot = bool(mutable_slots(parent, seeds))
        noops += child.noop
        if child.noop == has_slot:
            violations += 1
            continue
        if len(child.sentence) != len(parent):
            violations += 1
            continue
        diff = [j for j in range(len(parent)) if child.sentence.norms[j] != parent.norms[j]]
        if len(diff) > 1 or any(child.sentence.norms[j] not in seeds.words_for(parent.tags[j].universal)
                                for j in diff):
            violations += 1
    record("5", violations == 0, f"10000 mutations, {noops} no-ops, {violations} violations")
    assert violations == 0


def test_criterion_6_determinism_and_niches(resources, hogwarts_ctx, record):
    argv = [sys.executable, "-m", "sloggen", "generate", "--summary", HOGWARTS, "--seed", "42", "--niches", "3",
            "--format", "json"]
    outs = [subprocess.run(argv, capture_output=True, text=True, check=True, timeout=300).stdout for _ in range(2)]
    identical = outs[0] == outs[1] and bool(json.loads(outs[0])["niches"])

    ctx = with_config(hogwarts_ctx, niches=3, rng_seed=42)
    full = {r.niche_id: json.dumps(r.to_dict()) for r in run(ctx)}
    without_second = {r.niche_id: json.dumps(r.to_dict()) for r in run(ctx, niche_ids=[0, 2])}
    independent = without_second == {0: full[0], 2: full[2]}
    cli_full = {n["niche_id"]: json.dumps(n) for n in json.loads(outs[0])["niches"]}
    matches_cli = cli_full == full
    ok = identical and independent and matches_cli
    record("6", ok, f"byte-identical={identical}, niche deletion unchanged={independent}, "
                    f"in-process equals CLI={matches_cli}")
    assert identical and independent and matches_cli


def test_criterion_7_hogwarts(resources, hogwarts_ctx, record):
    start = time.perf_counter()
    result = run(hogwarts_ctx)[0]
    seeds = hogwarts_ctx.seeds.all_words
    known = resources.index.full_skeletons[Tagset.STANDARD]
    good = 0
    for text, _ in result.top:
        s = resources.tagger.parse(text)
        good += skeleton(s, Tagset.STANDARD) in known and bool(set(s.norms) & seeds)
    share = good / len(result.top)

    # pinned protocol: the default four-measure comparison at seed 0
    groups = compare_measures(hogwarts_ctx, list(SKELETON_MEASURES))
    lengths = {g.measure: g.mean_length for g in groups}
    full_mean = sum(mean_length(g.result) for g, m in zip(groups, SKELETON_MEASURES) if m.kind == FULL_SKELETON) / 2
    tri_mean = sum(mean_length(g.result) for g, m in zip(groups, SKELETON_MEASURES) if m.kind == SKELETON_TRIGRAM) / 2
    elapsed = time.perf_counter() - start

    print("top slogans:", [t for t, _ in result.top])
    print("mean lengths:", lengths)
    valid_ok = share >= 0.8
    length_ok = full_mean <= tri_mean
    ok = valid_ok and length_ok and elapsed < 60
    record("7", ok, f"valid+seeded {share:.0%} of top {len(result.top)}; mean length full {full_mean:.2f} "
                    f"vs trigram {tri_mean:.2f}; {elapsed:.1f}s")
    assert valid_ok, f"only {share:.0%} of the top slogans are skeleton-valid and seed-bearing"
    assert elapsed < 60
    assert length_ok, f"full-skeleton outputs are longer on average ({full_mean:.2f} > {tri_mean:.2f})"


def test_criterion_8_similarity_identities(resources, record):
    rng = random.Random(8)
    sim = EmbeddingSimilarity(resources.vectors, resources.stopwords)
    texts = [s.text for s in resources.corpus.slogans]
    vocab = _vocabulary(resources.corpus) + resources.vectors.words[:2000]

    def random_text():
        return " ".join(rng.choice(vocab) for _ in range(rng.randint(1, 10)))

    pool = texts + [random_text() for _ in range(500)] + [HOGWARTS]
    self_checked = oov = self_bad = 0
    for text in pool:
        words = sim.content_words(text)
        if not any(resources.vectors.get(w) is not None for w in words):
            oov += 1
            continue
        self_checked += 1
        self_bad += abs(sim.compare(text, text).weighted - 1.0) > 1e-9

    asym = 0
    for _ in range(1000):
        a, b = rng.choice(pool), rng.choice(pool)
        ab, ba = sim.compare(a, b), sim.compare(b, a)
        asym += abs(ab.weighted - ba.weighted) > 1e-12 or ab.jaccard_distance != ba.jaccard_distance
    ok = self_bad == 0 and asym == 0
    record("8", ok, f"self-similarity on {self_checked} texts ({oov} without known content words skipped), "
                    f"{self_bad} off; 1000 pairs, {asym} asymmetric")
    assert self_bad == 0 and asym == 0
