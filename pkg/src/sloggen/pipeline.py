"""Loading data files and assembling a run context."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import data
from .corpus import SkeletonIndex, SloganCorpus, SurfaceNgramSet, build_skeleton_index, load_corpus, load_surface_ngrams
from .embeddings import WordVectors
from .engine import Context, EngineConfig
from .errors import ConfigError
from .fitness import SURFACE_NGRAM, EmbeddingSimilarity, ScoringContext, SimilarityProvider
from .seeds import DEFAULT_RELATED_K, EmbeddingProvider, HttpProvider, RelatedWordProvider, build_seeds, load_stopwords
from .text import Tagger


@dataclass(frozen=True)
class DataPaths:
    corpus: Path
    ngrams: Path
    embeddings: Path
    tag_lexicon: Path
    coarse_map: Path
    stopwords: Path

    @classmethod
    def resolve(cls, corpus=None, ngrams=None, embeddings=None, tag_lexicon=None,
                coarse_map=None, stopwords=None) -> DataPaths:
        return cls(
            data.resolve(corpus, data.CORPUS),
            data.resolve(ngrams, data.NGRAMS),
            data.resolve(embeddings, data.EMBEDDINGS),
            data.resolve(tag_lexicon, data.TAG_LEXICON),
            data.resolve(coarse_map, data.COARSE_MAP),
            data.resolve(stopwords, data.STOPWORDS),
        )


@dataclass(frozen=True)
class Resources:
    tagger: Tagger
    corpus: SloganCorpus
    index: SkeletonIndex
    ngrams: SurfaceNgramSet | None
    vectors: WordVectors
    stopwords: frozenset[str]


def load_resources(paths: DataPaths, with_ngrams: bool = True) -> Resources:
    tagger = Tagger.from_files(paths.tag_lexicon, paths.coarse_map)
    corpus = load_corpus(paths.corpus, tagger)
    return Resources(
        tagger=tagger,
        corpus=corpus,
        index=build_skeleton_index(corpus),
        ngrams=load_surface_ngrams(paths.ngrams) if with_ngrams else None,
        vectors=WordVectors.load(paths.embeddings),
        stopwords=load_stopwords(paths.stopwords),
    )


def make_provider(res: Resources, kind: str = "offline", url: str | None = None) -> RelatedWordProvider | None:
    if kind == "offline":
        return EmbeddingProvider(res.vectors, res.tagger)
    if kind == "http":
        if not url:
            raise ConfigError("--provider http needs --provider-url")
        return HttpProvider(url)
    if kind == "none":
        return None
    raise ConfigError(f"unknown related-word provider {kind!r}")


def build_context(res: Resources, summary: str, config: EngineConfig,
                  provider: RelatedWordProvider | None = None, related_k: int = DEFAULT_RELATED_K,
                  similarity: SimilarityProvider | None = None) -> Context:
    if config.measure.kind == SURFACE_NGRAM and res.ngrams is None:
        raise ConfigError("the surface_ngram measure needs an n-gram list")
    seeds = build_seeds(summary, res.tagger, provider, related_k, res.stopwords)
    scoring = ScoringContext(
        measure=config.measure,
        weights=config.weights,
        index=res.index,
        provider=similarity or EmbeddingSimilarity(res.vectors, res.stopwords),
        summary=summary,
        ngrams=res.ngrams,
    )
    return Context(res.corpus, seeds, scoring, res.tagger, config)
