"""Fitness of a candidate slogan.

The total score is ``w_english * englishness + w_similarity * similarity``.
Englishness comes from one selected measure:

* ``full_skeleton``: 1 if the slogan's tag sequence is a corpus skeleton, else 0.
* ``skeleton_trigram``: share of the slogan's tag 3-grams found among the
  corpus skeleton 3-grams (slogans under 3 tokens use ``full_skeleton``).
* ``surface_ngram``: matched word 2-grams plus 3-grams over token count,
  capped at 1.

Similarity to the summary comes from a pluggable provider; the default one
works on content words and mean word vectors.
"""

from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from .corpus import SkeletonIndex, SurfaceNgramSet, trigrams
from .embeddings import WordVectors
from .errors import ConfigError, ProviderFailure
from .text import TaggedSentence, Tagset, is_punct, skeleton, tokenize

log = logging.getLogger(__name__)

FULL_SKELETON = "full_skeleton"
SKELETON_TRIGRAM = "skeleton_trigram"
SURFACE_NGRAM = "surface_ngram"
KINDS = (FULL_SKELETON, SKELETON_TRIGRAM, SURFACE_NGRAM)
_TAGSET_SUFFIX = {Tagset.STANDARD: "std", Tagset.UNIVERSAL: "univ"}


@dataclass(frozen=True)
class EnglishnessMeasure:
    kind: str
    tagset: Tagset | None = Tagset.STANDARD

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown englishness measure {self.kind!r}")
        if self.kind == SURFACE_NGRAM:
            object.__setattr__(self, "tagset", None)
        elif self.tagset is None:
            raise ConfigError(f"measure {self.kind} needs a tagset")
        else:
            object.__setattr__(self, "tagset", Tagset(self.tagset))

    @property
    def name(self) -> str:
        """Stable metric name, e.g. ``full_skeleton_std``."""
        if self.tagset is None:
            return self.kind
        return f"{self.kind}_{_TAGSET_SUFFIX[self.tagset]}"

    @property
    def label(self) -> str:
        return self.kind if self.tagset is None else f"{self.kind}/{self.tagset.value}"

    @classmethod
    def parse(cls, text: str) -> EnglishnessMeasure:
        """Accepts ``full_skeleton/standard`` or the metric name ``full_skeleton_std``."""
        for m in ALL_MEASURES:
            if text in (m.name, m.label):
                return m
        if text in (FULL_SKELETON, SKELETON_TRIGRAM):
            return cls(text, Tagset.STANDARD)
        raise ConfigError(
            f"unknown measure {text!r}; choose from {', '.join(m.label for m in ALL_MEASURES)}"
        )


SKELETON_MEASURES = (
    EnglishnessMeasure(FULL_SKELETON, Tagset.STANDARD),
    EnglishnessMeasure(FULL_SKELETON, Tagset.UNIVERSAL),
    EnglishnessMeasure(SKELETON_TRIGRAM, Tagset.STANDARD),
    EnglishnessMeasure(SKELETON_TRIGRAM, Tagset.UNIVERSAL),
)
ALL_MEASURES = SKELETON_MEASURES + (EnglishnessMeasure(SURFACE_NGRAM, None),)
DEFAULT_MEASURE = SKELETON_MEASURES[0]


@dataclass(frozen=True)
class FitnessWeights:
    english: float = 0.8
    similarity: float = 0.2

    def __post_init__(self):
        for name in ("english", "similarity"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigError(f"weight {name}={v} outside [0, 1]")
        if abs(self.english + self.similarity - 1.0) > 1e-9:
            raise ConfigError(f"weights must sum to 1, got {self.english} + {self.similarity}")
        if not self.similarity < self.english:
            raise ConfigError("the similarity weight must be smaller than the englishness weight")

    @classmethod
    def normalized(cls, english: float, similarity: float) -> FitnessWeights:
        """Scale two non-negative weights to sum to one."""
        if english < 0 or similarity < 0 or english + similarity <= 0:
            raise ConfigError(f"weights must be non-negative and not both zero: {english}, {similarity}")
        total = english + similarity
        return cls(english / total, similarity / total)

    def combine(self, englishness: float, similarity: float) -> float:
        return self.english * englishness + self.similarity * similarity


@dataclass(frozen=True)
class FitnessReport:
    englishness: float
    similarity: float
    total: float
    breakdown: dict[str, float] = field(default_factory=dict)
    similarity_failed: bool = False

    def to_dict(self) -> dict:
        d = {
            "englishness": self.englishness,
            "similarity": self.similarity,
            "total": self.total,
            "breakdown": dict(self.breakdown),
        }
        if self.similarity_failed:
            d["similarity_failed"] = True
        return d

    @classmethod
    def from_dict(cls, d: dict) -> FitnessReport:
        return cls(d["englishness"], d["similarity"], d["total"], dict(d["breakdown"]),
                   d.get("similarity_failed", False))


# -- englishness ------------------------------------------------------------

def score_full_skeleton(s: TaggedSentence, idx: SkeletonIndex, tagset: Tagset | str) -> float:
    tagset = Tagset(tagset)
    return 1.0 if skeleton(s, tagset) in idx.full_skeletons[tagset] else 0.0


def score_skeleton_trigrams(s: TaggedSentence, idx: SkeletonIndex, tagset: Tagset | str) -> float:
    tagset = Tagset(tagset)
    if len(s.tokens) < 3:
        return score_full_skeleton(s, idx, tagset)
    grams = trigrams(skeleton(s, tagset))
    known = idx.skeleton_trigrams[tagset]
    return sum(1 for g in grams if g in known) / max(1, len(grams))


def score_surface_ngrams(s: TaggedSentence, ngrams: SurfaceNgramSet) -> float:
    norms = s.norms
    if not norms:
        return 0.0
    matched = sum(1 for i in range(len(norms) - 1) if norms[i:i + 2] in ngrams.bigrams)
    matched += sum(1 for i in range(len(norms) - 2) if norms[i:i + 3] in ngrams.trigrams)
    return min(1.0, matched / len(norms))


# -- similarity -------------------------------------------------------------

@dataclass(frozen=True)
class SimilarityMetrics:
    jaccard_distance: float
    cosine: float
    euclidean_distance: float
    weighted: float

    def as_breakdown(self) -> dict[str, float]:
        return {
            "sim_jaccard": self.jaccard_distance,
            "sim_cosine": min(1.0, max(0.0, self.cosine)),
            "sim_euclidean": 1.0 / (1.0 + self.euclidean_distance),
            "sim_weighted": self.weighted,
        }


class SimilarityProvider(Protocol):
    concurrent_safe: bool

    def compare(self, a: str, b: str) -> SimilarityMetrics: ...


class EmbeddingSimilarity:
    """Content-word overlap and mean-vector geometry.

    ``weighted = 0.25 * (1 - jaccard) + 0.5 * max(cosine, 0) + 0.25 / (1 + euclid)``.
    Words missing from the vector file are left out of the mean vectors;
    a text with no known content word scores 0.
    """

    concurrent_safe = True
    JACCARD_WEIGHT = 0.25
    COSINE_WEIGHT = 0.5
    EUCLID_WEIGHT = 0.25

    def __init__(self, vectors: WordVectors, stopwords: frozenset[str] = frozenset()):
        self.vectors = vectors
        self.stopwords = stopwords
        self._cache: dict[str, tuple[frozenset[str], np.ndarray | None]] = {}

    def content_words(self, text: str) -> frozenset[str]:
        return frozenset(t.norm for t in tokenize(text)
                         if not is_punct(t) and t.norm not in self.stopwords)

    def _represent(self, text: str) -> tuple[frozenset[str], np.ndarray | None]:
        rep = self._cache.get(text)
        if rep is None:
            words = self.content_words(text)
            rep = (words, self.vectors.centroid(sorted(words)))
            self._cache[text] = rep
        return rep

    def compare(self, a: str, b: str) -> SimilarityMetrics:
        wa, va = self._represent(a)
        wb, vb = self._represent(b)
        union = wa | wb
        jaccard = 1.0 - len(wa & wb) / len(union) if union else 1.0
        if va is None or vb is None:
            return SimilarityMetrics(jaccard, 0.0, math.inf, 0.0)
        na, nb = float(np.linalg.norm(va)), float(np.linalg.norm(vb))
        cosine = float(np.dot(va, vb)) / (na * nb) if na > 0 and nb > 0 else 0.0
        cosine = min(1.0, max(-1.0, cosine))
        euclid = float(np.linalg.norm(va - vb))
        weighted = (self.JACCARD_WEIGHT * (1.0 - jaccard)
                    + self.COSINE_WEIGHT * max(0.0, cosine)
                    + self.EUCLID_WEIGHT / (1.0 + euclid))
        return SimilarityMetrics(jaccard, cosine, euclid, min(1.0, max(0.0, weighted)))


def similarity(slogan_text: str, summary: str, provider: SimilarityProvider) -> float:
    """The provider's weighted score, clamped to [0, 1].

    Any provider exception surfaces as :class:`ProviderFailure`.
    """
    try:
        metrics = provider.compare(slogan_text, summary)
    except ProviderFailure:
        raise
    except Exception as exc:
        raise ProviderFailure(str(exc)) from exc
    return min(1.0, max(0.0, metrics.weighted))


# -- combined ---------------------------------------------------------------

@dataclass
class ScoringContext:
    measure: EnglishnessMeasure
    weights: FitnessWeights
    index: SkeletonIndex
    provider: SimilarityProvider
    summary: str
    ngrams: SurfaceNgramSet | None = None
    # shared by copies made with dataclasses.replace
    failure_log: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.measure.kind == SURFACE_NGRAM and self.ngrams is None:
            raise ConfigError("the surface_ngram measure needs an n-gram list")
        self._sim_cache: dict[str, tuple[dict[str, float], bool]] = {}
        self._lock = None if getattr(self.provider, "concurrent_safe", False) else threading.Lock()

    def _similarity(self, text: str) -> tuple[dict[str, float], bool]:
        hit = self._sim_cache.get(text)
        if hit is not None:
            return hit
        try:
            if self._lock is None:
                metrics = self.provider.compare(text, self.summary)
            else:
                with self._lock:
                    metrics = self.provider.compare(text, self.summary)
            parts = metrics.as_breakdown()
            parts["sim_weighted"] = min(1.0, max(0.0, metrics.weighted))
            hit = (parts, False)
        except Exception as exc:
            log.warning("similarity provider failed on %r: %s", text, exc)
            self.failure_log.append(text)
            return {"sim_weighted": 0.0}, True
        self._sim_cache[text] = hit
        return hit

    @property
    def similarity_failures(self) -> int:
        return len(self.failure_log)


def englishness_breakdown(s: TaggedSentence, index: SkeletonIndex,
                          ngrams: SurfaceNgramSet | None = None) -> dict[str, float]:
    out = {}
    for m in SKELETON_MEASURES:
        if m.kind == FULL_SKELETON:
            out[m.name] = score_full_skeleton(s, index, m.tagset)
        else:
            out[m.name] = score_skeleton_trigrams(s, index, m.tagset)
    if ngrams is not None:
        out[SURFACE_NGRAM] = score_surface_ngrams(s, ngrams)
    return out


def evaluate(s: TaggedSentence, ctx: ScoringContext) -> FitnessReport:
    breakdown = englishness_breakdown(s, ctx.index, ctx.ngrams)
    sim_parts, failed = ctx._similarity(s.text)
    breakdown.update(sim_parts)
    english = breakdown[ctx.measure.name]
    sim = sim_parts["sim_weighted"]
    return FitnessReport(english, sim, ctx.weights.combine(english, sim), breakdown, failed)
