"""Seed words: nouns and verbs of the summary plus related words.

Mutation replaces a noun or verb of a slogan with a seed word of the same
class, so the seed lexicon is where the topic of the summary enters the
population.
"""

from __future__ import annotations

import json
import logging
import time
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol, Sequence

from .embeddings import WordVectors
from .errors import DataFileError, NoSeeds, ProviderFailure
from .text import Tagger, tokenize

log = logging.getLogger(__name__)

NOUN = "noun"
VERB = "verb"
POS_CLASSES = {NOUN: "NOUN", VERB: "VERB"}
MIN_SEED_LENGTH = 3
DEFAULT_RELATED_K = 5


@dataclass(frozen=True)
class SeedLexicon:
    nouns: tuple[str, ...]
    verbs: tuple[str, ...]
    origin: dict[str, str] = field(default_factory=dict)
    failures: tuple[str, ...] = ()

    def words_for(self, universal_tag: str) -> tuple[str, ...]:
        if universal_tag == "NOUN":
            return self.nouns
        if universal_tag == "VERB":
            return self.verbs
        return ()

    @property
    def all_words(self) -> frozenset[str]:
        return frozenset(self.nouns) | frozenset(self.verbs)

    def __bool__(self) -> bool:
        return bool(self.nouns or self.verbs)

    def summary(self) -> dict:
        return {
            "nouns": list(self.nouns),
            "verbs": list(self.verbs),
            "related": sorted(w for w, o in self.origin.items() if o == "related"),
            "provider_failures": list(self.failures),
        }


class RelatedWordProvider(Protocol):
    """Returns words related to ``word`` of the class ``pos`` ("noun"/"verb"),
    best first."""

    concurrent_safe: bool

    def related(self, word: str, pos: str) -> list[str]: ...


def load_stopwords(path: str | Path) -> frozenset[str]:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise DataFileError(f"stopword list not found: {path}") from None
    return frozenset(w.strip().casefold() for w in lines if w.strip() and not w.startswith("#"))


def extract_seeds(summary: str, tagger: Tagger, stopwords: frozenset[str] = frozenset()) -> SeedLexicon:
    """Collect the nouns and verbs of ``summary`` (case-folded, in order).

    Raises :class:`NoSeeds` when nothing usable is found.
    """
    tokens = tokenize(summary)
    if not tokens:
        raise NoSeeds("summary is empty")
    sentence = tagger.tag(tokens)
    nouns: list[str] = []
    verbs: list[str] = []
    for tok, pair in zip(sentence.tokens, sentence.tags):
        word = tok.norm
        if len(word) < MIN_SEED_LENGTH or word in stopwords:
            continue
        if pair.universal == "NOUN" and word not in nouns:
            nouns.append(word)
        elif pair.universal == "VERB" and word not in verbs:
            verbs.append(word)
    if not nouns and not verbs:
        raise NoSeeds(f"no nouns or verbs found in summary {summary!r}")
    origin = {w: "summary" for w in nouns + verbs}
    return SeedLexicon(tuple(nouns), tuple(verbs), origin)


def expand_seeds(lexicon: SeedLexicon, provider: RelatedWordProvider, k: int,
                 tagger: Tagger, stopwords: frozenset[str] = frozenset()) -> SeedLexicon:
    """Append up to ``k`` related words per summary word.

    Provider answers are screened: a candidate must be one lowercase token,
    not a stopword, and tagged as the requested class when tagged alone.
    A provider error for one word is logged and recorded, never raised.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return lexicon
    nouns, verbs = list(lexicon.nouns), list(lexicon.verbs)
    origin = dict(lexicon.origin)
    failures = list(lexicon.failures)
    for pos, target in ((NOUN, nouns), (VERB, verbs)):
        universal = POS_CLASSES[pos]
        for word in [w for w in target if origin.get(w) == "summary"]:
            try:
                candidates = provider.related(word, pos)
            except ProviderFailure as exc:
                log.warning("related-word lookup failed for %r: %s", word, exc)
                failures.append(word)
                continue
            added = 0
            for cand in candidates:
                if added >= k:
                    break
                if not _acceptable(cand, universal, tagger, stopwords) or cand in target:
                    continue
                target.append(cand)
                origin.setdefault(cand, "related")
                added += 1
    return SeedLexicon(tuple(nouns), tuple(verbs), origin, tuple(failures))


def _acceptable(word: str, universal: str, tagger: Tagger, stopwords: frozenset[str]) -> bool:
    toks = tokenize(word)
    return (
        len(toks) == 1
        and toks[0].surface == word
        and word == word.lower()
        and len(word) >= MIN_SEED_LENGTH
        and word not in stopwords
        and tagger.universal_of(word) == universal
    )


class EmbeddingProvider:
    """Offline provider: nearest neighbours in a word-vector space,
    restricted to words the tagger puts in the requested class."""

    concurrent_safe = True

    def __init__(self, vectors: WordVectors, tagger: Tagger, max_results: int = 50):
        self.vectors = vectors
        self.tagger = tagger
        self.max_results = max_results

    def related(self, word: str, pos: str) -> list[str]:
        universal = POS_CLASSES[pos]
        hits = self.vectors.nearest(
            word,
            accept=lambda w: self.tagger.universal_of(w) == universal,
            limit=self.max_results,
        )
        return [w for w, _ in hits]


class HttpProvider:
    """Related words from a Datamuse-style HTTP service.

    Sends ``GET <url>?ml=<word>&pos=<n|v>&max=<n>`` and expects a JSON array
    of ``{"word": ..., "score": ...}`` objects in descending score.
    """

    concurrent_safe = False

    def __init__(self, url: str, timeout: float = 5.0, max_retries: int = 2,
                 max_results: int = 50, backoff: float = 0.5):
        self.url = url
        self.timeout = timeout
        self.max_retries = max_retries
        self.max_results = max_results
        self.backoff = backoff

    def related(self, word: str, pos: str) -> list[str]:
        query = urllib.parse.urlencode({"ml": word, "pos": pos[0], "max": self.max_results})
        sep = "&" if "?" in self.url else "?"
        last: Exception | None = None
        for attempt in range(self.max_retries + 1):
            try:
                with urllib.request.urlopen(self.url + sep + query, timeout=self.timeout) as resp:
                    payload = json.loads(resp.read().decode("utf-8"))
                return _parse_scored_words(payload)
            except (urllib.error.URLError, TimeoutError, OSError, ValueError) as exc:
                last = exc
                if attempt < self.max_retries:
                    time.sleep(self.backoff * (attempt + 1))
        raise ProviderFailure(f"{self.url}: {last}")


def _parse_scored_words(payload) -> list[str]:
    if not isinstance(payload, list):
        raise ValueError("expected a JSON array")
    items = [(str(d["word"]), float(d.get("score", 0.0))) for d in payload]
    items.sort(key=lambda it: -it[1])
    return [w for w, _ in items]


def build_seeds(summary: str, tagger: Tagger, provider: RelatedWordProvider | None,
                k: int = DEFAULT_RELATED_K, stopwords: Sequence[str] = ()) -> SeedLexicon:
    stop = frozenset(stopwords)
    lexicon = extract_seeds(summary, tagger, stop)
    if provider is None:
        return lexicon
    return expand_seeds(lexicon, provider, k, tagger, stop)
