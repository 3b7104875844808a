"""Slogan corpus loading and the englishness reference structures."""

from __future__ import annotations

import dataclasses
import logging
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import DataFileError, EmptyCorpus, EmptySet
from .text import Tagger, TaggedSentence, Tagset, skeleton, tokenize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SloganCorpus:
    slogans: tuple[TaggedSentence, ...]
    source_path: str

    def __len__(self) -> int:
        return len(self.slogans)


@dataclass(frozen=True)
class SkeletonIndex:
    full_skeletons: dict[Tagset, frozenset[tuple[str, ...]]]
    skeleton_trigrams: dict[Tagset, frozenset[tuple[str, str, str]]]


class NormSet(frozenset):
    """Frozenset of token tuples whose membership test is case-insensitive.

    Accepts either a tuple of tokens or a space-separated string.
    """

    def __contains__(self, item) -> bool:
        if isinstance(item, str):
            item = item.split()
        return super().__contains__(tuple(w.casefold() for w in item))


@dataclass(frozen=True)
class SurfaceNgramSet:
    bigrams: NormSet
    trigrams: NormSet
    skipped: int = 0


def _read_lines(path: str | Path, what: str) -> list[str]:
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise DataFileError(f"{what} not found: {path}") from None
    except UnicodeDecodeError as exc:
        raise DataFileError(f"{what} is not valid UTF-8: {path} ({exc})") from None


def corpus_from_lines(lines: Iterable[str], tagger: Tagger, source: str = "<memory>") -> SloganCorpus:
    seen: set[str] = set()
    slogans = []
    for line in lines:
        line = line.strip()
        if not line or line in seen:
            continue
        seen.add(line)
        tokens = tokenize(line)
        if tokens:
            slogans.append(tagger.tag(tokens))
    if not slogans:
        raise EmptyCorpus(f"no slogans in corpus {source}")
    return SloganCorpus(tuple(slogans), source)


def load_corpus(path: str | Path, tagger: Tagger) -> SloganCorpus:
    """Load one slogan per line; blank and repeated lines are dropped."""
    return corpus_from_lines(_read_lines(path, "slogan corpus"), tagger, str(path))


def trigrams(seq: tuple[str, ...]) -> list[tuple[str, str, str]]:
    return [(seq[i], seq[i + 1], seq[i + 2]) for i in range(len(seq) - 2)]


def build_skeleton_index(corpus: SloganCorpus) -> SkeletonIndex:
    full = {}
    tri = {}
    for tagset in Tagset:
        skeletons = frozenset(skeleton(s, tagset) for s in corpus.slogans)
        full[tagset] = skeletons
        tri[tagset] = frozenset(g for sk in skeletons for g in trigrams(sk))
    return SkeletonIndex(full, tri)


def load_surface_ngrams(path: str | Path) -> SurfaceNgramSet:
    """Load a list of 2- and 3-grams, one per line.

    Lines of any other arity are skipped and counted.
    """
    bigrams, trigrams_ = set(), set()
    skipped = 0
    for lineno, line in enumerate(_read_lines(path, "n-gram list"), 1):
        words = tuple(w.casefold() for w in line.split())
        if not words:
            continue
        if len(words) == 2:
            bigrams.add(words)
        elif len(words) == 3:
            trigrams_.add(words)
        else:
            skipped += 1
            log.warning("%s:%d: skipping %d-gram %r", path, lineno, len(words), line)
    if not bigrams and not trigrams_:
        raise EmptySet(f"no 2- or 3-grams in {path}")
    return SurfaceNgramSet(NormSet(bigrams), NormSet(trigrams_), skipped)


def sample_individual(corpus: SloganCorpus, rng: random.Random) -> TaggedSentence:
    """Uniform draw from the corpus, returned as a fresh object."""
    if not corpus.slogans:
        raise EmptyCorpus(f"no slogans to sample in {corpus.source_path}")
    return dataclasses.replace(corpus.slogans[rng.randrange(len(corpus.slogans))])
