"""Tokenization and dual-tagset part-of-speech tagging.

Tagging is lexicon-first: every word is looked up (case-folded) in a
word -> Penn tag dictionary, and unknown words fall through an ordered list
of suffix/shape rules. There is no context model, so a word receives the
same tag wherever it appears, except for the capitalized-unknown-word rule
which only fires away from the sentence start.

Each standard (Penn) tag is projected onto the 12-tag universal tagset
through a fixed table, so the two tag sequences of a sentence are always
consistent with each other.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .data import data_path
from .errors import DataFileError, EmptyInput


class Tagset(str, enum.Enum):
    STANDARD = "standard"
    UNIVERSAL = "universal"


# The 36 word-level Penn Treebank tags.
PENN_WORD_TAGS = frozenset(
    """CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$
    RB RBR RBS RP SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB""".split()
)
# Punctuation tags; skeletons keep punctuation so these are tagged too.
PENN_PUNCT_TAGS = frozenset([".", ",", ":", "``", "''", "-LRB-", "-RRB-", "#", "$"])
PENN_TAGS = PENN_WORD_TAGS | PENN_PUNCT_TAGS

UNIVERSAL_TAGS = frozenset(
    ["NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP", "NUM", "CONJ", "PRT", ".", "X"]
)

_TOKEN_RE = re.compile(r"\w+(?:['’-]\w+)*|[^\w\s]")
_NO_SPACE_BEFORE = frozenset(".,!?'’")
_OPENING_QUOTES = frozenset("“‘")
_PUNCT_TAG = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "-": ":", "–": ":", "—": ":", "…": ":",
    "“": "``", "‘": "``",
    "”": "''", "’": "''", "'": "''", '"': "''",
    "(": "-LRB-", "[": "-LRB-", "{": "-LRB-",
    ")": "-RRB-", "]": "-RRB-", "}": "-RRB-",
    "#": "#", "$": "$", "£": "$", "€": "$",
    "&": "CC",
}


@dataclass(frozen=True)
class Token:
    surface: str
    norm: str

    @classmethod
    def of(cls, surface: str) -> Token:
        return cls(surface, surface.casefold())


@dataclass(frozen=True)
class TagPair:
    standard: str
    universal: str


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[Token, ...]
    tags: tuple[TagPair, ...]
    text: str

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def norms(self) -> tuple[str, ...]:
        return tuple(t.norm for t in self.tokens)


def tokenize(raw: str) -> list[Token]:
    """Split ``raw`` into word and punctuation tokens.

    Apostrophes and hyphens inside a word stay attached ("everyone's",
    "well-known"); every other non-word character is its own token.
    """
    return [Token.of(m.group()) for m in _TOKEN_RE.finditer(raw)]


def detokenize(surfaces: Iterable[str]) -> str:
    out: list[str] = []
    for s in surfaces:
        if out and s[0] not in _NO_SPACE_BEFORE and out[-1] not in _OPENING_QUOTES:
            out.append(" ")
        out.append(s)
    return "".join(out)


def render(tokens: Sequence[Token]) -> str:
    """Detokenize with sentence-initial capitalization."""
    text = detokenize(t.surface for t in tokens)
    return text[:1].upper() + text[1:]


def is_punct(token: Token) -> bool:
    return not any(ch.isalnum() or ch == "_" for ch in token.surface)


def _is_number(s: str) -> bool:
    return any(ch.isdigit() for ch in s) and all(ch.isdigit() or ch in ",.-'’" for ch in s)


def _is_comment(line: str) -> bool:
    # "#<TAB>..." is the entry for the Penn tag "#", not a comment
    return line.startswith("#") and not line.startswith("#\t")


def load_tag_lexicon(path: str | Path) -> dict[str, str]:
    """Read a ``word<TAB>TAG`` file; ``#`` starts a comment line."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise DataFileError(f"tag lexicon not found: {path}") from None
    lexicon: dict[str, str] = {}
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or _is_comment(line):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or parts[1] not in PENN_TAGS:
            raise DataFileError(f"{path}:{lineno}: expected 'word<TAB>PENN_TAG', got {line!r}")
        lexicon[parts[0].casefold()] = parts[1]
    return lexicon


def load_coarse_map(path: str | Path) -> dict[str, str]:
    """Read a ``PENN_TAG<TAB>UNIVERSAL_TAG`` table covering every Penn tag."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise DataFileError(f"coarse map not found: {path}") from None
    table: dict[str, str] = {}
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or _is_comment(line):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or parts[1] not in UNIVERSAL_TAGS:
            raise DataFileError(f"{path}:{lineno}: expected 'PENN_TAG<TAB>UNIVERSAL_TAG', got {line!r}")
        table[parts[0]] = parts[1]
    missing = sorted(PENN_TAGS - table.keys())
    if missing:
        raise DataFileError(f"{path}: coarse map is missing tags {' '.join(missing)}")
    return table


class Tagger:
    """Deterministic lexicon + rules tagger producing :class:`TagPair` s."""

    def __init__(self, lexicon: Mapping[str, str], coarse: Mapping[str, str]):
        missing = PENN_TAGS - coarse.keys()
        if missing:
            raise DataFileError(f"coarse map is missing tags {' '.join(sorted(missing))}")
        self.lexicon = dict(lexicon)
        self.coarse = dict(coarse)
        self._pairs = {tag: TagPair(tag, coarse[tag]) for tag in PENN_TAGS}

    @classmethod
    def from_files(cls, lexicon_path: str | Path | None = None,
                   coarse_path: str | Path | None = None) -> Tagger:
        return cls(
            load_tag_lexicon(lexicon_path or data_path("tag_lexicon.tsv")),
            load_coarse_map(coarse_path or data_path("penn_universal.tsv")),
        )

    def tag_word(self, token: Token, position: int = 0) -> str:
        """Penn tag of one token; ``position`` only matters for capitalization."""
        surface, norm = token.surface, token.norm
        if is_punct(token):
            return _PUNCT_TAG.get(surface, "SYM") if len(surface) == 1 else "SYM"
        tag = self.lexicon.get(norm)
        if tag is not None:
            return tag
        if norm.endswith("ly"):
            return "RB"
        if norm.endswith("ing"):
            return "VBG"
        if norm.endswith("ed"):
            return "VBD"
        if norm.endswith("s") and self._noun_stem(norm):
            return "NNS"
        if position > 0 and surface[0].isupper():
            return "NNP"
        if _is_number(norm):
            return "CD"
        return "NN"

    def _noun_stem(self, norm: str) -> bool:
        stems = [norm[:-1]]
        if norm.endswith("es"):
            stems.append(norm[:-2])
        if norm.endswith("ies"):
            stems.append(norm[:-3] + "y")
        return any(self.lexicon.get(s) == "NN" for s in stems)

    def pair(self, standard: str) -> TagPair:
        return self._pairs[standard]

    def tag(self, tokens: Sequence[Token]) -> TaggedSentence:
        if not tokens:
            raise EmptyInput("cannot tag an empty token sequence")
        tokens = tuple(tokens)
        tags = tuple(self._pairs[self.tag_word(t, i)] for i, t in enumerate(tokens))
        return TaggedSentence(tokens, tags, render(tokens))

    def parse(self, raw: str) -> TaggedSentence:
        return self.tag(tokenize(raw))

    def universal_of(self, word: str) -> str:
        """Universal tag of ``word`` tagged in isolation."""
        return self.coarse[self.tag_word(Token.of(word))]


@lru_cache(maxsize=None)
def default_tagger() -> Tagger:
    return Tagger.from_files()


def skeleton(sentence: TaggedSentence, tagset: Tagset | str) -> tuple[str, ...]:
    if Tagset(tagset) is Tagset.STANDARD:
        return tuple(p.standard for p in sentence.tags)
    return tuple(p.universal for p in sentence.tags)
