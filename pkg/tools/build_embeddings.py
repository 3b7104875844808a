"""Regenerate the bundled word vectors and n-gram list from WordNet 3.0.

Usage: python tools/build_embeddings.py /path/to/pattern3/text/en

Each vocabulary word is described by a sparse bag of WordNet features
(its synsets, their hypernyms and derivational relatives, and gloss words),
weighted by sense rank. The tf-idf weighted matrix is reduced with a
truncated SVD. The n-gram list holds the most frequent 2- and 3-grams of
the WordNet glosses and usage examples.
"""

import collections
import re
import sys
from pathlib import Path

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import svds

DIM = 64
VOCAB_FROM_FREQUENCY = 9000
NGRAMS_PER_ARITY = 3000
POS_FILES = {"n": ("data.noun1", "data.noun2"), "v": ("data.verb",),
             "a": ("data.adj",), "r": ("data.adv",)}
INDEX_FILES = {"n": "index.noun", "v": "index.verb", "a": "index.adj", "r": "index.adv"}
WORD_RE = re.compile(r"[a-z]+(?:['-][a-z]+)*")
EXTRA_WORDS = """
educate young minds practice witchcraft wizardry service others sorcery magic
magician wizard witch spell school student teacher learning lesson pupil
pizza bread cheese burger beef restaurant kitchen chef coffee tea chocolate
robot machine engine software computer bank money car travel hotel flight
shoe clothing fashion garden flower music song book library game sport
""".split()

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "sloggen" / "data"


def load_stopwords() -> set[str]:
    return {w.strip() for w in (DATA / "stopwords.txt").read_text().splitlines()
            if w.strip() and not w.startswith("#")}


def base_form(word: str, senses) -> str | None:
    candidates = [word]
    for suffix, repl in (("ies", "y"), ("es", ""), ("s", ""), ("ied", "y"),
                         ("ed", ""), ("ed", "e"), ("ing", ""), ("ing", "e")):
        if word.endswith(suffix) and len(word) > len(suffix) + 2:
            candidates.append(word[: -len(suffix)] + repl)
    for cand in candidates:
        if cand in senses:
            return cand
    return None


def parse_synsets(wn: Path):
    synsets = {}
    for pos, files in POS_FILES.items():
        for name in files:
            for line in (wn / name).read_text(encoding="latin-1").splitlines():
                if line.startswith("  "):
                    continue
                head, _, gloss = line.partition(" | ")
                f = head.split()
                offset, ss_type = f[0], f[2]
                key = offset + ("a" if ss_type == "s" else ss_type)
                n_words = int(f[3], 16)
                words = [f[4 + 2 * i].lower() for i in range(n_words)]
                i = 4 + 2 * n_words
                n_ptr = int(f[i])
                ptrs = []
                for j in range(n_ptr):
                    sym, tgt, tpos = f[i + 1 + 4 * j], f[i + 2 + 4 * j], f[i + 3 + 4 * j]
                    ptrs.append((sym, tgt + ("a" if tpos == "s" else tpos)))
                synsets[key] = (words, ptrs, gloss.strip())
    return synsets


def parse_index(wn: Path):
    senses = collections.defaultdict(list)
    for pos, name in INDEX_FILES.items():
        for line in (wn / name).read_text(encoding="latin-1").splitlines():
            if line.startswith("  "):
                continue
            f = line.split()
            lemma, n_syn = f[0], int(f[2])
            for off in f[-n_syn:]:
                senses[lemma].append(off + pos)
    return senses


def main(en_dir: str) -> None:
    en = Path(en_dir)
    wn = en / "wordnet" / "dict"
    stop = load_stopwords()
    synsets = parse_synsets(wn)
    senses = parse_index(wn)

    vocab: list[str] = []
    seen = set()
    lemma_of: dict[str, str] = {}

    def add(word):
        if word in seen or word in stop:
            return
        lemma = base_form(word, senses)
        if lemma is not None:
            seen.add(word)
            vocab.append(word)
            lemma_of[word] = lemma

    for line in (en / "en-frequency.txt").read_text(encoding="utf-8").splitlines():
        w = line.split()[0]
        if w.islower() and w.isalpha() and len(w) > 2:
            add(w)
        if len(vocab) >= VOCAB_FROM_FREQUENCY:
            break
    for line in (DATA / "slogans.txt").read_text(encoding="utf-8").splitlines():
        for w in WORD_RE.findall(line.lower()):
            add(w)
    for w in EXTRA_WORDS:
        add(w)

    rows, cols, vals = [], [], []
    features: dict[str, int] = {}

    def feat(name):
        return features.setdefault(name, len(features))

    for r, word in enumerate(vocab):
        bag = collections.Counter()
        syns = senses[lemma_of[word]]
        norm = sum(1.0 / (k + 1) for k in range(len(syns)))
        for k, key in enumerate(syns):
            if key not in synsets:
                continue
            w = (1.0 / (k + 1)) / norm
            _, ptrs, gloss = synsets[key]
            bag["s:" + key] += w
            for sym, tgt in ptrs:
                if sym in ("@", "@i"):
                    bag["s:" + tgt] += 0.5 * w
                    for sym2, tgt2 in synsets.get(tgt, ((), (), ""))[1]:
                        if sym2 in ("@", "@i"):
                            bag["s:" + tgt2] += 0.25 * w
                elif sym in ("+", "\\", "&", "=", "%p", "#p", "~"):
                    bag["s:" + tgt] += 0.4 * w
            for g in WORD_RE.findall(gloss.split('"')[0].lower()):
                if g not in stop and g != word:
                    bag["g:" + g] += 0.3 * w
        for name, v in bag.items():
            rows.append(r)
            cols.append(feat(name))
            vals.append(v)

    m = sparse.csr_matrix((vals, (rows, cols)), shape=(len(vocab), len(features)))
    df = np.bincount(m.indices, minlength=m.shape[1])
    idf = np.log(m.shape[0] / np.maximum(df, 1)) + 1.0
    m = m @ sparse.diags(idf)
    norms = np.sqrt(np.asarray(m.multiply(m).sum(axis=1)).ravel())
    m = sparse.diags(1.0 / np.maximum(norms, 1e-12)) @ m
    u, s, _ = svds(m.astype(np.float64), k=DIM, random_state=0)
    order = np.argsort(-s)
    vec = u[:, order] * s[order]
    # sign convention for reproducibility
    vec *= np.sign(vec[np.abs(vec).argmax(axis=0), np.arange(DIM)])
    vec /= np.maximum(np.linalg.norm(vec, axis=1, keepdims=True), 1e-12)
    vec *= 2.0

    with open(DATA / "embeddings.txt", "w", encoding="utf-8") as fh:
        fh.write(f"{len(vocab)} {DIM}\n")
        for word, v in zip(vocab, vec):
            fh.write(word + " " + " ".join(f"{x:.3f}" for x in v) + "\n")

    bigrams, trigrams = collections.Counter(), collections.Counter()
    for _, _, gloss in synsets.values():
        for chunk in re.split(r'[;"]', gloss.lower()):
            toks = WORD_RE.findall(chunk)
            bigrams.update(zip(toks, toks[1:]))
            trigrams.update(zip(toks, toks[1:], toks[2:]))
    with open(DATA / "ngrams.txt", "w", encoding="utf-8") as fh:
        for counter in (bigrams, trigrams):
            top = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))[:NGRAMS_PER_ARITY]
            for gram, _ in top:
                fh.write(" ".join(gram) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
