"""Brute-force reference computations used to cross-check the scorers.

These work on plain lists and linear scans on purpose, without the set
structures of the code under test.
"""

import math


def skeleton_list(sentence, tagset):
    field = "standard" if getattr(tagset, "value", tagset) == "standard" else "universal"
    return [getattr(p, field) for p in sentence.tags]


def unique_skeletons(corpus_sentences, tagset):
    out = []
    for s in corpus_sentences:
        sk = skeleton_list(s, tagset)
        if sk not in out:
            out.append(sk)
    return out


def skeleton_trigram_list(corpus_sentences, tagset):
    out = []
    for sk in unique_skeletons(corpus_sentences, tagset):
        for i in range(len(sk) - 2):
            g = [sk[i], sk[i + 1], sk[i + 2]]
            if g not in out:
                out.append(g)
    return out


def full_skeleton_score(sentence, corpus_sentences, tagset):
    sk = skeleton_list(sentence, tagset)
    for other in corpus_sentences:
        if skeleton_list(other, tagset) == sk:
            return 1.0
    return 0.0


def trigram_score(sentence, corpus_sentences, tagset):
    sk = skeleton_list(sentence, tagset)
    if len(sk) < 3:
        return full_skeleton_score(sentence, corpus_sentences, tagset)
    known = skeleton_trigram_list(corpus_sentences, tagset)
    hits = 0
    total = 0
    for i in range(len(sk) - 2):
        total += 1
        if [sk[i], sk[i + 1], sk[i + 2]] in known:
            hits += 1
    return hits / total


def surface_ngram_score(words, ngram_lines):
    words = [w.lower() for w in words]
    grams = [line.lower().split() for line in ngram_lines]
    hits = 0
    for n in (2, 3):
        for i in range(len(words) - n + 1):
            if words[i:i + n] in grams:
                hits += 1
    return min(1.0, hits / len(words)) if words else 0.0


def read_vectors(path, wanted=None):
    vecs = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh):
            parts = line.split()
            if lineno == 0 and len(parts) == 2:
                continue
            if wanted is None or parts[0] in wanted:
                vecs[parts[0]] = [float(x) for x in parts[1:]]
    return vecs


def cosine(a, b):
    dot = sum(x * y for x, y in zip(a, b))
    na = math.sqrt(sum(x * x for x in a))
    nb = math.sqrt(sum(x * x for x in b))
    return dot / (na * nb)


def weighted_similarity(a_words, b_words, vecs):
    """Reference for the default provider on already-extracted content words."""
    a, b = set(a_words), set(b_words)
    union = a | b
    jaccard = 1.0 - len(a & b) / len(union) if union else 1.0

    def mean(words):
        rows = [vecs[w] for w in sorted(words) if w in vecs]
        if not rows:
            return None
        return [sum(col) / len(rows) for col in zip(*rows)]

    ma, mb = mean(a), mean(b)
    if ma is None or mb is None:
        return 0.0
    cos = max(0.0, min(1.0, cosine(ma, mb)))
    dist = math.sqrt(sum((x - y) ** 2 for x, y in zip(ma, mb)))
    return 0.25 * (1.0 - jaccard) + 0.5 * cos + 0.25 / (1.0 + dist)
