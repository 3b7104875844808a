"""Dense word vectors in the plain-text ``word v1 ... vd`` format."""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from .errors import DataFileError


class WordVectors:
    def __init__(self, words: list[str], vectors: np.ndarray):
        if len(words) != len(vectors):
            raise ValueError("words and vectors differ in length")
        self.words = words
        self.vectors = vectors
        self.index = {w: i for i, w in enumerate(words)}
        norms = np.linalg.norm(vectors, axis=1, keepdims=True)
        self._unit = vectors / np.where(norms == 0, 1.0, norms)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def __contains__(self, word: str) -> bool:
        return word in self.index

    def __len__(self) -> int:
        return len(self.words)

    def get(self, word: str) -> np.ndarray | None:
        i = self.index.get(word)
        return None if i is None else self.vectors[i]

    @classmethod
    def load(cls, path: str | Path) -> WordVectors:
        """Read a vector file, with or without a ``<vocab_size> <dim>`` header."""
        path = Path(path)
        try:
            fh = open(path, encoding="utf-8")
        except FileNotFoundError:
            raise DataFileError(f"embedding file not found: {path}") from None
        words, rows = [], []
        dim = None
        with fh:
            for lineno, line in enumerate(fh, 1):
                parts = line.split()
                if not parts:
                    continue
                if lineno == 1 and len(parts) == 2 and all(p.isdigit() for p in parts):
                    dim = int(parts[1])
                    continue
                if dim is None:
                    dim = len(parts) - 1
                if len(parts) - 1 != dim:
                    raise DataFileError(f"{path}:{lineno}: expected {dim} components, got {len(parts) - 1}")
                try:
                    rows.append([float(x) for x in parts[1:]])
                except ValueError:
                    raise DataFileError(f"{path}:{lineno}: non-numeric vector component") from None
                words.append(parts[0])
        if not words:
            raise DataFileError(f"no vectors in {path}")
        return cls(words, np.asarray(rows, dtype=np.float64))

    def nearest(self, word: str, accept: Callable[[str], bool] | None = None,
                limit: int | None = None) -> list[tuple[str, float]]:
        """Vocabulary words ranked by cosine to ``word``, excluding ``word``.

        Ties are broken by vocabulary order. ``accept`` filters candidates
        before ``limit`` is applied.
        """
        i = self.index.get(word)
        if i is None:
            return []
        sims = self._unit @ self._unit[i]
        order = np.lexsort((np.arange(len(sims)), -sims))
        out = []
        for j in order:
            if j == i:
                continue
            w = self.words[j]
            if accept is None or accept(w):
                out.append((w, float(sims[j])))
                if limit is not None and len(out) >= limit:
                    break
        return out

    def centroid(self, words: Iterable[str]) -> np.ndarray | None:
        idx = [self.index[w] for w in words if w in self.index]
        if not idx:
            return None
        return self.vectors[idx].mean(axis=0)
