"""Bundled demo data files.

``SLOGGEN_DATA_DIR`` overrides the bundled copies: a default file present in
that directory is used instead of the one shipped with the package.
"""

import os
from pathlib import Path

BUNDLED = Path(__file__).resolve().parent

CORPUS = "slogans.txt"
NGRAMS = "ngrams.txt"
EMBEDDINGS = "embeddings.txt"
TAG_LEXICON = "tag_lexicon.tsv"
COARSE_MAP = "penn_universal.tsv"
STOPWORDS = "stopwords.txt"


def data_dir() -> Path | None:
    env = os.environ.get("SLOGGEN_DATA_DIR")
    return Path(env) if env else None


def data_path(name: str) -> Path:
    """Location of the default data file ``name``."""
    base = data_dir()
    if base is not None and (base / name).is_file():
        return base / name
    return BUNDLED / name


def resolve(path: str | os.PathLike | None, default: str) -> Path:
    """Resolve a user-supplied data path, falling back to ``default``.

    Relative paths that do not exist from the working directory are tried
    against ``SLOGGEN_DATA_DIR``.
    """
    if path is None:
        return data_path(default)
    p = Path(path)
    base = data_dir()
    if not p.is_absolute() and not p.exists() and base is not None and (base / p).exists():
        return base / p
    return p
