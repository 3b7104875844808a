"""Evolutionary slogan generation from a free-text product description."""

from .corpus import SloganCorpus, build_skeleton_index, load_corpus, load_surface_ngrams
from .engine import EngineConfig, Individual, NicheResult, mutate, run, run_niche, step_generation
from .errors import (ConfigError, DataFileError, EmptyCorpus, EmptyInput, EmptySet, NoSeeds,
                     ProviderFailure, RunFailed, SloganError)
from .fitness import EnglishnessMeasure, FitnessReport, FitnessWeights, evaluate
from .pipeline import DataPaths, build_context, load_resources
from .seeds import SeedLexicon, expand_seeds, extract_seeds
from .text import Tagger, TaggedSentence, Tagset, default_tagger, skeleton, tokenize

__version__ = "0.1.0"

__all__ = [
    "SloganCorpus",
    "build_skeleton_index",
    "load_corpus",
    "load_surface_ngrams",
    "EngineConfig",
    "Individual",
    "NicheResult",
    "mutate",
    "run",
    "run_niche",
    "step_generation",
    "ConfigError",
    "DataFileError",
    "EmptyCorpus",
    "EmptyInput",
    "EmptySet",
    "NoSeeds",
    "ProviderFailure",
    "RunFailed",
    "SloganError",
    "EnglishnessMeasure",
    "FitnessReport",
    "FitnessWeights",
    "evaluate",
    "DataPaths",
    "build_context",
    "load_resources",
    "SeedLexicon",
    "expand_seeds",
    "extract_seeds",
    "Tagger",
    "TaggedSentence",
    "Tagset",
    "default_tagger",
    "skeleton",
    "tokenize",
]
