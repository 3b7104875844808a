"""Exception hierarchy. The CLI maps each family onto an exit code."""


class SloganError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SloganError, ValueError):
    """Invalid configuration value or request."""


class DataFileError(SloganError):
    """A data file is missing or malformed."""


class EmptyInput(SloganError, ValueError):
    pass


class EmptyCorpus(DataFileError):
    pass


class EmptySet(DataFileError):
    pass


class NoSeeds(SloganError):
    """The summary yielded neither nouns nor verbs to mutate with."""


class ProviderFailure(SloganError):
    """A related-word or similarity provider could not answer."""


class RunFailed(SloganError):
    """Every niche of a run failed."""
