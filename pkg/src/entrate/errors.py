"""Exception hierarchy for the entrate library.

``EntrateError`` is the common base. ``ValidationError`` subclasses cover bad
problem instances, ``NumericalError`` subclasses cover failures of the
numerical machinery, and ``ConfigError`` subclasses cover config-file I/O.
"""


class EntrateError(Exception):
    """Base class for all errors raised by this library."""


class ValidationError(EntrateError):
    """A problem instance violates the model assumptions."""


class ShapeMismatch(ValidationError):
    """Array shapes are inconsistent with the declared symbol count."""


class RowNotStochastic(ValidationError):
    """A transition-matrix row does not sum to 1 within tolerance."""


class EntryOutOfRange(ValidationError):
    """A transition probability lies outside the open interval (0, 1)."""


class NoiseOutOfRange(ValidationError):
    """A noise probability lies outside the open interval (0, 1)."""


class SymbolOutOfRange(EntrateError):
    """A word contains a symbol outside {0, ..., q-1}."""


class NumericalError(EntrateError):
    """Base class for numerical failures."""


class NoConvergence(NumericalError):
    """An iterative solver failed to reach its tolerance within the cap."""


class RankDeficient(NumericalError):
    """The truncated linear system has (numerically) dependent columns."""


class GammaNotContractive(NumericalError):
    """The estimated contraction rate is >= 1 (should not occur for valid models)."""


class BlockTooLarge(EntrateError):
    """Requested block length would enumerate more words than the cap allows."""


class ConfigError(EntrateError):
    """Base class for config-file problems."""


class ParseError(ConfigError):
    """The config file is not well-formed JSON."""


class SchemaError(ConfigError):
    """The config file parses but does not match the expected schema."""
