# core/errors.py
# Exception hierarchy shared by every verification package.


class VerificationError(Exception):
    """Base class for every error raised by the toolkit."""


class SpecError(VerificationError, ValueError):
    """Malformed sequence specification or rational literal."""


class HorizonError(VerificationError, IndexError):
    """Index, horizon or window outside the materialized range."""


class DomainError(VerificationError, ValueError):
    """A mathematical precondition does not hold."""


class BracketError(VerificationError):
    """A bisection bracket does not straddle the transition."""


class ConfigError(VerificationError):
    """Settings file could not be loaded or validated."""
