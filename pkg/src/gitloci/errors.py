"""Exception types shared across the package."""


class GitLociError(Exception):
    """Base class for every error raised by this package."""


class InvalidRankError(GitLociError, ValueError):
    """A Dynkin letter/rank combination that names no simple group."""


class RankMismatchError(GitLociError, ValueError):
    """Operands that belong to different groups or have incompatible lengths."""


class ConversionError(GitLociError, ValueError):
    """Unsupported or malformed coordinate conversion."""


class ParseError(GitLociError, ValueError):
    """Malformed user input: group names, weight specs, weight files, loci."""


class NonDominantError(ParseError):
    """A weight that must be dominant but is not."""


class ResourceGuardError(GitLociError, RuntimeError):
    """A configurable enumeration cap was exceeded."""
