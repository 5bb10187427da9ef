"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration: bad detector knobs, conflicting lexicons, bad scenario."""


class OutOfRetention(LookupError):
    """A bucket query reached back past the store's retention horizon."""


class ParseError(ValueError):
    """A scenario or trace file could not be parsed.

    ``line`` is the 1-based line number of the offending record when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SourceError(RuntimeError):
    """A stream source failed and could not be recovered."""
