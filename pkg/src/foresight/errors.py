"""Exception hierarchy shared across the pipeline.

ValidationError maps to CLI exit code 1 and HTTP 4xx responses;
UsageError maps to CLI exit code 2 (caller passed something nonsensical).
"""


class ForesightError(Exception):
    pass


class ValidationError(ForesightError):
    pass


class UsageError(ForesightError):
    pass


class ParseError(ValidationError):
    """Raised when an export file cannot be parsed. Carries the offending line when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line


class MissingArtifactError(ValidationError):
    """A pipeline stage was invoked before its input artifact exists."""

    def __init__(self, artifact, command):
        super().__init__(
            f"missing artifact {artifact!r}; run `foresight {command}` first"
        )
        self.artifact = artifact
        self.command = command
