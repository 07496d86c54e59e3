"""Exception types shared by all modules; the CLI maps them to exit codes."""


class InvalidInput(ValueError):
    """Malformed or out-of-domain input (CLI exit code 2)."""


class UnsupportedCase(Exception):
    """A hypothesis of the underlying theory is violated (CLI exit code 3).

    The message names the violated condition.
    """


class ResourceCapExceeded(Exception):
    """A configured search or bound cap was hit (CLI exit code 4)."""
