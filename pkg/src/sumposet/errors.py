"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input (bad schema, mixed fields, duplicates)."""


class RefusalError(RuntimeError):
    """Well-formed input for which the requested computation is unsupported."""
