"""Exceptions raised by winfir."""


class WinfirError(ValueError):
    """Base class for every error raised by this package."""


class InvalidSpec(WinfirError):
    """A window specification is missing a parameter or has one out of range."""


class GridTooCoarse(WinfirError):
    """The FFT grid is too small (or not a power of two) for the sequence length."""


class NoSidelobe(WinfirError):
    """The sampled spectrum has no local minimum after its main lobe."""


class InvalidCutoff(WinfirError):
    """A low-pass cutoff lies outside the open interval (0, pi)."""


class NoStopband(WinfirError):
    """The filter response has no local minimum beyond the cutoff."""
