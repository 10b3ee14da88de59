"""Exception hierarchy shared across the package."""


class SchwarzlabError(Exception):
    """Base class for every error raised by this package."""


class OutsideDisk(SchwarzlabError):
    """A point was evaluated at or beyond the unit circle."""

    def __init__(self, z):
        self.z = z
        super().__init__(f"point {z!r} lies outside the open unit disk (|z| = {abs(z):.6g})")
