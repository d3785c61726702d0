"""Exception types shared across the package."""


class InfeasibleError(Exception):
    """The instance admits no solution of the requested kind."""


class SizeCapError(Exception):
    """Instance exceeds the size cap of a brute-force check."""
