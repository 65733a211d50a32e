"""Size guards for operations that enumerate exponentially many objects
or run vertex/facet conversion, both of which blow up without warning.

Every guarded operation takes the bound as a keyword argument so callers
(including the command line driver) can raise it deliberately.
"""

DEFAULT_BRUTEFORCE_BOUND = 20
DEFAULT_HULL_MAX_DIM = 15
DEFAULT_HULL_MAX_POINTS = 64


class ScaleGuardError(ValueError):
    """An operation was asked to run past its configured size guard.

    guard names which limit tripped: "bruteforce", "hull-dim" or
    "hull-points".  The driver uses it to point at the override flag.
    """

    def __init__(self, guard: str, limit: int, requested: int, message: str):
        super().__init__(message)
        self.guard = guard
        self.limit = limit
        self.requested = requested


def check_bruteforce(n: int, bound: int, what: str) -> None:
    """Reject part counts whose 2**n enumeration would be hopeless."""
    if n > bound:
        raise ScaleGuardError(
            "bruteforce", bound, n,
            "%s: %d parts is too large for brute force (bound %d)"
            % (what, n, bound))
