class InternalConsistencyError(RuntimeError):
    """A mathematically guaranteed identity failed to hold.

    Raising this always indicates a bug in this library, never bad input:
    the checks guarded by it are theorems about the computed objects.
    """


class Graph6Error(ValueError):
    """Malformed graph6 input."""
