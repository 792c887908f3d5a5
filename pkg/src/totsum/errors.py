"""Exception types shared across the package."""


class CapacityError(ValueError):
    """A requested computation exceeds a configured resource ceiling.

    Raised for sieve limits outside [1, memory_ceiling] and for summatory
    arguments beyond the desk-scale ceiling.  Subclasses ValueError so
    callers that only distinguish "bad request" still work.
    """
