class InternalInvariantError(RuntimeError):
    """A solver invariant was violated; the produced state cannot be trusted."""
