"""Exceptions raised by fermatjac_lib."""

class FermatJacError(Exception):
    """Base class for library errors."""
    pass

class HypothesisError(FermatJacError):
    """A hypothesis of the theorem being applied is not satisfied.

    Attributes:
     - hypotheses (dict): The hypotheses record at the time of failure.
    """
    def __init__(self, msg, hypotheses=None):
        super(HypothesisError, self).__init__(msg)
        self.hypotheses = hypotheses or {}

class ConsistencyError(FermatJacError):
    """Two independent computations disagree."""
    def __init__(self, msg, details=None):
        super(ConsistencyError, self).__init__(msg)
        self.details = details or {}

class LocalPrecisionError(ConsistencyError):
    """Truncated local arithmetic ran out of precision."""
    pass
