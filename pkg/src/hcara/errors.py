"""Exception hierarchy shared by all hcara modules."""


class HcaraError(Exception):
    """Base class for errors raised by this package."""


class InputError(HcaraError):
    """Malformed or inconsistent input data (bad dimensions, parse failures,
    violated construction invariants)."""


class PreconditionError(HcaraError):
    """A documented operation precondition does not hold for the given data."""


class NotMaximalWitnessError(PreconditionError):
    """A cone witness construction failed its covering check: the supplied
    index set does not realize the cone number."""


class SamplingError(HcaraError):
    """Rejection sampling exhausted its retry budget."""


class InternalConsistencyError(HcaraError):
    """An internal verification that should be impossible to fail has failed.
    Indicates a bug, never bad input."""
