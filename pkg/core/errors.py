"""
Engine Exceptions

One hierarchy for every failure the engine can report. All exceptions carry a
plain message so they survive the trip back from worker processes.
"""


class ContactInvariantsError(Exception):
    """Base class for all engine errors."""


class GraphStructureError(ContactInvariantsError):
    """A weighted colored tree violates its structural invariants."""


class SpecializationDegenerate(ContactInvariantsError):
    """A torus specialization hits a zero denominator."""


class RetryExhausted(ContactInvariantsError):
    """Too many degenerate specializations in a row."""


class DisagreementError(ContactInvariantsError):
    """Two nondegenerate specializations produced different sums."""


class CacheInvalid(ContactInvariantsError):
    """A cached graph file is corrupt, tampered or from another version."""


class DomainError(ContactInvariantsError):
    """Invalid parameters for a curve family or curve input."""


class DegenerateParametrization(ContactInvariantsError):
    """All coordinates of a parametrization vanish at the requested point."""


class InfiniteMultiplicity(ContactInvariantsError):
    """Root multiplicity requested for the zero polynomial."""


class RecipeError(ContactInvariantsError):
    """An incidence recipe cannot be evaluated."""


class Unsupported(ContactInvariantsError):
    """The request lies outside what the engine covers."""
