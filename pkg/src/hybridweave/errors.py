"""Exception types shared across the toolkit."""


class HybridweaveError(Exception):
    """Base class for all toolkit errors."""


class AliasConflict(HybridweaveError):
    """One alias is mapped to two different canonical identities."""


class EmptySelection(HybridweaveError):
    """A message filter matched no messages."""


class UnknownPerson(HybridweaveError):
    """The requested id is not a person actant of the corpus."""


class InsufficientOverlap(HybridweaveError):
    """Fewer than three persons are active in both information spaces."""


class InsufficientVariance(HybridweaveError):
    """Correlation is undefined because one of the inputs is constant."""


class IllegalTransition(HybridweaveError):
    """Document status change not allowed by the workflow."""


class NonMonotoneTime(HybridweaveError):
    """Status event predates the last recorded event."""


class DegenerateTable(HybridweaveError):
    """Contingency table is too small or too empty for association measures."""


class MissingRole(HybridweaveError):
    """A person in a role split has no administrator/developer role."""


class NoPairs(HybridweaveError):
    """No quote/comment annotation pairs are available."""


class PipelineError(HybridweaveError):
    """A pipeline stage failed; the message names the failing stage."""
