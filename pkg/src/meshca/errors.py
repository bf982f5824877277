"""Exception hierarchy shared across the toolkit."""


class MeshCAError(Exception):
    """Base class for every error raised by meshca."""


class TopologyError(MeshCAError, ValueError):
    """Invalid WMN construction parameters or document."""


class ChannelBudgetError(TopologyError):
    """Channel count does not exceed the largest radio count."""


class SchemaError(TopologyError):
    """WMN document does not conform to the JSON schema."""


class DuplicateNodeIdError(TopologyError):
    pass


class ConnectivityError(TopologyError):
    """The range-induced graph is not connected."""


class DerivedEdgeMismatchError(TopologyError):
    """A document lists edges that disagree with positions and range."""


class IncompleteAssignmentError(MeshCAError, ValueError):
    """A channel assignment does not cover every radio."""


class PreconditionError(MeshCAError, ValueError):
    """An algorithm was invoked outside its stated preconditions."""


class BudgetExceededError(PreconditionError):
    """Exhaustive search space is larger than the allowed budget."""


class ReportError(MeshCAError, ValueError):
    """A stored channel-assignment document fails re-validation."""
