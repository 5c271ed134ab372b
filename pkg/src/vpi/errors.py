"""Exception types shared across the package."""


class VpiError(Exception):
    """Base class for all package errors."""


class UnknownObject(VpiError):
    """A move or lookup referenced an object id that is not in the scene."""


class InvalidResult(VpiError):
    """Applying a move produced a scene that fails validation."""


class UnknownPreference(VpiError):
    """Text could not be mapped to any preference in the closed set."""


class GenerationFailure(VpiError):
    """Scene or goal sampling exhausted its rejection budget."""


class PlanningFailure(VpiError):
    """No separation-respecting move order was found for a goal."""


class NoMove(VpiError):
    """No object moved between a scene pair."""


class MultipleMoves(VpiError):
    """More than one object moved between a scene pair."""


class CoincidentPositions(VpiError):
    """Two positions coincide; their relation is undefined."""


class MalformedResponse(VpiError):
    """A backend response is missing required structure."""


class UnknownRelation(VpiError):
    """The geometric field of a response maps to no known relation."""


class BackendFailure(VpiError):
    """A backend call failed at the transport level after retries."""


class UnrecognizedRequest(VpiError):
    """The oracle backend received a request it cannot answer."""


class LengthMismatch(VpiError):
    """Prediction and ground-truth sequences differ in length."""


class EmptyInput(VpiError):
    """A metric was asked to aggregate zero items."""


class EmptyScene(VpiError):
    """No extracted object names resolved against the catalog."""
