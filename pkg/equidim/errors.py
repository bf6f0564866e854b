"""Exception hierarchy shared by the solver modules"""


class EquidimError(Exception):
    pass


class GraphError(EquidimError, ValueError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class GraphFormatError(GraphError):
    pass


class VertexSetError(GraphError):
    pass


class FamilySpecError(EquidimError, ValueError):
    pass


class NoClosedFormError(FamilySpecError):
    """No closed form or construction is known for these parameters"""


class LimitExceededError(EquidimError):
    pass


class VerificationError(EquidimError):
    """Inputs of a construction do not pass their own certificate"""
