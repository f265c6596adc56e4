"""Domain exceptions with stable machine-readable codes.

The ``code`` attribute is what the CLI prints and the HTTP service returns
in error bodies; messages are free text.
"""


class QmutError(Exception):
    code = "Error"


class InvalidVertexIdError(QmutError):
    code = "InvalidVertexId"


class DuplicateVertexError(QmutError):
    code = "DuplicateVertex"


class UnknownVertexError(QmutError):
    code = "UnknownVertex"


class SelfLoopError(QmutError):
    code = "SelfLoop"


class TwoCycleInInputError(QmutError):
    code = "TwoCycleInInput"


class NonpositiveWeightError(QmutError):
    code = "NonpositiveWeight"


class FrozenVertexMutationError(QmutError):
    code = "FrozenVertexMutation"


class SameVertexError(QmutError):
    code = "SameVertex"


class EmptySubsetError(QmutError):
    code = "EmptySubset"


class InvalidInstanceError(QmutError):
    code = "InvalidInstance"


class InvalidSubsetError(QmutError):
    code = "InvalidSubset"


class OutOfValidityWindowError(QmutError):
    code = "OutOfValidityWindow"


class MutableAdjacencyError(QmutError):
    code = "MutableAdjacency"


class NonCommutingFamilyError(QmutError):
    code = "NonCommutingFamily"


class WrongMutableCountError(QmutError):
    code = "WrongMutableCount"


class ValidityWindowViolatedError(QmutError):
    code = "ValidityWindowViolated"


class DegenerateVertexError(QmutError):
    code = "DegenerateVertex"


class InsufficientStepsError(QmutError):
    code = "InsufficientSteps"


class InconclusiveError(QmutError):
    code = "Inconclusive"


class TruncatedError(QmutError):
    code = "Truncated"


class InvalidWeightsError(QmutError):
    code = "InvalidWeights"


class ParseError(QmutError):
    code = "ParseError"


class PortInUseError(QmutError):
    code = "PortInUse"


class LimitExceededError(QmutError):
    code = "LimitExceeded"
