"""Exception hierarchy. Every error carries a short machine-readable ``reason``."""


class GnKnotError(Exception):
    reason = "error"


class DiagramError(GnKnotError):
    reason = "diagram"


class MalformedToken(DiagramError):
    reason = "malformed_token"


class ArcMultiplicity(DiagramError):
    reason = "arc_multiplicity"


class DisconnectedArcChain(DiagramError):
    reason = "disconnected_arc_chain"


class StrandOutOfRange(DiagramError):
    reason = "strand_out_of_range"


class MultiComponentOperand(DiagramError):
    reason = "multi_component_operand"


class EmptyDiagram(DiagramError):
    reason = "empty_diagram"


class GroupError(GnKnotError):
    reason = "group"


class NotAPermutation(GroupError):
    reason = "not_a_permutation"


class OrderCapExceeded(GroupError):
    reason = "order_cap_exceeded"


class UnknownGroupToken(GroupError):
    reason = "unknown_group_token"


class NotAGroup(GroupError):
    reason = "not_a_group"


class GroupFileError(GroupError):
    reason = "group_file"


class CensusError(GnKnotError):
    reason = "census"


class CensusTimeout(CensusError):
    reason = "timeout"


class SearchSpaceTooLarge(CensusError):
    reason = "search_space_too_large"


class UnknownKnot(GnKnotError):
    reason = "unknown_knot"
