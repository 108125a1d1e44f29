# =============================================================================
# classes/exceptions.py
# Error hierarchy; each branch maps to one CLI exit code
# =============================================================================


class NefMirrorError(Exception):
    """Base class for every error raised by the toolkit"""
    exit_code = 3


class InputError(NefMirrorError):
    """Malformed input file, schema violation or bad setting"""
    exit_code = 1


class DomainError(NefMirrorError):
    """A named mathematical hypothesis does not hold for the input"""
    exit_code = 2


class NotReflexive(DomainError):
    def __init__(self, message: str = "polytope is not reflexive"):
        super().__init__(message)


class NotNef(DomainError):
    def __init__(self, part: int, vertex: int, value: int, vertex_coords=None):
        self.part = part
        self.vertex = vertex
        self.value = value
        self.vertex_coords = vertex_coords
        super().__init__(
            f"phi_{part + 1}(e_{vertex + 1}) = {value} is not in {{0, 1}}"
            + (f" (e_{vertex + 1} = {list(vertex_coords)})" if vertex_coords is not None else "")
        )


class EmptyPart(DomainError):
    def __init__(self, part: int):
        self.part = part
        super().__init__(f"phi_{part + 1} vanishes on every vertex of the dual: part {part + 1} is a point")


class PreconditionFailed(DomainError):
    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"precondition '{hypothesis}' failed" + (f": {detail}" if detail else ""))


class NotInteriorError(DomainError, ValueError):
    """The origin is not strictly inside the polytope"""


class FaceError(DomainError, ValueError):
    """A face query was made outside its domain"""


class InvariantViolation(NefMirrorError):
    """An identity that must hold for valid input did not"""
    exit_code = 3
