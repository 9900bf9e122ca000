"""Exception hierarchy for geometric preconditions and schema failures."""


class MoebiusError(Exception):
    """Base class for all geometric precondition failures."""


class ZeroMatrix(MoebiusError):
    pass


class NonElliptic(MoebiusError):
    pass


class ZeroRadius(MoebiusError):
    pass


class CoincidentPoints(MoebiusError):
    pass


class SingularMap(MoebiusError):
    pass


class SameCycle(MoebiusError):
    pass


class PointNotOnCycle(MoebiusError):
    pass


class NotDisjoint(MoebiusError):
    pass


class NotInPencil(MoebiusError):
    pass


class Infeasible(MoebiusError):
    pass


class CoincidentVertices(MoebiusError):
    pass


class SidesDontMeet(MoebiusError):
    pass


class NotProper(MoebiusError):
    pass


class CollinearCycles(MoebiusError):
    pass


class OutsidePlane(MoebiusError):
    pass


class ProportionalArguments(MoebiusError):
    pass


class DegenerateCevian(MoebiusError):
    pass


class ZeroCoordinate(MoebiusError):
    pass


class NotHyperbolicTriangle(MoebiusError):
    pass


class DegenerateFrame(MoebiusError):
    pass


class UndefinedOnFrameAxes(MoebiusError):
    pass


class NotUpperHalfPlane(MoebiusError):
    pass


class NotVirtualReal(MoebiusError):
    pass


class NotModelPencil(MoebiusError):
    pass


class NotHyperbolicLines(MoebiusError):
    pass


class SchemaError(Exception):
    """Scene or query document violates the documented schema."""


class EmptyViewport(MoebiusError):
    pass
