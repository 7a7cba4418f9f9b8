"""Exception types shared across the package."""


class PartitionError(ValueError):
    """Invalid partition data."""


class NonMonotoneRows(PartitionError):
    """Row lengths increase somewhere in the sequence."""


class NegativeRowLength(PartitionError):
    """A row length is negative."""


class PartitionParseError(PartitionError):
    """Partition text that cannot be parsed."""


class BoxOutsideDiagram(ValueError):
    """A queried box is not a cell of the diagram."""


class NotAddable(ValueError):
    """The box cannot be appended while keeping a valid diagram."""


class NotRemovable(ValueError):
    """The box is not a removable corner of the diagram."""


class EmptyDiagramError(ValueError):
    """The operation is undefined for the empty diagram."""


class SizeBoundExceeded(ValueError):
    """The diagram is larger than the configured bound for this routine."""


class NonDivisibleHookProduct(RuntimeError):
    """Internal failure: n! was not divisible by the hook product."""


class InvalidK(ValueError):
    """Shake step count out of range."""


class InvalidM(ValueError):
    """Candidate pool or branch count out of range."""


class InvalidPath(ValueError):
    """A growth path contains a step that is not a valid box addition."""


class NoCoreChild(RuntimeError):
    """No addable box keeps the diagram inside the core subgraph."""


class AsymmetricBoxesNotIsolated(ValueError):
    """Some row or column carries more than one asymmetric box."""


class InvalidResultShape(RuntimeError):
    """Internal failure: a transform produced a non-diagram box set."""


class BalanceNotApplicable(ValueError):
    """The chosen line has no column excess to move."""


class ShapeBlocked(RuntimeError):
    """A transform step would pass through an invalid intermediate shape."""

    def __init__(self, message, diagram=None):
        super().__init__(message)
        self.diagram = diagram


class DegenerateOverlap(ValueError):
    """The two added boxes are mirror images, so the pair is degenerate."""


class EmptySearchSpace(RuntimeError):
    """The search frontier emptied before reaching the target level."""


class CoreMembershipError(ValueError):
    """Neither the diagram nor its conjugate lies in the core subgraph."""


class NotAGrowthSequence(ValueError):
    """Sequence elements are not consecutive sizes starting at 1."""


class RecordSchemaError(ValueError):
    """A record line failed schema validation."""

    def __init__(self, message, line_number=None):
        super().__init__(message)
        self.line_number = line_number


class KeyMismatch(ValueError):
    """Two record sets do not cover the same sizes."""
