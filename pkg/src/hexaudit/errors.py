class InternalConsistencyError(RuntimeError):
    """A structural fact that should be forced by the mathematics failed.

    Raised instead of returning bad data, e.g. when a quadric section does
    not fall into one of the known cases, or when the constructed hexagon
    line set has the wrong cardinality (which would indicate a broken sign
    or canonicalization convention).
    """
