"""hexaudit: split Cayley hexagon construction and intersection-number audits."""

__version__ = "0.1.0"

from .errors import InternalConsistencyError

__all__ = ["InternalConsistencyError", "__version__"]
