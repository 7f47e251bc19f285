"""Hodge-graded dimensions of hypersurface complements via generalized Jacobian rings.

The package computes ``(M/JM)^k`` for sections of line bundles on projective
spaces, Grassmannians and tori, the variable cohomology of split complete
intersections, Borel-Weil-Bott cohomology on ``G/B`` and ``G/P``, and the
vanishing conditions under which the Jacobian description holds.
"""
from importlib.metadata import PackageNotFoundError, version as _version

try:
    __version__ = _version("artifact")
except PackageNotFoundError:  # running from a source tree
    __version__ = "0.1.0"

from .linalg import BACKEND  # noqa: E402

__all__ = ["BACKEND", "__version__"]
