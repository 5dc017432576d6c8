"""Vertex-cover placement toolkit.

Random graph generators, vertex-cover solvers, a network-aware placement
cost model, max-min fair bandwidth sharing, an actor-critic placement
policy, and a benchmark harness. Everything heavy lives in the compiled
extension; this package just re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = __doc__ or _core_doc
