"""LEO constellation design engine.

Time-varying +Grid topology construction, hop-bounded disjoint-path
feasibility checking and the minimum-satellite shrink/expand search,
backed by the C++ core.
"""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # build-tree layout: the extension sits on sys.path
    from _core import *  # noqa: F401,F403
