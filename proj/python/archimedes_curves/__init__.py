"""Tangent-parallel chord calculus for strictly convex plane curves."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as __doc__  # noqa: F401
except ImportError:
    # in-tree CMake builds place _core next to the interpreter path instead
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
