"""Exact and numerical widths of regular simplices."""

from ._core import *  # noqa: F401,F403
from ._core import SimplexWidthError, __doc__  # noqa: F401

__version__ = "0.1.0"
