"""Exact counting of northeast lattice paths restricted by a given path."""

from ._core import *  # noqa: F401,F403
from ._core import CapacityError, PathParseError  # noqa: F401

__version__ = "0.1.0"
