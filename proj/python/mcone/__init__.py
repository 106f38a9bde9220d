"""Exact measure cones over the rationals."""

from ._core import *  # noqa: F401,F403
from ._core import InputError, PolyhedralCone, ConeDocument  # noqa: F401

__version__ = "0.1.0"
