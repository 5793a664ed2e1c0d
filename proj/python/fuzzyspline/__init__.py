"""Perfectly normal type-2 fuzzy data points and their interpolating B-spline curves."""

from ._fuzzyspline import *  # noqa: F401,F403
from ._fuzzyspline import __version__  # noqa: F401
