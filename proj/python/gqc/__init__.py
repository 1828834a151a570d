"""Directional Gaussian correlations of two-mode states.

Thin re-export of the compiled core.  Variances are vacuum normalized
(vacuum has n = m = 1); see the README for conventions.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
