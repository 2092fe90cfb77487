"""Ratings of decision alternatives from pairwise comparison matrices.

The heavy lifting lives in the native extension; this package re-exports it.
"""

from pcmrank._core import *  # noqa: F401,F403
from pcmrank._core import __version__  # noqa: F401
