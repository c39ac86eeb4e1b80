"""Graph-aware clustering comparison indices (vi, rwi, vin)."""

from cluscomp._core import *  # noqa: F401,F403
from cluscomp._core import __version__  # noqa: F401
