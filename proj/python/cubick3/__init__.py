"""Exact lattice computations for cubic fourfolds and K3 surfaces."""

from ._cubick3 import *  # noqa: F401,F403
from ._cubick3 import LatticeError  # noqa: F401
