"""Multi-homogeneous Bezout numbers, partition search and hardness gadgets."""

from mhbez._core import *  # noqa: F401,F403
from mhbez._core import (  # noqa: F401
    DimensionMismatch,
    ParseError,
    SearchGuardError,
    SizeGuardError,
)

__version__ = "0.1.0"
