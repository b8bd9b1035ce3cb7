"""Quaternionic Tate Gamma functions, the conductor operator and the truncated trace."""

from ._qtate import *  # noqa: F401,F403
from ._qtate import IsotypicFunction, NumericalError

__version__ = "0.1.0"
