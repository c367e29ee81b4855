"""C_lambda-extended oscillator algebra toolkit (Python bindings)."""

from ._clext import *  # noqa: F401,F403
from ._clext import ClextError  # noqa: F401

__version__ = "0.1.0"
