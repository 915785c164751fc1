"""Exact quadratic-residue, Gaussian-integer and sums-of-squares arithmetic."""

from ._quadres import *  # noqa: F401,F403
from ._quadres import Gaussian, MathError

__version__ = "0.1.0"
