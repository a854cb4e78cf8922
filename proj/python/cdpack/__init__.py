"""Fractional connected-domatic packings in node-capacitated graphs.

Thin wrapper around the compiled extension; all rationals cross the boundary
as fractions.Fraction, vertex sets as sorted lists of ints.
"""

from ._cdpack import *  # noqa: F401,F403
from ._cdpack import __doc__  # noqa: F401
