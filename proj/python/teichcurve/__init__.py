"""Numerical toolkit for the Bers isomorphism on the universal Teichmuller curve."""

from ._teichcurve import *  # noqa: F401,F403
from ._teichcurve import __doc__  # noqa: F401
