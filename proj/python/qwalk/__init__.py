"""Continuous-time quantum and classical walks on star-plus-bonds graphs.

Thin Python layer over the C++ core in ``qwalk._qwalk``. Everything the
extension exports is re-exported here.
"""

from qwalk._qwalk import *  # noqa: F401,F403
from qwalk._qwalk import __doc__  # noqa: F401

__version__ = "0.1.0"
