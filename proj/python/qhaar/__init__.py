"""Exact Haar states of monomials on the quantized coordinate ring of SL_q(3)."""

try:
    from ._qhaar import *  # noqa: F401,F403  (wheel layout)
    from ._qhaar import __doc__  # noqa: F401
except ImportError:  # build-tree layout: extension on sys.path directly
    from _qhaar import *  # noqa: F401,F403

__version__ = "1.0.0"
