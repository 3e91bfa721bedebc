"""Exact Bruhat-Chevalley combinatorics of the rook monoid.

Submodules: ``weyl`` (the symmetric group), ``renner`` (the rook monoid
itself), ``order`` (Bruhat-Chevalley order and intervals), ``rpoly``
(R-polynomials and the Mobius function), ``hecke`` (the orbit Hecke
algebra and its bar involution), ``analysis`` (descents, interval
shapes, conjecture checks), ``verify`` (whole-rank sweeps) and ``cli``.
"""

from . import analysis, hecke, order, polynomials, renner, reports, rpoly, verify, weyl

__version__ = "0.1.0"

__all__ = ["analysis", "hecke", "order", "polynomials", "renner", "reports",
           "rpoly", "verify", "weyl", "__version__"]
