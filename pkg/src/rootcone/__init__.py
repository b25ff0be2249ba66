"""Weyl-group length invariants of root systems and the subgroup criteria they feed.

The central quantity is ell^-_h(lam), the least Coxeter length of a Weyl group
element w with (w lam, h) < 0. Minimising over dominant h and fundamental lam
gives ell_Delta; restricting h to self-dual weights gives ell^sd_Delta.
"""

__version__ = "0.1.0"

from .ell import ell_delta, ell_h, ell_minus, ell_sd_delta, ell_table, verify_witness
from .rootsystem import RootSystem, SimpleType, build

__all__ = [
    "RootSystem",
    "SimpleType",
    "build",
    "ell_delta",
    "ell_h",
    "ell_minus",
    "ell_sd_delta",
    "ell_table",
    "verify_witness",
]
