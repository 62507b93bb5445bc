"""Exact invariants for Seifert-fibered surgeries on Montesinos knots.

Modules:

- ``exact``: extended slopes, continued fractions, Mobius maps, Smith normal form
- ``tangle``: rational tangles and framed untangle-surgery sites
- ``montesinos``: Montesinos links, determinants, double branched covers
- ``seifert``: Seifert invariants, normalization, homology, types
- ``surgery``: surgery on framed links and torus knots
- ``knotinv``: genus-one Seifert matrices and Alexander polynomials of pretzels
- ``heegaard``: free-group words and Whitehead primitivity
- ``verify``: claim registry, family sweeps and JSON reports
"""
from . import exact, heegaard, knotinv, montesinos, seifert, surgery, tangle, verify
from .errors import (
    ClaimError,
    DegenerateError,
    NotATypeError,
    NotationError,
    SearchFailure,
    TopologyError,
)

__version__ = "0.1.0"

__all__ = [
    "exact", "tangle", "montesinos", "seifert", "surgery", "knotinv", "heegaard", "verify",
    "TopologyError", "DegenerateError", "NotATypeError", "NotationError", "SearchFailure", "ClaimError",
    "__version__",
]
