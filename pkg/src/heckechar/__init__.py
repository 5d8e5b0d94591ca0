"""
Exact evaluation of induced sign characters of the type-A Hecke algebra at
products (1 + T_{s_{i_1}}) ... (1 + T_{s_{i_m}}), with independent
cross-checks for every intermediate object.
"""

from .exactalg import LaurentPoly, Q1Poly, q1_substitute
from .permcore import Perm, PreconditionError, perm_from_word
from .heckealg import HeckeElement, product_one_plus_T
from .wiring import WiringDiagram, family_from_mask, sigma_dp
from .chareval import epsilon_eval, enumerate_tableaux

__all__ = [
    "LaurentPoly", "Q1Poly", "q1_substitute",
    "Perm", "PreconditionError", "perm_from_word",
    "HeckeElement", "product_one_plus_T",
    "WiringDiagram", "family_from_mask", "sigma_dp",
    "epsilon_eval", "enumerate_tableaux",
]

__version__ = "0.1.0"
