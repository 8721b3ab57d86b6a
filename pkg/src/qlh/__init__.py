"""Exact arithmetic for q-Laguerre-Hahn moment functionals."""

from .equation import Triplet, compute_class, pearson_solve, residual, satisfies
from .forms import MomentForm, RecurrencePair, moments_from_recurrence, recurrence_from_moments
from .poly import Poly, X
from .riccati import RiccatiData, cd_from_triplet, riccati_class, riccati_residual
from .scalar import QParam, qbracket, qpochhammer

__all__ = [
    "MomentForm",
    "Poly",
    "QParam",
    "RecurrencePair",
    "RiccatiData",
    "Triplet",
    "X",
    "cd_from_triplet",
    "compute_class",
    "moments_from_recurrence",
    "pearson_solve",
    "qbracket",
    "qpochhammer",
    "recurrence_from_moments",
    "residual",
    "riccati_class",
    "riccati_residual",
    "satisfies",
]
