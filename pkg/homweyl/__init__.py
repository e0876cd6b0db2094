"""
Exact arithmetic for the first Weyl algebra and its hom-associative deformations
"""

from .algebra import (
    AlgebraCtx,
    WeylPoly,
    Scalar,
    X,
    Y,
    ONE,
    ZERO,
    alpha,
    alpha_inv,
    assoc_mul,
    star_mul,
    star_commutator,
    star_associator,
)

__all__ = [
    'AlgebraCtx',
    'WeylPoly',
    'Scalar',
    'X',
    'Y',
    'ONE',
    'ZERO',
    'alpha',
    'alpha_inv',
    'assoc_mul',
    'star_mul',
    'star_commutator',
    'star_associator',
]
