"""
Truncated formal power series in t with coefficients in A_1, realising A_1^k
as a one-parameter formal hom-associative deformation of A_1 (k becomes the
indeterminate t):

    alpha_t = exp(t d/dy) = sum_i (1/i!) d^i/dy^i t^i
    p *_t q = alpha_t(p . q)
    [p, q]_t = p *_t q - q *_t p

All arithmetic is exact modulo t^(N+1).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .algebra import (
    ZERO,
    Scalar,
    WeylPoly,
    add,
    assoc_mul,
    d_dy,
    scale,
    sub,
)
from .config import DEFORMATION_ORDER
from .expr import format_poly
from .verdict import Verdict, Witness


@dataclass(frozen=True)
class TruncatedSeries:
    """coeffs[i] is the coefficient of t^i; there are order + 1 of them"""

    order: int
    coeffs: Tuple[WeylPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be a natural number, got {self.order}")
        coeffs = tuple(self.coeffs)
        if len(coeffs) > self.order + 1:
            raise ValueError(f"{len(coeffs)} coefficients do not fit order {self.order}")
        coeffs = coeffs + (ZERO,) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, 'coeffs', coeffs)

    def __getitem__(self, n: int) -> WeylPoly:
        return self.coeffs[n]

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        _same_order(self, other)
        return TruncatedSeries(self.order, tuple(add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        _same_order(self, other)
        return TruncatedSeries(self.order, tuple(sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def nonzero_degrees(self) -> List[int]:
        return [n for n, c in enumerate(self.coeffs) if c]


def _same_order(*series: TruncatedSeries) -> None:
    orders = {s.order for s in series}
    if len(orders) > 1:
        raise ValueError(f"series orders differ: {sorted(orders)}")


def constant_series(p: WeylPoly, order: int = DEFORMATION_ORDER) -> TruncatedSeries:
    return TruncatedSeries(order, (p,))


def evaluate_at(series: TruncatedSeries, k0: Scalar) -> WeylPoly:
    """Substitute t = k0; exact when the true series has no terms beyond the order"""
    result = ZERO
    k0 = Fraction(k0)
    for n, c in enumerate(series.coeffs):
        if c:
            result = add(result, scale(k0 ** n, c))
    return result


def _twist_coefficients(order: int) -> List[Fraction]:
    return [Fraction(1, math.factorial(i)) for i in range(order + 1)]


def alpha_t(p: TruncatedSeries) -> TruncatedSeries:
    """Coefficient of t^n is sum_{i+j=n} (1/i!) d^i/dy^i p_j"""
    weights = _twist_coefficients(p.order)
    out = [ZERO] * (p.order + 1)
    for j, pj in enumerate(p.coeffs):
        derivative = pj
        for i in range(p.order + 1 - j):
            if not derivative:
                break
            out[i + j] = add(out[i + j], scale(weights[i], derivative))
            derivative = d_dy(derivative)
    return TruncatedSeries(p.order, tuple(out))


def assoc_mul_t(p: TruncatedSeries, q: TruncatedSeries) -> TruncatedSeries:
    """The undeformed product extended homogeneously in t"""
    _same_order(p, q)
    out = [ZERO] * (p.order + 1)
    for j, pj in enumerate(p.coeffs):
        if not pj:
            continue
        for l in range(p.order + 1 - j):
            ql = q.coeffs[l]
            if ql:
                out[j + l] = add(out[j + l], assoc_mul(pj, ql))
    return TruncatedSeries(p.order, tuple(out))


def star_t(p: TruncatedSeries, q: TruncatedSeries) -> TruncatedSeries:
    """The deformed product alpha_t o (undeformed product)"""
    return alpha_t(assoc_mul_t(p, q))


def bracket_t(p: TruncatedSeries, q: TruncatedSeries) -> TruncatedSeries:
    return star_t(p, q) - star_t(q, p)


Product = Callable[[TruncatedSeries, TruncatedSeries], TruncatedSeries]


def hom_assoc_defect_t(a: TruncatedSeries, b: TruncatedSeries, c: TruncatedSeries,
                       product: Product = star_t) -> TruncatedSeries:
    """alpha_t(a) (b c) - (a b) alpha_t(c) for the given product"""
    _same_order(a, b, c)
    left = product(alpha_t(a), product(b, c))
    right = product(product(a, b), alpha_t(c))
    return left - right


def hom_jacobi_defect_t(a: TruncatedSeries, b: TruncatedSeries, c: TruncatedSeries,
                        bracket: Product = bracket_t) -> TruncatedSeries:
    """[alpha_t(a), [b, c]] + [alpha_t(b), [c, a]] + [alpha_t(c), [a, b]]"""
    _same_order(a, b, c)
    total = bracket(alpha_t(a), bracket(b, c))
    total = total + bracket(alpha_t(b), bracket(c, a))
    return total + bracket(alpha_t(c), bracket(a, b))


def _verdict_from_defect(name: str, defect: TruncatedSeries,
                         inputs: Sequence[TruncatedSeries]) -> Verdict:
    failing = defect.nonzero_degrees()
    if not failing:
        return Verdict.ok(name, [f"all coefficients through t^{defect.order} vanish"])
    first = failing[0]
    witness = Witness(
        inputs={label: _series_text(s) for label, s in zip('abc', inputs)},
        expected="0",
        actual=format_poly(defect[first]),
    )
    return Verdict.fail(name, witness, clause=f"t^{first}",
                        notes=[f"failing t-degrees: {', '.join(map(str, failing))}"])


def _series_text(s: TruncatedSeries) -> str:
    parts = [f"({format_poly(c)}) t^{n}" for n, c in enumerate(s.coeffs) if c]
    return " + ".join(parts) if parts else "0"


def check_hom_assoc_t(a: TruncatedSeries, b: TruncatedSeries, c: TruncatedSeries,
                      product: Optional[Product] = None) -> Verdict:
    defect = hom_assoc_defect_t(a, b, c, product or star_t)
    return _verdict_from_defect('check_hom_assoc_t', defect, (a, b, c))


def check_hom_jacobi_t(a: TruncatedSeries, b: TruncatedSeries, c: TruncatedSeries,
                       bracket: Optional[Product] = None) -> Verdict:
    defect = hom_jacobi_defect_t(a, b, c, bracket or bracket_t)
    return _verdict_from_defect('check_hom_jacobi_t', defect, (a, b, c))
