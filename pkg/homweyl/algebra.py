"""
Exact sparse arithmetic in the first Weyl algebra A_1 and in its
hom-associative deformations A_1^k.

Elements are finite sums of basis monomials y^i x^j with rational
coefficients. The associative product is the Ore rule of K[y][x; id, d/dy],
and the twisted product of A_1^k is that product followed by the twisting
map alpha_k, the shift y -> y + k:

    p * q = alpha_k(p . q)

Every value here is immutable and every operation is a pure function.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from typing_extensions import Self

# The field K is fixed to the rationals
Scalar = Fraction
Monomial = Tuple[int, int]  # (y-degree, x-degree)
Degree = Union[int, float]

NEG_INF = float('-inf')


def to_scalar(value: Union[int, str, Fraction]) -> Scalar:
    """Convert an int, a Fraction or an "a/b" string to a Scalar"""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, a Fraction or 'a/b'")
    return Fraction(value)


def _canonical_key(item: Tuple[Monomial, Scalar]) -> Tuple[int, int]:
    (i, j), _ = item
    return (-(i + j), -i)


class WeylPoly:
    """An element of A_1 on the basis {y^i x^j}"""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Dict[Monomial, Union[int, Fraction]]] = None):
        cleaned: Dict[Monomial, Scalar] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial y^{i} x^{j}")
            c = to_scalar(c)
            if c:
                cleaned[(int(i), int(j))] = c
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[Monomial, Union[int, Fraction]]]) -> Self:
        """Build a polynomial from (monomial, coefficient) pairs, collecting like terms"""
        acc: Dict[Monomial, Scalar] = {}
        for mono, c in pairs:
            acc[mono] = acc.get(mono, Fraction(0)) + to_scalar(c)
        return cls(acc)

    def terms(self) -> List[Tuple[Monomial, Scalar]]:
        """Terms in canonical order: descending total degree, then descending y-degree"""
        return sorted(self._terms.items(), key=_canonical_key)

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, i: int, j: int) -> Scalar:
        return self._terms.get((i, j), Fraction(0))

    def support(self) -> List[Monomial]:
        return [mono for mono, _ in self.terms()]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_scalar(self) -> bool:
        return all(mono == (0, 0) for mono in self._terms)

    def is_x_only(self) -> bool:
        """True when the polynomial lies in K[x]"""
        return all(i == 0 for i, _ in self._terms)

    def constant_term(self) -> Scalar:
        return self.coefficient(0, 0)

    def total_degree(self) -> Degree:
        if not self._terms:
            return NEG_INF
        return max(i + j for i, j in self._terms)

    def y_degree(self) -> Degree:
        if not self._terms:
            return NEG_INF
        return max(i for i, _ in self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = const(other)
        if not isinstance(other, WeylPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # a scalar hashes as its value, matching __eq__
            if self.is_scalar():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: 'WeylPoly') -> 'WeylPoly':
        return add(self, other)

    def __sub__(self, other: 'WeylPoly') -> 'WeylPoly':
        return sub(self, other)

    def __neg__(self) -> 'WeylPoly':
        return neg(self)

    def __repr__(self) -> str:
        body = ', '.join(f"y^{i} x^{j}: {c}" for (i, j), c in self.terms())
        return f"WeylPoly({{{body}}})"


@dataclass(frozen=True)
class AlgebraCtx:
    """The deformation parameter k selecting A_1^k; k = 0 is A_1 itself"""

    k: Scalar = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'k', to_scalar(self.k))

    @property
    def is_associative(self) -> bool:
        return self.k == 0


def monomial(i: int, j: int, c: Union[int, Fraction] = 1) -> WeylPoly:
    """The polynomial c y^i x^j"""
    return WeylPoly({(i, j): c})


def const(c: Union[int, Fraction]) -> WeylPoly:
    return WeylPoly({(0, 0): c})


ZERO = WeylPoly()
ONE = const(1)
X = monomial(0, 1)
Y = monomial(1, 0)


def x_poly(coeffs: Iterable[Union[int, Fraction]]) -> WeylPoly:
    """The polynomial c0 + c1 x + c2 x^2 + ... in K[x]"""
    return WeylPoly({(0, j): c for j, c in enumerate(coeffs)})


# Linear structure ------------------------------------------------------------

def add(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    acc = dict(p._terms)
    for mono, c in q._terms.items():
        acc[mono] = acc.get(mono, Fraction(0)) + c
    return WeylPoly(acc)


def neg(p: WeylPoly) -> WeylPoly:
    return WeylPoly({mono: -c for mono, c in p._terms.items()})


def sub(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    return add(p, neg(q))


def scale(c: Union[int, Fraction], p: WeylPoly) -> WeylPoly:
    c = to_scalar(c)
    return WeylPoly({mono: c * v for mono, v in p._terms.items()})


def total_degree(p: WeylPoly) -> Degree:
    """Total degree, with the zero polynomial at -infinity"""
    return p.total_degree()


def is_scalar(p: WeylPoly) -> bool:
    return p.is_scalar()


# Associative product -----------------------------------------------------------

@lru_cache(maxsize=4096)
def _x_power_past_y_power(m: int, c: int) -> Tuple[Tuple[int, int], ...]:
    """
    Normal form of x^m . y^c as pairs (s, coefficient) standing for
    coefficient * y^(c-s) x^(m-s).

    This is the Ore rule x^m r = sum_i C(m, i) delta^(m-i)(r) x^i with
    delta = d/dy, written with s = m - i.
    """
    return tuple(
        (s, math.comb(m, s) * math.perm(c, s))
        for s in range(min(m, c) + 1)
    )


def assoc_mul(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """The associative product of A_1, in normal form on the basis y^i x^j"""
    acc: Dict[Monomial, Scalar] = {}
    for (a, b), cp in p._terms.items():
        for (c, d), cq in q._terms.items():
            base = cp * cq
            for s, n in _x_power_past_y_power(b, c):
                mono = (a + c - s, b + d - s)
                acc[mono] = acc.get(mono, Fraction(0)) + base * n
    return WeylPoly(acc)


def assoc_power(p: WeylPoly, n: int) -> WeylPoly:
    """p . p . ... . p (n factors), with p^0 = 1"""
    if n < 0:
        raise ValueError(f"negative exponent {n}")
    result = ONE
    for _ in range(n):
        result = assoc_mul(result, p)
    return result


# Differentiation and the twisting map ------------------------------------------

def d_dy(p: WeylPoly) -> WeylPoly:
    return WeylPoly({(i - 1, j): i * c for (i, j), c in p._terms.items() if i > 0})


def d_dx(p: WeylPoly) -> WeylPoly:
    return WeylPoly({(i, j - 1): j * c for (i, j), c in p._terms.items() if j > 0})


def alpha(ctx: AlgebraCtx, p: WeylPoly) -> WeylPoly:
    """The twisting map alpha_k: substitute y -> y + k, fix x"""
    k = ctx.k
    if k == 0:
        return p
    acc: Dict[Monomial, Scalar] = {}
    for (i, j), c in p._terms.items():
        for l in range(i + 1):
            mono = (i - l, j)
            acc[mono] = acc.get(mono, Fraction(0)) + c * math.comb(i, l) * k ** l
    return WeylPoly(acc)


def alpha_inv(ctx: AlgebraCtx, p: WeylPoly) -> WeylPoly:
    return alpha(AlgebraCtx(-ctx.k), p)


def alpha_exp(ctx: AlgebraCtx, p: WeylPoly) -> WeylPoly:
    """
    The twisting map computed as the exponential series
    sum_l k^l / l! d^l p / dy^l, which terminates on polynomials.
    """
    result = ZERO
    term = p
    l = 0
    while term:
        result = add(result, scale(ctx.k ** l / math.factorial(l), term))
        term = d_dy(term)
        l += 1
    return result


# Star product and brackets ----------------------------------------------------------

def star_mul(ctx: AlgebraCtx, p: WeylPoly, q: WeylPoly) -> WeylPoly:
    """The product of A_1^k: p * q = alpha_k(p . q)"""
    return alpha(ctx, assoc_mul(p, q))


def commutator(p: WeylPoly, q: WeylPoly) -> WeylPoly:
    return sub(assoc_mul(p, q), assoc_mul(q, p))


def star_commutator(ctx: AlgebraCtx, p: WeylPoly, q: WeylPoly) -> WeylPoly:
    return sub(star_mul(ctx, p, q), star_mul(ctx, q, p))


def associator(p: WeylPoly, q: WeylPoly, r: WeylPoly) -> WeylPoly:
    return sub(assoc_mul(assoc_mul(p, q), r), assoc_mul(p, assoc_mul(q, r)))


def star_associator(ctx: AlgebraCtx, p: WeylPoly, q: WeylPoly, r: WeylPoly) -> WeylPoly:
    """(p, q, r)_* = (p * q) * r - p * (q * r)"""
    return sub(star_mul(ctx, star_mul(ctx, p, q), r), star_mul(ctx, p, star_mul(ctx, q, r)))


def star_power_left(ctx: AlgebraCtx, p: WeylPoly, n: int) -> WeylPoly:
    """Left-normed star power ((p * p) * p) * ... with n factors"""
    if n < 1:
        raise ValueError(f"star powers need n >= 1, got {n}: A_1^k has only a weak unit")
    result = p
    for _ in range(n - 1):
        result = star_mul(ctx, result, p)
    return result


def hom_associativity_defect(ctx: AlgebraCtx, p: WeylPoly, q: WeylPoly, r: WeylPoly) -> WeylPoly:
    """alpha(p) * (q * r) - (p * q) * alpha(r); zero in every A_1^k"""
    left = star_mul(ctx, alpha(ctx, p), star_mul(ctx, q, r))
    right = star_mul(ctx, star_mul(ctx, p, q), alpha(ctx, r))
    return sub(left, right)


def hom_jacobiator(ctx: AlgebraCtx, a: WeylPoly, b: WeylPoly, c: WeylPoly) -> WeylPoly:
    """Cyclic sum [alpha(a), [b, c]_*]_* + ...; zero when the hom-Jacobi identity holds"""
    total = ZERO
    for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
        inner = star_commutator(ctx, v, w)
        total = add(total, star_commutator(ctx, alpha(ctx, u), inner))
    return total


def enumerate_monomials(max_total_degree: int) -> List[WeylPoly]:
    """All y^i x^j with i + j <= bound: ascending total degree, higher y-degree first"""
    return [
        monomial(i, total - i)
        for total in range(max_total_degree + 1)
        for i in range(total, -1, -1)
    ]


def substitute_x(p: WeylPoly, image: WeylPoly) -> WeylPoly:
    """p(image) for p in K[x]; image is typically another polynomial in K[x]"""
    if not p.is_x_only():
        raise ValueError("substitute_x expects a polynomial in x alone")
    result = ZERO
    power = ONE
    degree = int(p.total_degree()) if p else -1
    for j in range(degree + 1):
        c = p.coefficient(0, j)
        if c:
            result = add(result, scale(c, power))
        power = assoc_mul(power, image)
    return result


_SCALAR_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(text: str) -> Scalar:
    """Parse "a" or "a/b" (b > 0) into a Scalar"""
    match = _SCALAR_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator or 1))
