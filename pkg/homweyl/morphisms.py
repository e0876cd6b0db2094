"""
Derivations of A_1^k and morphisms A_1^k -> A_1^l.

A candidate morphism is given by the images of the generators x and y and is
extended to all of A_1 through the associative product of the target,

    f(sum c_ij y^i x^j) = sum c_ij f(y)^i . f(x)^j

which is well defined exactly when [f(x), f(y)] = 1. Such an f is a morphism
A_1^k -> A_1^l when additionally alpha_l(f(x)) = f(x) and
alpha_l(f(y)) = f(y) + k.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .algebra import (
    ONE,
    X,
    Y,
    AlgebraCtx,
    Monomial,
    Scalar,
    WeylPoly,
    add,
    alpha,
    assoc_mul,
    commutator,
    const,
    enumerate_monomials,
    scale,
    star_commutator,
    star_mul,
    sub,
    substitute_x,
    to_scalar,
)
from .expr import format_poly
from .verdict import Verdict, Witness

LinearOperator = Callable[[WeylPoly], WeylPoly]


@dataclass(frozen=True)
class GenMorphism:
    """A candidate homomorphism A_1^k -> A_1^l, given by the images of x and y"""

    source_k: Scalar
    target_l: Scalar
    fx: WeylPoly
    fy: WeylPoly

    def __post_init__(self):
        object.__setattr__(self, 'source_k', to_scalar(self.source_k))
        object.__setattr__(self, 'target_l', to_scalar(self.target_l))

    @property
    def source(self) -> AlgebraCtx:
        return AlgebraCtx(self.source_k)

    @property
    def target(self) -> AlgebraCtx:
        return AlgebraCtx(self.target_l)


@dataclass(frozen=True)
class DerivationSpec:
    """The derivation [c y + p(x), .] of A_1^k"""

    ctx: AlgebraCtx
    c: Scalar
    p: WeylPoly

    def __post_init__(self):
        object.__setattr__(self, 'c', to_scalar(self.c))
        if not self.p.is_x_only():
            raise ValueError("the derivation polynomial p must lie in K[x]")

    @property
    def generator(self) -> WeylPoly:
        return add(scale(self.c, Y), self.p)


class _Image:
    """Memoised images of basis monomials under a generator assignment"""

    def __init__(self, m: GenMorphism):
        self.fx_powers: List[WeylPoly] = [ONE]
        self.fy_powers: List[WeylPoly] = [ONE]
        self.fx = m.fx
        self.fy = m.fy
        self.cache: Dict[Monomial, WeylPoly] = {}

    def _power(self, powers: List[WeylPoly], base: WeylPoly, n: int) -> WeylPoly:
        while len(powers) <= n:
            powers.append(assoc_mul(powers[-1], base))
        return powers[n]

    def of_monomial(self, i: int, j: int) -> WeylPoly:
        key = (i, j)
        if key not in self.cache:
            self.cache[key] = assoc_mul(
                self._power(self.fy_powers, self.fy, i),
                self._power(self.fx_powers, self.fx, j),
            )
        return self.cache[key]

    def __call__(self, p: WeylPoly) -> WeylPoly:
        result: Dict[Monomial, Fraction] = {}
        for (i, j), c in p.terms():
            for mono, v in self.of_monomial(i, j).terms():
                result[mono] = result.get(mono, Fraction(0)) + c * v
        return WeylPoly(result)


def apply_morphism(m: GenMorphism, p: WeylPoly) -> WeylPoly:
    """Extend the generator images to p using the associative product of the target"""
    return _Image(m)(p)


def identity_morphism(k: Scalar = 0) -> GenMorphism:
    return GenMorphism(k, k, X, Y)


def _generator_witness(m: GenMorphism, expected: str, actual: WeylPoly) -> Witness:
    return Witness(
        inputs={'fx': format_poly(m.fx), 'fy': format_poly(m.fy),
                'k': str(m.source_k), 'l': str(m.target_l)},
        expected=expected,
        actual=format_poly(actual),
    )


def check_morphism(m: GenMorphism, degree_bound: int) -> Verdict:
    """
    Decide whether the generator images define a morphism A_1^k -> A_1^l.

    Clauses, reported in this order on failure:
      (a) [f(x), f(y)] = 1
      (b) alpha_l(f(x)) = f(x)
      (c) alpha_l(f(y)) = f(y) + k
      (d) f(a . b) = f(a) . f(b) for basis monomials a, b of total degree <= degree_bound
    """
    name = 'check_morphism'
    if degree_bound < 2:
        raise ValueError(f"degree_bound must be at least 2, got {degree_bound}")
    target = m.target

    bracket = commutator(m.fx, m.fy)
    if bracket != ONE:
        return Verdict.fail(name, _generator_witness(m, "[f(x), f(y)] = 1", bracket), clause='a')

    shifted_x = alpha(target, m.fx)
    if shifted_x != m.fx:
        return Verdict.fail(name, _generator_witness(m, format_poly(m.fx), shifted_x), clause='b')

    shifted_y = alpha(target, m.fy)
    expected_y = add(m.fy, const(m.source_k))
    if shifted_y != expected_y:
        return Verdict.fail(name, _generator_witness(m, format_poly(expected_y), shifted_y), clause='c')

    f = _Image(m)
    basis = enumerate_monomials(degree_bound)
    for a in basis:
        for b in basis:
            lhs = f(assoc_mul(a, b))
            rhs = assoc_mul(f(a), f(b))
            if lhs != rhs:
                witness = Witness(
                    inputs={'a': format_poly(a), 'b': format_poly(b)},
                    expected=format_poly(rhs),
                    actual=format_poly(lhs),
                )
                return Verdict.fail(name, witness, clause='d')
    return Verdict.ok(name, [f"multiplicativity audited on basis monomials up to degree {degree_bound}"])


def check_star_homomorphism(m: GenMorphism, degree_bound: int) -> Verdict:
    """Audit f o alpha_k = alpha_l o f and f(a *_k b) = f(a) *_l f(b) directly on basis monomials"""
    name = 'check_star_homomorphism'
    source, target = m.source, m.target
    f = _Image(m)
    basis = enumerate_monomials(degree_bound)
    for a in basis:
        lhs = f(alpha(source, a))
        rhs = alpha(target, f(a))
        if lhs != rhs:
            witness = Witness({'a': format_poly(a)}, format_poly(rhs), format_poly(lhs))
            return Verdict.fail(name, witness, clause='twist')
    for a in basis:
        for b in basis:
            lhs = f(star_mul(source, a, b))
            rhs = star_mul(target, f(a), f(b))
            if lhs != rhs:
                witness = Witness({'a': format_poly(a), 'b': format_poly(b)},
                                  format_poly(rhs), format_poly(lhs))
                return Verdict.fail(name, witness, clause='star-product')
    return Verdict.ok(name)


# Classified morphisms between purely hom-associative Weyl algebras ---------------------

def classified_isomorphism(k: Scalar, l: Scalar, c: Scalar, p: WeylPoly) -> GenMorphism:
    """The morphism x -> (l/k) x + c, y -> (k/l) y + p(x) from A_1^k to A_1^l"""
    k, l, c = to_scalar(k), to_scalar(l), to_scalar(c)
    if k == 0 or l == 0:
        raise ValueError("the classification covers only k != 0 and l != 0")
    if not p.is_x_only():
        raise ValueError("p must lie in K[x]")
    fx = add(scale(l / k, X), const(c))
    fy = add(scale(k / l, Y), p)
    return GenMorphism(k, l, fx, fy)


def classified_parameters(m: GenMorphism) -> Tuple[Scalar, Scalar, Scalar, WeylPoly]:
    """Recover (k, l, c, p) from a morphism of classified shape"""
    k, l = m.source_k, m.target_l
    if k == 0 or l == 0:
        raise ValueError("the classification covers only k != 0 and l != 0")
    c = m.fx.constant_term()
    if m.fx != add(scale(l / k, X), const(c)):
        raise ValueError(f"f(x) = {format_poly(m.fx)} is not of the form (l/k) x + c")
    p = sub(m.fy, scale(k / l, Y))
    if not p.is_x_only():
        raise ValueError(f"f(y) = {format_poly(m.fy)} is not of the form (k/l) y + p(x)")
    return k, l, c, p


def is_classified(m: GenMorphism) -> bool:
    try:
        classified_parameters(m)
    except ValueError:
        return False
    return True


def invert_classified(m: GenMorphism) -> GenMorphism:
    """Inverse g: x -> (k/l)(x - c), y -> (l/k)(y - p(g(x)))"""
    k, l, c, p = classified_parameters(m)
    gx = scale(k / l, sub(X, const(c)))
    gy = scale(l / k, sub(Y, substitute_x(p, gx)))
    return GenMorphism(l, k, gx, gy)


def compose(outer: GenMorphism, inner: GenMorphism) -> GenMorphism:
    """outer o inner: first inner, then outer"""
    if inner.target_l != outer.source_k:
        raise ValueError(
            f"cannot compose: inner lands in A_1^{inner.target_l} but outer starts from A_1^{outer.source_k}"
        )
    f = _Image(outer)
    return GenMorphism(inner.source_k, outer.target_l, f(inner.fx), f(inner.fy))


# Automorphism generators of A_1 --------------------------------------------------------

def linear_automorphism(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> GenMorphism:
    """x -> a x + b y, y -> c x + d y with ad - bc = 1"""
    a, b, c, d = (to_scalar(v) for v in (a, b, c, d))
    if a * d - b * c != 1:
        raise ValueError(f"linear automorphisms need ad - bc = 1, got {a * d - b * c}")
    return GenMorphism(0, 0, add(scale(a, X), scale(b, Y)), add(scale(c, X), scale(d, Y)))


def triangular_automorphism(p: WeylPoly) -> GenMorphism:
    """x -> x, y -> y + p(x)"""
    if not p.is_x_only():
        raise ValueError("p must lie in K[x]")
    return GenMorphism(0, 0, X, add(Y, p))


def decompose_classified(k: Scalar, l: Scalar, c: Scalar, p: WeylPoly) -> List[GenMorphism]:
    """
    The automorphisms g1, g2, g3, g4 of A_1 with
    g4 o g3 o g2 o g1 = classified_isomorphism(k, l, c, p).
    """
    k, l, c = to_scalar(k), to_scalar(l), to_scalar(c)
    if k == 0 or l == 0:
        raise ValueError("the classification covers only k != 0 and l != 0")
    g1 = linear_automorphism(l / k, 1, 0, k / l)
    g2 = triangular_automorphism(const(c))
    g3 = linear_automorphism(1, -k / l, 0, 1)
    g4 = triangular_automorphism(add(const(-c), scale(l / k, p)))
    return [g1, g2, g3, g4]


# Derivations --------------------------------------------------------------------------

def apply_derivation(d: DerivationSpec, p: WeylPoly) -> WeylPoly:
    return commutator(d.generator, p)


def inner_derivation(q: WeylPoly) -> LinearOperator:
    """a -> [q, a], the inner derivation of A_1"""
    return lambda a: commutator(q, a)


def inner_star_derivation(ctx: AlgebraCtx, q: WeylPoly) -> LinearOperator:
    """a -> [q, a]_*, a derivation of A_1^k only when k = 0 or q = c y + p(x)"""
    return lambda a: star_commutator(ctx, q, a)


def is_derivation(ctx: AlgebraCtx, op: LinearOperator, degree_bound: int) -> Verdict:
    """Probe the Leibniz rule op(a * b) = op(a) * b + a * op(b) on basis monomials"""
    name = 'is_derivation'
    if degree_bound < 2:
        raise ValueError(f"degree_bound must be at least 2, got {degree_bound}")
    basis = enumerate_monomials(degree_bound)
    images = {a: op(a) for a in basis}
    for a in basis:
        for b in basis:
            lhs = op(star_mul(ctx, a, b))
            rhs = add(star_mul(ctx, images[a], b), star_mul(ctx, a, images[b]))
            if lhs != rhs:
                witness = Witness(
                    inputs={'a': format_poly(a), 'b': format_poly(b), 'k': str(ctx.k)},
                    expected=format_poly(rhs),
                    actual=format_poly(lhs),
                )
                return Verdict.fail(name, witness, clause='leibniz')
    return Verdict.ok(name, [f"Leibniz rule probed on basis monomials up to degree {degree_bound}"])
