"""Quasi-symmetric functions in superspace in the monomial basis M_alpha."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinatorics import DottedComposition, sort_dotted
from .linear import Element, Tensor
from .superpoly import DualNumber, extract_M_expansion, mul as poly_mul, realize_M


class NotSymmetric(ValueError):
    pass


class QSymSuper(Element):
    __slots__ = ()
    family = "M"
    unit_label = DottedComposition()

    @classmethod
    def basis_product(cls, a: DottedComposition, b: DottedComposition) -> QSymSuper:
        return _basis_product(a, b)

    @classmethod
    def basis_coproduct(cls, a: DottedComposition) -> Tensor:
        return Tensor._raw(
            cls,
            {(a[:k], a[k:]): Fraction(1) for k in range(len(a) + 1)},
        )

    @classmethod
    def basis_zeta(cls, a: DottedComposition) -> DualNumber:
        if len(a) == 0:
            return DualNumber(1, 0)
        if len(a) == 1:
            return DualNumber(0, 1) if a.entries[0][1] else DualNumber(1, 0)
        return DualNumber(0, 0)


@lru_cache(maxsize=None)
def _basis_product(a: DottedComposition, b: DottedComposition) -> QSymSuper:
    return product_by_realization(M(a), M(b))


def M(alpha) -> QSymSuper:
    """Basis element M_alpha; accepts a DottedComposition or the items of ``DottedComposition.of``."""
    if not isinstance(alpha, DottedComposition):
        alpha = DottedComposition.of(*alpha)
    return QSymSuper.basis(alpha)


def _max_length(f: Element) -> int:
    return max((len(a) for a in f.terms), default=0)


def realize(f: QSymSuper, n_vars: int):
    from .superpoly import SuperPolynomial

    out = SuperPolynomial(n_vars)
    for alpha, c in f.terms.items():
        out = out + realize_M(alpha, n_vars).scale(c)
    return out


def product_by_realization(f: QSymSuper, g: QSymSuper, n_vars: int | None = None) -> QSymSuper:
    """Multiply via polynomials in enough supervariables to see every term."""
    if n_vars is None:
        n_vars = _max_length(f) + _max_length(g)
    return extract_M_expansion(poly_mul(realize(f, n_vars), realize(g, n_vars)))


def mul(f: QSymSuper, g: QSymSuper) -> QSymSuper:
    return f * g


def coproduct(f: QSymSuper) -> Tensor:
    """Deconcatenation coproduct."""
    out = Tensor(QSymSuper)
    for alpha, c in f.terms.items():
        out = out + QSymSuper.basis_coproduct(alpha).scale(c)
    return out


def zeta_Q(f: QSymSuper) -> DualNumber:
    """Specialization x_1 = 1, theta_1 = eps, all other variables 0."""
    out = DualNumber(0, 0)
    for alpha, c in f.terms.items():
        out = out + QSymSuper.basis_zeta(alpha) * c
    return out


@lru_cache(maxsize=None)
def _include_m(lam) -> QSymSuper:
    from .superpoly import realize_m

    return extract_M_expansion(realize_m(lam, len(lam)))


def include_lambda(f) -> QSymSuper:
    """M-expansion of a symmetric function in superspace."""
    return f.map_linear(_include_m, QSymSuper)


def is_symmetric(f: QSymSuper):
    """Return the SymSuper whose M-expansion is ``f``; raise NotSymmetric otherwise."""
    from .slambda import SymSuper

    coeffs = {}
    for alpha, c in f.terms.items():
        m = alpha.fermionic_degree
        if alpha.eta != (1,) * m + (0,) * (len(alpha) - m):
            continue
        try:
            lam, sign = sort_dotted(alpha)
        except ValueError:
            continue
        if lam.to_composition() == alpha:
            coeffs[lam] = c
    g = SymSuper(coeffs)
    diff = include_lambda(g) - f
    if diff:
        alpha, c = diff.items()[0]
        raise NotSymmetric(f"not symmetric: coefficient mismatch at M{alpha}")
    return g


def counit(f: QSymSuper) -> Fraction:
    return f.counit()


def antipode(f: QSymSuper) -> QSymSuper:
    from .chsa import SQSYM, antipode as _antipode

    return _antipode(SQSYM, f)
