"""Symmetric functions in superspace: the m-basis, elementary generators and Hopf structure."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinatorics import SuperPartition, permutation_sign, superpartitions_of_bidegree
from .linear import Element, Tensor
from .superpoly import (
    DualNumber,
    SuperMonomial,
    canonical_superpartition,
    mul as poly_mul,
    realize_m,
)


class SymSuper(Element):
    __slots__ = ()
    family = "m"
    unit_label = SuperPartition()

    @classmethod
    def basis_product(cls, a: SuperPartition, b: SuperPartition) -> SymSuper:
        return _basis_product(a, b)

    @classmethod
    def basis_coproduct(cls, a: SuperPartition) -> Tensor:
        return _basis_coproduct(a)

    @classmethod
    def basis_zeta(cls, a: SuperPartition) -> DualNumber:
        if len(a) == 0:
            return DualNumber(1, 0)
        if len(a) == 1:
            return DualNumber(0, 1) if a.dotted else DualNumber(1, 0)
        return DualNumber(0, 0)


def m(lam=None, plain=None) -> SymSuper:
    """m_Lambda; ``m((1, 0), (3, 1))`` is m_{(1,0;3,1)}."""
    if isinstance(lam, SuperPartition):
        return SymSuper.basis(lam)
    return SymSuper.basis(SuperPartition(tuple(lam or ()), tuple(plain or ())))


def e(r: int) -> SymSuper:
    """e_r = m_{(;1^r)}, with e_0 = 1."""
    if r < 0:
        raise ValueError("e_r needs r >= 0")
    return SymSuper.basis(SuperPartition((), (1,) * r))


def et(s: int) -> SymSuper:
    """The odd elementary function m_{(0;1^s)}."""
    if s < 0:
        raise ValueError("et_s needs s >= 0")
    return SymSuper.basis(SuperPartition((0,), (1,) * s))


def from_sqsym_canonical(f) -> SymSuper:
    """Read m-coefficients of a symmetric element of sQSym from the sorted labels (unchecked)."""
    coeffs = {}
    for alpha, c in f.terms.items():
        k = alpha.fermionic_degree
        if alpha.eta != (1,) * k + (0,) * (len(alpha) - k):
            continue
        try:
            lam = SuperPartition(alpha.values[:k], alpha.values[k:])
        except ValueError:
            continue
        coeffs[lam] = c
    return SymSuper(coeffs)


@lru_cache(maxsize=None)
def _basis_product(a: SuperPartition, b: SuperPartition) -> SymSuper:
    from .sqsym import include_lambda

    return from_sqsym_canonical(include_lambda(m(a)) * include_lambda(m(b)))


def _max_length(f: Element) -> int:
    return max((len(a) for a in f.terms), default=0)


def realize(f: SymSuper, n_vars: int):
    from .superpoly import SuperPolynomial

    out = SuperPolynomial(n_vars)
    for lam, c in f.terms.items():
        out = out + realize_m(lam, n_vars).scale(c)
    return out


def extract_m(p) -> SymSuper:
    """m-coefficients of a symmetric polynomial, read off canonical monomials."""
    coeffs = {}
    for mono, c in p.terms.items():
        lam = canonical_superpartition(mono)
        if lam is not None:
            coeffs[lam] = c
    return SymSuper(coeffs)


def product_by_realization(f: SymSuper, g: SymSuper, n_vars: int | None = None) -> SymSuper:
    """Multiply m_Lambda realizations directly in superspace polynomials."""
    if n_vars is None:
        n_vars = _max_length(f) + _max_length(g)
    return extract_m(poly_mul(realize(f, n_vars), realize(g, n_vars)))


def mul(f: SymSuper, g: SymSuper) -> SymSuper:
    return f * g


@lru_cache(maxsize=None)
def _basis_coproduct(lam: SuperPartition) -> Tensor:
    # alphabet doubling: variables [0, n) are the left alphabet, [n, 2n) the right
    n = len(lam)
    poly = realize_m(lam, 2 * n)
    acc: dict = {}
    for mono, c in poly.terms.items():
        left = SuperMonomial(mono.exponents[:n], tuple(i for i in mono.odd if i < n))
        right = SuperMonomial(mono.exponents[n:], tuple(i - n for i in mono.odd if i >= n))
        a = canonical_superpartition(left)
        if a is None:
            continue
        b = canonical_superpartition(right)
        if b is None:
            continue
        acc[(a, b)] = c
    return Tensor(SymSuper, acc)


def coproduct(f: SymSuper) -> Tensor:
    out = Tensor(SymSuper)
    for lam, c in f.terms.items():
        out = out + _basis_coproduct(lam).scale(c)
    return out


def zeta_S(f: SymSuper) -> DualNumber:
    out = DualNumber(0, 0)
    for lam, c in f.terms.items():
        out = out + SymSuper.basis_zeta(lam) * c
    return out


def counit(f: SymSuper) -> Fraction:
    return f.counit()


def antipode(f: SymSuper) -> SymSuper:
    from .chsa import LAMBDA, antipode as _antipode

    return _antipode(LAMBDA, f)


# elementary basis


class EIndex(SuperPartition):
    """Monomial in the generators: et_{dotted[0]} et_{dotted[1]} ... e_{plain[0]} ...

    The odd factors are kept in strictly decreasing index order.
    """

    @property
    def n_degree(self) -> int:
        return self.total_degree + self.fermionic_degree

    def render(self) -> str:
        return "*".join([f"et[{d}]" for d in self.dotted] + [f"e[{p}]" for p in self.plain])


class EPoly(Element):
    __slots__ = ()
    family = "e"
    unit_label = EIndex()

    @classmethod
    def basis_product(cls, a: EIndex, b: EIndex) -> EPoly:
        if set(a.dotted) & set(b.dotted):
            return cls.zero()
        dotted = list(a.dotted + b.dotted)
        sign = permutation_sign([-d for d in dotted])
        idx = EIndex(tuple(sorted(dotted, reverse=True)), tuple(sorted(a.plain + b.plain, reverse=True)))
        return cls({idx: sign})

    def render_label(self, label) -> str:
        if label == self.unit_label:
            return "1"
        return label.render()

    def to_json(self) -> dict:
        out = super().to_json()
        out["terms"] = [
            {"index": {"et": list(lab.dotted), "e": list(lab.plain)}, "coeff": t["coeff"]}
            for (lab, _), t in zip(self.items(), out["terms"])
        ]
        return out


def e_index(dotted=(), plain=()) -> EPoly:
    return EPoly.basis(EIndex(tuple(dotted), tuple(plain)))


@lru_cache(maxsize=None)
def _from_e_basis(idx: EIndex) -> SymSuper:
    out = SymSuper.one()
    for d in idx.dotted:
        out = out * et(d)
    for p in idx.plain:
        out = out * e(p)
    return out


def from_e(E: EPoly) -> SymSuper:
    """Expand a polynomial in the generators into the m-basis."""
    return E.map_linear(_from_e_basis, SymSuper)


class SingularSystem(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def _e_inverse(total: int, fermionic: int):
    """Inverse of the m-coefficient matrix of the generator monomials in one bidegree."""
    import sympy

    labels = superpartitions_of_bidegree(total, fermionic)
    eidx = [EIndex(lam.dotted, lam.plain) for lam in labels]
    cols = [_from_e_basis(E) for E in eidx]
    mat = sympy.Matrix(
        len(labels),
        len(eidx),
        lambda i, j: sympy.Rational(cols[j].coefficient(labels[i])),
    )
    if mat.rank() < len(labels):
        raise SingularSystem(f"generator monomials are dependent in bidegree {(total, fermionic)}")
    return labels, eidx, mat.inv()


def to_e(f: SymSuper) -> EPoly:
    """Express ``f`` as a polynomial in e_r and et_s by solving per bidegree."""
    by_bideg: dict = {}
    for lam, c in f.terms.items():
        by_bideg.setdefault(lam.bidegree, {})[lam] = c
    out = {}
    for (n, k), coeffs in by_bideg.items():
        labels, eidx, inv = _e_inverse(n, k)
        for j, E in enumerate(eidx):
            val = sum(
                (Fraction(int(inv[j, i].p), int(inv[j, i].q)) * coeffs.get(lab, 0) for i, lab in enumerate(labels)),
                Fraction(0),
            )
            if val:
                out[E] = val
    return EPoly(out)
