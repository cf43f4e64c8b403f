"""Noncommutative symmetric functions in superspace (H-basis), dual to sQSym."""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import DottedComposition
from .linear import Element
from .superpoly import DualNumber


class NSymSuper(Element):
    __slots__ = ()
    family = "H"
    unit_label = DottedComposition()

    @classmethod
    def basis_product(cls, a: DottedComposition, b: DottedComposition) -> NSymSuper:
        return cls.basis(a + b)


def H(alpha) -> NSymSuper:
    if not isinstance(alpha, DottedComposition):
        alpha = DottedComposition.of(*alpha)
    return NSymSuper.basis(alpha)


def mul(f: NSymSuper, g: NSymSuper) -> NSymSuper:
    return f * g


def pair(h: NSymSuper, f) -> Fraction:
    """Bilinear pairing with (H_alpha, M_beta) = 1 if alpha == beta else 0."""
    return sum((c * f.coefficient(alpha) for alpha, c in h.terms.items()), Fraction(0))


def pair_tensor(left: NSymSuper, right: NSymSuper, t) -> Fraction:
    """(H (x) H', sum c M (x) M') without Koszul signs."""
    total = Fraction(0)
    for (a, b), c in t.terms.items():
        total += c * left.coefficient(a) * right.coefficient(b)
    return total


def _generator_zeta(entry) -> DualNumber:
    v, dotted = entry
    if dotted:
        return DualNumber(0, 1) if v == 0 else DualNumber(0, 0)
    return DualNumber(1, 0) if v == 1 else DualNumber(0, 0)


def zeta_N(f: NSymSuper) -> DualNumber:
    """Multiplicative extension of H_1 -> 1, H_r -> 0 (r >= 2), H~_0 -> eps, H~_s -> 0 (s >= 1)."""
    out = DualNumber(0, 0)
    for alpha, c in f.terms.items():
        val = DualNumber(1, 0)
        for entry in alpha.entries:
            val = val * _generator_zeta(entry)
        out = out + val * c
    return out
