"""Polynomials in N commuting variables x_i and N anticommuting variables theta_i.

This is the concrete ring in which products of (quasi-)symmetric functions in
superspace are computed.  Variable indices are 0-based internally and 1-based
when printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence

from .combinatorics import (
    DottedComposition,
    SuperPartition,
    distinct_permutations,
    permutation_sign,
)
from .linear import _accumulate, as_fraction, format_coeff


class NotQuasiSymmetric(ValueError):
    pass


class SuperMonomial(NamedTuple):
    """x-exponent vector and ascending tuple of theta indices."""

    exponents: tuple[int, ...]
    odd: tuple[int, ...] = ()

    @property
    def x_degree(self) -> int:
        return sum(self.exponents)

    @property
    def fermionic_degree(self) -> int:
        return len(self.odd)

    def support(self) -> set[int]:
        return {i for i, e in enumerate(self.exponents) if e} | set(self.odd)

    def __str__(self) -> str:
        factors = [f"th{i + 1}" for i in self.odd]
        for i, e in enumerate(self.exponents):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        return "*".join(factors) if factors else "1"


class SuperPolynomial:
    """Sparse polynomial in ``n_vars`` supervariables with exact rational coefficients."""

    __slots__ = ("n_vars", "_terms")

    def __init__(self, n_vars: int, terms=None):
        self.n_vars = n_vars
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                mono = SuperMonomial(tuple(mono[0]), tuple(mono[1]))
                if len(mono.exponents) != n_vars:
                    raise ValueError("monomial has the wrong number of variables")
                if list(mono.odd) != sorted(set(mono.odd)):
                    raise ValueError("theta indices must be strictly ascending")
                c = as_fraction(c)
                if c:
                    _accumulate(acc, mono, c)
        self._terms = acc

    @classmethod
    def _raw(cls, n_vars, acc):
        obj = cls.__new__(cls)
        obj.n_vars = n_vars
        obj._terms = acc
        return obj

    @classmethod
    def x(cls, i: int, n_vars: int) -> SuperPolynomial:
        """The variable x_i (1-based)."""
        exps = [0] * n_vars
        exps[i - 1] = 1
        return cls._raw(n_vars, {SuperMonomial(tuple(exps), ()): Fraction(1)})

    @classmethod
    def theta(cls, i: int, n_vars: int) -> SuperPolynomial:
        """The odd variable theta_i (1-based)."""
        return cls._raw(n_vars, {SuperMonomial((0,) * n_vars, (i - 1,)): Fraction(1)})

    @classmethod
    def constant(cls, c, n_vars: int) -> SuperPolynomial:
        return cls(n_vars, {SuperMonomial((0,) * n_vars, ()): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, mono: SuperMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.n_vars == other.n_vars and self._terms == other._terms

    __hash__ = None

    def _check(self, other: SuperPolynomial):
        if self.n_vars != other.n_vars:
            raise ValueError(f"mismatched number of variables: {self.n_vars} vs {other.n_vars}")

    def __add__(self, other: SuperPolynomial) -> SuperPolynomial:
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            _accumulate(acc, m, c)
        return self._raw(self.n_vars, acc)

    def __neg__(self):
        return self._raw(self.n_vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> SuperPolynomial:
        c = as_fraction(c)
        if not c:
            return self._raw(self.n_vars, {})
        return self._raw(self.n_vars, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def parity_set(self) -> set[int]:
        return {len(m.odd) % 2 for m in self._terms}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for m, c in sorted(self._terms.items(), key=lambda kv: (len(kv[0].odd), kv[0].odd, [-e for e in kv[0].exponents])):
            word = str(m)
            mag = abs(c)
            body = format_coeff(mag) if word == "1" else (word if mag == 1 else f"{format_coeff(mag)}*{word}")
            if out:
                out.append((" - " if c < 0 else " + ") + body)
            else:
                out.append(("-" if c < 0 else "") + body)
        return "".join(out)

    def __repr__(self):
        return f"SuperPolynomial({self.n_vars}, {self})"


def mul(p: SuperPolynomial, q: SuperPolynomial) -> SuperPolynomial:
    """Product with the Koszul sign from reordering theta factors."""
    p._check(q)
    acc: dict = {}
    for ma, ca in p._terms.items():
        sa = set(ma.odd)
        for mb, cb in q._terms.items():
            if sa.intersection(mb.odd):
                continue
            inv = 0
            for i in ma.odd:
                for j in mb.odd:
                    if i > j:
                        inv += 1
            exps = tuple(a + b for a, b in zip(ma.exponents, mb.exponents))
            mono = SuperMonomial(exps, tuple(sorted(ma.odd + mb.odd)))
            _accumulate(acc, mono, -ca * cb if inv % 2 else ca * cb)
    return SuperPolynomial._raw(p.n_vars, acc)


def realize_m(lam: SuperPartition, n_vars: int) -> SuperPolynomial:
    """m_Lambda in ``n_vars`` supervariables as a signed orbit sum.

    Each distinct monomial of the S_N-orbit of theta_1...theta_m x^Lambda is
    visited once; the canonical monomial has coefficient +1.
    """
    length = len(lam)
    if n_vars < length:
        raise ValueError(f"{lam} needs at least {length} variables")
    m = lam.fermionic_degree
    slots = (
        [(i, v) for i, v in enumerate(lam.dotted)]
        + [(-1, v) for v in lam.plain]
        + [(-1, 0)] * (n_vars - length)
    )
    acc: dict = {}
    for arrangement in distinct_permutations(slots):
        exps = tuple(v for _, v in arrangement)
        pos = [0] * m
        for j, (i, _) in enumerate(arrangement):
            if i >= 0:
                pos[i] = j
        acc[SuperMonomial(exps, tuple(sorted(pos)))] = Fraction(permutation_sign(pos))
    return SuperPolynomial._raw(n_vars, acc)


def realize_m_literal(lam: SuperPartition, n_vars: int) -> SuperPolynomial:
    """m_Lambda from the full S_N sum divided by the stabilizer order.

    Zero padding counts as plain parts of size 0 in the automorphism count.
    Factorial cost; for cross-checks only.
    """
    from itertools import permutations
    from math import factorial

    from .combinatorics import aut_count

    length = len(lam)
    if n_vars < length:
        raise ValueError(f"{lam} needs at least {length} variables")
    base_exps = lam.dotted + lam.plain + (0,) * (n_vars - length)
    m = lam.fermionic_degree
    acc: dict = {}
    for sigma in permutations(range(n_vars)):
        exps = [0] * n_vars
        for i, e in enumerate(base_exps):
            exps[sigma[i]] = e
        pos = [sigma[i] for i in range(m)]
        _accumulate(acc, SuperMonomial(tuple(exps), tuple(sorted(pos))), Fraction(permutation_sign(pos)))
    aut = aut_count(lam.plain) * factorial(n_vars - length)
    return SuperPolynomial._raw(n_vars, {k: v / aut for k, v in acc.items()})


def realize_M(alpha: DottedComposition, n_vars: int) -> SuperPolynomial:
    """Monomial quasi-symmetric function M_alpha in ``n_vars`` supervariables."""
    length = len(alpha)
    if n_vars < length:
        raise ValueError(f"{alpha} needs at least {length} variables")
    acc: dict = {}
    for idx in combinations(range(n_vars), length):
        exps = [0] * n_vars
        odd = []
        for i, (v, d) in zip(idx, alpha.entries):
            exps[i] = v
            if d:
                odd.append(i)
        acc[SuperMonomial(tuple(exps), tuple(odd))] = Fraction(1)
    return SuperPolynomial._raw(n_vars, acc)


def canonical_composition(mono: SuperMonomial) -> DottedComposition | None:
    """The dotted composition whose canonical monomial is ``mono``, if any.

    A monomial is canonical when its support is exactly {0, ..., l-1}.
    """
    odd = set(mono.odd)
    entries = []
    for i, e in enumerate(mono.exponents):
        if e or i in odd:
            entries.append((e, i in odd))
        else:
            if any(mono.exponents[i:]) or any(j >= i for j in odd):
                return None
            break
    return DottedComposition(tuple(entries))


def canonical_superpartition(mono: SuperMonomial) -> SuperPartition | None:
    """The superpartition whose canonical monomial theta_1..theta_m x^Lambda is ``mono``."""
    alpha = canonical_composition(mono)
    if alpha is None:
        return None
    m = alpha.fermionic_degree
    if alpha.eta != (1,) * m + (0,) * (len(alpha) - m):
        return None
    try:
        return SuperPartition(alpha.values[:m], alpha.values[m:])
    except ValueError:
        return None


def extract_M_expansion(p: SuperPolynomial):
    """Read the M-expansion of a quasi-symmetric polynomial from canonical monomials.

    Raises NotQuasiSymmetric when the expansion does not reproduce ``p``.
    """
    from .sqsym import QSymSuper

    coeffs: dict = {}
    for mono, c in p._terms.items():
        alpha = canonical_composition(mono)
        if alpha is not None:
            coeffs[alpha] = c
    residual = dict(p._terms)
    for alpha, c in coeffs.items():
        for mono, d in realize_M(alpha, p.n_vars)._terms.items():
            _accumulate(residual, mono, -c * d)
    if residual:
        mono = min(residual, key=lambda m: (m.odd, m.exponents))
        raise NotQuasiSymmetric(
            f"not quasi-symmetric in {p.n_vars} variables (residual at {mono})"
        )
    return QSymSuper(coeffs)


def act(sigma: Sequence[int], p: SuperPolynomial) -> SuperPolynomial:
    """Diagonal action x_i -> x_sigma(i), theta_i -> theta_sigma(i) (0-based ``sigma``)."""
    n = p.n_vars
    if sorted(sigma) != list(range(n)):
        raise ValueError("sigma must be a permutation of range(n_vars)")
    acc: dict = {}
    for mono, c in p._terms.items():
        exps = [0] * n
        for i, e in enumerate(mono.exponents):
            exps[sigma[i]] = e
        images = [sigma[i] for i in mono.odd]
        sign = permutation_sign(images)
        _accumulate(acc, SuperMonomial(tuple(exps), tuple(sorted(images))), c * sign)
    return SuperPolynomial._raw(n, acc)


@dataclass(frozen=True)
class DualNumber:
    """a + b*eps with eps odd and eps^2 = 0."""

    even: Fraction = Fraction(0)
    odd: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "even", as_fraction(self.even))
        object.__setattr__(self, "odd", as_fraction(self.odd))

    def __add__(self, other: DualNumber) -> DualNumber:
        return DualNumber(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: DualNumber) -> DualNumber:
        return DualNumber(self.even - other.even, self.odd - other.odd)

    def __neg__(self):
        return DualNumber(-self.even, -self.odd)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DualNumber(self.even * other, self.odd * other)
        return DualNumber(self.even * other.even, self.even * other.odd + self.odd * other.even)

    __rmul__ = __mul__

    def parity_set(self) -> set[int]:
        return {p for p, v in ((0, self.even), (1, self.odd)) if v}

    def __str__(self) -> str:
        if not self.odd:
            return format_coeff(self.even)
        eps = "eps" if self.odd == 1 else ("-eps" if self.odd == -1 else f"{format_coeff(self.odd)}*eps")
        if not self.even:
            return eps
        if eps.startswith("-"):
            return f"{format_coeff(self.even)} - {eps[1:]}"
        return f"{format_coeff(self.even)} + {eps}"

    def to_json(self) -> dict:
        return {"even": format_coeff(self.even), "odd": format_coeff(self.odd)}


EPS = DualNumber(0, 1)
ONE = DualNumber(1, 0)
ZERO = DualNumber(0, 0)


def specialize_point(p: SuperPolynomial) -> DualNumber:
    """Set x_1 = 1, theta_1 = eps and every other variable to 0."""
    even = Fraction(0)
    odd = Fraction(0)
    for mono, c in p._terms.items():
        if any(mono.exponents[1:]) or any(i > 0 for i in mono.odd):
            continue
        if mono.odd:
            odd += c
        else:
            even += c
    return DualNumber(even, odd)
