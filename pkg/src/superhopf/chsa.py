"""Combinatorial Hopf superalgebras: iterated coproducts, the universal maps
into sQSym and Lambda, the antipode, and an axiom checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .combinatorics import (
    DottedComposition,
    dotted_compositions_of_degree,
    superpartitions_of_degree,
)
from .linear import Element, Tensor, _accumulate
from .superpoly import DualNumber


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HopfInstance:
    """A connected graded Hopf superalgebra with a supercharacter.

    ``kind`` is the Element subclass; it supplies ``basis_product`` and
    ``basis_coproduct`` on labels.  ``basis(k)`` lists the labels of degree k
    and ``zeta`` evaluates the supercharacter on a label.
    """

    name: str
    kind: type[Element]
    basis: Callable[[int], list]
    zeta: Callable[[object], DualNumber]
    _antipode_cache: dict = field(default_factory=dict, repr=False)

    @property
    def unit(self):
        return self.kind.unit_label

    def product(self, a, b) -> Element:
        return self.kind.basis_product(a, b)

    def coproduct(self, a) -> Tensor:
        return self.kind.basis_coproduct(a)

    def counit(self, a) -> Fraction:
        return Fraction(1) if a == self.unit else Fraction(0)

    def element(self, x) -> Element:
        return x if isinstance(x, Element) else self.kind.basis(x)


def coproduct(A: HopfInstance, x) -> Tensor:
    x = A.element(x)
    out: dict = {}
    for a, c in x.terms.items():
        for key, d in A.coproduct(a).terms.items():
            _accumulate(out, key, c * d)
    return Tensor._raw(A.kind, out)


def zeta(A: HopfInstance, x) -> DualNumber:
    x = A.element(x)
    out = DualNumber(0, 0)
    for a, c in x.terms.items():
        out = out + A.zeta(a) * c
    return out


def iterated_coproduct(A: HopfInstance, x, l: int) -> Tensor:
    """Delta^(l-1): apply the coproduct to the first slot l-1 times."""
    if l < 1:
        raise ValueError("arity must be >= 1")
    x = A.element(x)
    t = Tensor._raw(A.kind, {(a,): c for a, c in x.terms.items()})
    for _ in range(l - 1):
        t = t.map_slot(0, A.coproduct)
    return t


def _slot_value(A: HopfInstance, label) -> tuple[tuple[int, bool], Fraction] | None:
    """The dotted-composition entry a label can feed, with its zeta coefficient."""
    k = label.n_degree
    if k == 0:
        return None
    z = A.zeta(label)
    if label.parity:
        return ((k - 1, True), z.odd) if z.odd else None
    return ((k, False), z.even) if z.even else None


def zeta_alpha(A: HopfInstance, x, alpha: DottedComposition) -> Fraction:
    """Coefficient of M_alpha in Psi(x): project Delta^(l-1) x slotwise and apply zeta.

    A slot holding an undotted r takes the even degree-r part and the even
    value of zeta; a dotted s takes the odd degree-(s+1) part and the
    eps-coefficient of zeta.
    """
    x = A.element(x)
    for a in x.terms:
        if a.n_degree != alpha.n_degree:
            raise DegreeMismatch(f"degree {a.n_degree} element against {alpha}")
    if len(alpha) == 0:
        return x.coefficient(A.unit)
    total = Fraction(0)
    for key, c in iterated_coproduct(A, x, len(alpha)).terms.items():
        val = c
        for label, (v, dotted) in zip(key, alpha.entries):
            want = v + 1 if dotted else v
            if label.n_degree != want or label.parity != int(dotted):
                val = 0
                break
            z = A.zeta(label)
            val *= z.odd if dotted else z.even
            if not val:
                break
        total += val
    return total


def psi_to_sqsym(A: HopfInstance, x):
    """Universal morphism into sQSym: sum over alpha of zeta_alpha(x) M_alpha."""
    from .sqsym import QSymSuper

    x = A.element(x)
    acc: dict = {}
    for k, comp in x.homogeneous_components().items():
        if k == 0:
            _accumulate(acc, DottedComposition(), comp.coefficient(A.unit))
            continue
        t = Tensor._raw(A.kind, {(a,): c for a, c in comp.terms.items()})
        for l in range(1, k + 1):
            if l > 1:
                t = t.map_slot(0, A.coproduct)
            for key, c in t.terms.items():
                entries = []
                val = c
                for label in key:
                    sv = _slot_value(A, label)
                    if sv is None:
                        val = 0
                        break
                    entries.append(sv[0])
                    val *= sv[1]
                if val:
                    _accumulate(acc, DottedComposition(tuple(entries)), val)
    return QSymSuper._raw(acc)


def psi_to_sqsym_by_definition(A: HopfInstance, x):
    """Same map, looping over every dotted composition and calling zeta_alpha."""
    from .sqsym import QSymSuper

    x = A.element(x)
    acc: dict = {}
    for k, comp in x.homogeneous_components().items():
        for alpha in dotted_compositions_of_degree(k):
            c = zeta_alpha(A, comp, alpha)
            if c:
                acc[alpha] = c
    return QSymSuper._raw(acc)


def psi_to_lambda(A: HopfInstance, x):
    """Universal morphism into Lambda for a cocommutative instance.

    Raises NotSymmetric if the sQSym image is not symmetric, which signals a
    non-cocommutative instance.
    """
    from .sqsym import is_symmetric

    return is_symmetric(psi_to_sqsym(A, x))


def psi_to_lambda_by_definition(A: HopfInstance, x):
    """sum over superpartitions Lambda of zeta_Lambda(x) m_Lambda."""
    from .slambda import SymSuper

    x = A.element(x)
    acc: dict = {}
    for k, comp in x.homogeneous_components().items():
        for lam in superpartitions_of_degree(k):
            c = zeta_alpha(A, comp, lam.to_composition())
            if c:
                acc[lam] = c
    return SymSuper._raw(acc)


def _reduced_coproduct(A: HopfInstance, a) -> dict:
    terms = dict(A.coproduct(a).terms)
    terms.pop((a, A.unit), None)
    terms.pop((A.unit, a), None)
    return terms


def _antipode_basis(A: HopfInstance, a) -> Element:
    cache = A._antipode_cache
    if a in cache:
        return cache[a]
    if a == A.unit:
        out = A.kind.one()
    else:
        acc: dict = {a: Fraction(-1)}
        for (a1, a2), c in _reduced_coproduct(A, a).items():
            if a1.n_degree == 0 or a2.n_degree == 0:
                raise ValueError(f"{A.name} is not graded connected at {a}")
            s1 = _antipode_basis(A, a1)
            for lab, d in (s1 * A.kind.basis(a2)).terms.items():
                _accumulate(acc, lab, -c * d)
        out = A.kind._raw(acc)
    cache[a] = out
    return out


def antipode(A: HopfInstance, x) -> Element:
    """S(1) = 1 and S(a) = -a - sum S(a') a'' over the reduced coproduct."""
    x = A.element(x)
    return x.map_linear(lambda a: _antipode_basis(A, a), A.kind)


def antipode_takeuchi(A: HopfInstance, x) -> Element:
    """Alternating sum over k of the k-fold product of the reduced iterated coproduct."""
    x = A.element(x)
    acc: dict = {}
    for k, comp in x.homogeneous_components().items():
        if k == 0:
            _accumulate(acc, A.unit, comp.coefficient(A.unit))
            continue
        for l in range(1, k + 1):
            sign = -1 if l % 2 else 1
            for key, c in iterated_coproduct(A, comp, l).terms.items():
                if any(lab.n_degree == 0 for lab in key):
                    continue
                prod = A.kind.basis(key[0])
                for lab in key[1:]:
                    prod = prod * A.kind.basis(lab)
                for lab, d in prod.terms.items():
                    _accumulate(acc, lab, sign * c * d)
    return A.kind._raw(acc)


def counit(A: HopfInstance, x) -> Fraction:
    return A.element(x).coefficient(A.unit)


# ---------------------------------------------------------------------------
# axiom checker


@dataclass
class AxiomResult:
    axiom: str
    checked: int = 0
    failures: int = 0
    witnesses: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, witness: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.witnesses) < 10:
                self.witnesses.append(witness())


@dataclass
class HopfReport:
    algebra: str
    max_degree: int
    results: list[AxiomResult]
    cocommutative: bool
    cocommutative_witness: str | None
    commutative: bool
    commutative_witness: str | None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "axioms": [
                {
                    "axiom": r.axiom,
                    "passed": r.passed,
                    "checked": r.checked,
                    "failures": r.failures,
                    "witnesses": r.witnesses,
                }
                for r in self.results
            ],
            "cocommutative": self.cocommutative,
            "cocommutative_witness": self.cocommutative_witness,
            "commutative": self.commutative,
            "commutative_witness": self.commutative_witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"algebra: {self.algebra}  max_degree: {self.max_degree}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"  {status} {r.axiom} ({r.checked} checked, {r.failures} failed)")
            for w in r.witnesses:
                lines.append(f"      witness: {w}")
        lines.append(f"  commutative={str(self.commutative).lower()}"
                     + (f"  witness: {self.commutative_witness}" if self.commutative_witness else ""))
        lines.append(f"  cocommutative={str(self.cocommutative).lower()}"
                     + (f"  witness: {self.cocommutative_witness}" if self.cocommutative_witness else ""))
        lines.append("result: " + ("all axioms pass" if self.passed else "FAILURES"))
        return "\n".join(lines)


def _sign(p: int) -> int:
    return -1 if p % 2 else 1


def verify_hopf(A: HopfInstance, max_degree: int) -> HopfReport:
    """Check the Hopf superalgebra and supercharacter axioms degree by degree."""
    kind = A.kind
    r_conn = AxiomResult("graded connected")
    r_grade = AxiomResult("degree/parity additivity")
    r_coassoc = AxiomResult("coassociativity")
    r_counit = AxiomResult("counit")
    r_mult = AxiomResult("coproduct multiplicative (Koszul)")
    r_anti = AxiomResult("antipode convolution")
    r_zeta = AxiomResult("supercharacter even and multiplicative")
    cocomm, cocomm_w = True, None
    comm, comm_w = True, None

    labels_by_degree = {k: list(A.basis(k)) for k in range(max_degree + 1)}
    r_conn.record(labels_by_degree[0] == [A.unit], lambda: f"degree-0 basis {labels_by_degree[0]}")
    z1 = A.zeta(A.unit)
    r_zeta.record(z1 == DualNumber(1, 0), lambda: f"zeta(1) = {z1}")

    def wit(label, lhs, rhs):
        return f"{kind.zero().render_label(label)}: {lhs} != {rhs}"

    for k in range(1, max_degree + 1):
        for a in labels_by_degree[k]:
            x = kind.basis(a)
            d = A.coproduct(a)
            ok = all(
                l1.n_degree + l2.n_degree == k and (l1.parity + l2.parity) % 2 == a.parity
                for l1, l2 in d.terms
            )
            r_grade.record(ok, lambda: f"coproduct of {kind.zero().render_label(a)} not graded")

            left = d.map_slot(0, A.coproduct)
            right = d.map_slot(1, A.coproduct)
            r_coassoc.record(
                left == right,
                lambda: f"{kind.zero().render_label(a)}: (Delta x id)Delta - (id x Delta)Delta = {left - right}",
            )

            lc = kind._raw({})
            rc = kind._raw({})
            for (a1, a2), c in d.terms.items():
                if a1 == A.unit:
                    lc = lc + kind.basis(a2).scale(c)
                if a2 == A.unit:
                    rc = rc + kind.basis(a1).scale(c)
            r_counit.record(lc == x and rc == x, lambda: wit(a, (lc, rc), x))

            s_left = kind.zero()
            s_right = kind.zero()
            for (a1, a2), c in d.terms.items():
                s_left = s_left + (_antipode_basis(A, a1) * kind.basis(a2)).scale(c)
                s_right = s_right + (kind.basis(a1) * _antipode_basis(A, a2)).scale(c)
            r_anti.record(not s_left and not s_right, lambda: wit(a, (s_left, s_right), 0))

            z = A.zeta(a)
            r_zeta.record(z.parity_set() <= {a.parity}, lambda: f"zeta({kind.zero().render_label(a)}) = {z} has wrong parity")

            if cocomm and d.twist() != d:
                cocomm = False
                cocomm_w = f"Delta({kind.zero().render_label(a)}) = {d} is not fixed by the Koszul swap"

    for k1 in range(1, max_degree + 1):
        for k2 in range(1, max_degree + 1 - k1):
            for a in labels_by_degree[k1]:
                for b in labels_by_degree[k2]:
                    ab = A.product(a, b)
                    r_grade.record(
                        all(lab.n_degree == k1 + k2 and lab.parity == (a.parity + b.parity) % 2 for lab in ab.terms),
                        lambda: f"product of {a} and {b} not graded",
                    )
                    lhs = coproduct(A, ab)
                    rhs = A.coproduct(a) * A.coproduct(b)
                    r_mult.record(lhs == rhs, lambda: f"Delta({a}*{b}) - Delta({a})Delta({b}) = {lhs - rhs}")
                    zl = zeta(A, ab)
                    zr = A.zeta(a) * A.zeta(b)
                    r_zeta.record(zl == zr, lambda: f"zeta({a}*{b}) = {zl} != {zr}")
                    if comm:
                        ba = A.product(b, a).scale(_sign(a.parity * b.parity))
                        if ab != ba:
                            comm = False
                            comm_w = f"{a}*{b} = {ab} but signed {b}*{a} = {ba}"

    return HopfReport(
        algebra=A.name,
        max_degree=max_degree,
        results=[r_conn, r_grade, r_coassoc, r_counit, r_mult, r_anti, r_zeta],
        cocommutative=cocomm,
        cocommutative_witness=cocomm_w,
        commutative=comm,
        commutative_witness=comm_w,
    )


# ---------------------------------------------------------------------------
# registered instances


def _lambda_instance() -> HopfInstance:
    from .slambda import SymSuper

    return HopfInstance("lambda", SymSuper, superpartitions_of_degree, SymSuper.basis_zeta)


def _sqsym_instance() -> HopfInstance:
    from .sqsym import QSymSuper

    return HopfInstance("sqsym", QSymSuper, dotted_compositions_of_degree, QSymSuper.basis_zeta)


LAMBDA = _lambda_instance()
SQSYM = _sqsym_instance()
