"""Finitely supported exact-rational linear combinations and their tensor powers."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, ClassVar, Iterable, Mapping


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _accumulate(acc: dict, key, c: Fraction) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class Element:
    """Linear combination of basis labels with Fraction coefficients.

    Subclasses set ``family`` (the rendering prefix), ``unit_label`` and
    implement ``basis_product``.  Labels must provide ``n_degree``, ``parity``,
    ``sort_key()`` and ``render()``.
    """

    __slots__ = ("_terms",)
    family: ClassVar[str] = "?"
    unit_label: ClassVar[object] = None

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for label, c in items:
                c = as_fraction(c)
                if c:
                    _accumulate(acc, label, c)
        self._terms = acc

    @classmethod
    def _raw(cls, acc: dict):
        obj = cls.__new__(cls)
        obj._terms = acc
        return obj

    @classmethod
    def basis(cls, label):
        return cls._raw({label: Fraction(1)})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls.basis(cls.unit_label)

    @classmethod
    def basis_product(cls, a, b) -> Element:
        raise NotImplementedError

    # mapping-like access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, label) -> Fraction:
        return self._terms.get(label, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(label for label, _ in self.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.one() * other
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    # vector space
    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.one() * other
        if type(other) is type(self):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(acc, k, c)
        return self._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Element:
        c = as_fraction(c)
        if not c:
            return self.zero()
        return self._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        acc: dict = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                for k, c in type(self).basis_product(a, b)._terms.items():
                    _accumulate(acc, k, ca * cb * c)
        return self._raw(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        result = self.one()
        for _ in range(n):
            result = result * self
        return result

    def map_linear(self, f: Callable, target=None):
        """Extend ``f`` (label -> element) linearly."""
        out = None
        for label, c in self._terms.items():
            img = f(label).scale(c)
            out = img if out is None else out + img
        if out is None:
            return (target or type(self)).zero()
        return out

    # grading
    def homogeneous_components(self) -> dict[int, Element]:
        comps: dict[int, dict] = {}
        for k, c in self._terms.items():
            comps.setdefault(k.n_degree, {})[k] = c
        return {d: self._raw(t) for d, t in sorted(comps.items())}

    def component(self, k: int) -> Element:
        return self._raw({lab: c for lab, c in self._terms.items() if lab.n_degree == k})

    def is_homogeneous(self) -> bool:
        return len({lab.n_degree for lab in self._terms}) <= 1

    def parities(self) -> set[int]:
        return {lab.parity for lab in self._terms}

    def counit(self) -> Fraction:
        return self.coefficient(self.unit_label)

    # rendering
    def render_label(self, label) -> str:
        if label == self.unit_label:
            return "1"
        return f"{self.family}[{label.render()}]"

    def __str__(self) -> str:
        return render_terms(self.items(), self.render_label)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def to_json(self) -> dict:
        return {
            "basis": self.family,
            "terms": [
                {"index": label.render(), "coeff": format_coeff(c)} for label, c in self.items()
            ],
        }


def render_terms(items, render_label: Callable) -> str:
    parts = []
    for label, c in items:
        word = render_label(label)
        mag = abs(c)
        if word == "1":
            body = format_coeff(mag)
        elif mag == 1:
            body = word
        else:
            body = f"{format_coeff(mag)}*{word}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


class Tensor:
    """Element of a tensor power ``A^{(x) l}``; keys are tuples of basis labels.

    Multiplication follows the Koszul rule
    ``(a1 (x) .. (x) al)(b1 (x) .. (x) bl) = (-1)^{sum_{i>j} |ai||bj|} a1b1 (x) .. (x) albl``.
    """

    __slots__ = ("kind", "_terms")

    def __init__(self, kind: type[Element], terms: Mapping | Iterable | None = None):
        self.kind = kind
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                c = as_fraction(c)
                if c:
                    _accumulate(acc, tuple(key), c)
        self._terms = acc

    @classmethod
    def _raw(cls, kind, acc):
        obj = cls.__new__(cls)
        obj.kind = kind
        obj._terms = acc
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: tuple(x.sort_key() for x in kv[0]))

    def coefficient(self, key) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: Tensor) -> Tensor:
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(acc, k, c)
        return self._raw(self.kind, acc)

    def __neg__(self):
        return self._raw(self.kind, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Tensor) -> Tensor:
        return self + (-other)

    def scale(self, c) -> Tensor:
        c = as_fraction(c)
        return self._raw(self.kind, {k: v * c for k, v in self._terms.items() if v * c})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        acc: dict = {}
        product = self.kind.basis_product
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                sign = 0
                for i in range(len(ka)):
                    if ka[i].parity:
                        for j in range(i):
                            sign += kb[j].parity
                coeff = ca * cb * (-1 if sign % 2 else 1)
                # expand the slot-wise products
                partial = {(): coeff}
                for a, b in zip(ka, kb):
                    slot = product(a, b)._terms
                    nxt: dict = {}
                    for key, c in partial.items():
                        for lab, d in slot.items():
                            _accumulate(nxt, key + (lab,), c * d)
                    partial = nxt
                for key, c in partial.items():
                    _accumulate(acc, key, c)
        return self._raw(self.kind, acc)

    __rmul__ = scale

    def twist(self) -> Tensor:
        """Koszul-signed swap of a 2-fold tensor: a (x) b -> (-1)^{|a||b|} b (x) a."""
        acc: dict = {}
        for (a, b), c in self._terms.items():
            _accumulate(acc, (b, a), -c if a.parity and b.parity else c)
        return self._raw(self.kind, acc)

    def map_slot(self, slot: int, f: Callable) -> Tensor:
        """Apply an even linear map ``f`` (label -> Element or Tensor) in one slot."""
        acc: dict = {}
        for key, c in self._terms.items():
            img = f(key[slot])
            head, tail = key[:slot], key[slot + 1:]
            if isinstance(img, Tensor):
                for k2, d in img._terms.items():
                    _accumulate(acc, head + k2 + tail, c * d)
            else:
                for lab, d in img._terms.items():
                    _accumulate(acc, head + (lab,) + tail, c * d)
        return self._raw(self.kind, acc)

    def render(self, render_label: Callable | None = None) -> str:
        zero = self.kind.zero()
        render_label = render_label or zero.render_label

        def word(key):
            return " (x) ".join(render_label(x) for x in key)

        parts = []
        for key, c in self.items():
            w = word(key)
            mag = abs(c)
            body = w if mag == 1 else f"{format_coeff(mag)}*{w}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Tensor({self})"

    def to_json(self) -> dict:
        return {
            "basis": self.kind.family,
            "arity": len(next(iter(self._terms))) if self._terms else None,
            "terms": [
                {"index": [x.render() for x in key], "coeff": format_coeff(c)}
                for key, c in self.items()
            ],
        }


def tensor(*elements: Element) -> Tensor:
    """Tensor product of elements (no sign: the factors are placed in order)."""
    kind = type(elements[0])
    partial = {(): Fraction(1)}
    for el in elements:
        nxt: dict = {}
        for key, c in partial.items():
            for lab, d in el._terms.items():
                _accumulate(nxt, key + (lab,), c * d)
        partial = nxt
    return Tensor._raw(kind, partial)
