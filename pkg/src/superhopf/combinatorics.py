"""Superpartitions, dotted compositions and the bookkeeping between them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence


class RepeatedDotted(ValueError):
    """A dotted composition with two equal dotted entries matches no superpartition."""


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts ``seq`` ascending (entries distinct)."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class SuperPartition:
    """A superpartition ``(dotted; plain)``.

    ``dotted`` is strictly decreasing with entries >= 0, ``plain`` is weakly
    decreasing with entries >= 1.
    """

    dotted: tuple[int, ...] = ()
    plain: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "dotted", tuple(int(v) for v in self.dotted))
        object.__setattr__(self, "plain", tuple(int(v) for v in self.plain))
        d, p = self.dotted, self.plain
        if any(v < 0 for v in d) or any(d[i] <= d[i + 1] for i in range(len(d) - 1)):
            raise ValueError(f"dotted parts must be strictly decreasing and >= 0: {d}")
        if any(v < 1 for v in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"plain parts must be weakly decreasing and >= 1: {p}")

    @property
    def total_degree(self) -> int:
        return sum(self.dotted) + sum(self.plain)

    @property
    def fermionic_degree(self) -> int:
        return len(self.dotted)

    @property
    def n_degree(self) -> int:
        return self.total_degree + self.fermionic_degree

    @property
    def parity(self) -> int:
        return self.fermionic_degree % 2

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.total_degree, self.fermionic_degree)

    def __len__(self) -> int:
        return len(self.dotted) + len(self.plain)

    def sort_key(self):
        return (self.n_degree, self.fermionic_degree, self.dotted, self.plain)

    def __lt__(self, other: SuperPartition) -> bool:
        return self.sort_key() < other.sort_key()

    def to_composition(self) -> DottedComposition:
        """The dotted composition ``(dotted..., plain...)`` reading this label in order."""
        return DottedComposition(
            tuple((v, True) for v in self.dotted) + tuple((v, False) for v in self.plain)
        )

    def render(self) -> str:
        """Bracket body used by the expression syntax, e.g. ``1~,0~,3,1``."""
        return ",".join([f"{v}~" for v in self.dotted] + [str(v) for v in self.plain])

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.dotted)) + ";" + ",".join(map(str, self.plain)) + ")"


@dataclass(frozen=True)
class DottedComposition:
    """A sequence of entries ``(value, dotted)``; undotted values are >= 1."""

    entries: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        entries = tuple((int(v), bool(d)) for v, d in self.entries)
        object.__setattr__(self, "entries", entries)
        for v, d in entries:
            if v < 0 or (not d and v == 0):
                raise ValueError(f"malformed dotted composition entry {(v, d)}")

    @classmethod
    def of(cls, *items) -> DottedComposition:
        """Build from ints (undotted) and strings like ``'2~'`` (dotted)."""
        entries = []
        for it in items:
            if isinstance(it, str):
                dotted = it.endswith("~")
                entries.append((int(it.rstrip("~")), dotted))
            else:
                entries.append((int(it), False))
        return cls(tuple(entries))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    @property
    def eta(self) -> tuple[int, ...]:
        return tuple(int(d) for _, d in self.entries)

    @property
    def total_degree(self) -> int:
        return sum(self.values)

    @property
    def fermionic_degree(self) -> int:
        return sum(self.eta)

    @property
    def n_degree(self) -> int:
        return self.total_degree + self.fermionic_degree

    @property
    def parity(self) -> int:
        return self.fermionic_degree % 2

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.total_degree, self.fermionic_degree)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return DottedComposition(self.entries[item])
        return self.entries[item]

    def __add__(self, other: DottedComposition) -> DottedComposition:
        return DottedComposition(self.entries + other.entries)

    def sort_key(self):
        return (
            self.n_degree,
            self.fermionic_degree,
            len(self.entries),
            tuple((int(d), v) for v, d in self.entries),
        )

    def __lt__(self, other: DottedComposition) -> bool:
        return self.sort_key() < other.sort_key()

    def render(self) -> str:
        return ",".join(f"{v}~" if d else str(v) for v, d in self.entries)

    def __str__(self) -> str:
        return "[" + self.render() + "]"


def _partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into parts <= max_part, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _strict_parts(n: int, count: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing ``count``-tuples of integers in [0, max_part] summing to n."""
    if count == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, max_part), count - 2, -1):
        for rest in _strict_parts(n - first, count - 1, first - 1):
            yield (first,) + rest


def superpartitions_of_bidegree(total: int, fermionic: int) -> list[SuperPartition]:
    out = []
    for d_sum in range(total + 1):
        for dotted in _strict_parts(d_sum, fermionic, d_sum):
            for plain in _partitions(total - d_sum):
                out.append(SuperPartition(dotted, plain))
    return sorted(out, key=SuperPartition.sort_key)


@lru_cache(maxsize=None)
def _superpartitions_of_degree(k: int) -> tuple[SuperPartition, ...]:
    out = []
    m = 0
    while m * (m + 1) // 2 <= k:
        # m dotted parts cost at least 0+1+...+(m-1) plus m for the dots
        if k - m >= 0:
            out.extend(superpartitions_of_bidegree(k - m, m))
        m += 1
    return tuple(sorted(out, key=SuperPartition.sort_key))


def superpartitions_of_degree(k: int) -> list[SuperPartition]:
    """All superpartitions with n_degree (total + fermionic) equal to ``k``."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    return list(_superpartitions_of_degree(k))


@lru_cache(maxsize=None)
def _dotted_compositions_of_degree(k: int) -> tuple[DottedComposition, ...]:
    if k == 0:
        return (DottedComposition(),)
    out = []
    for first in range(1, k + 1):
        # undotted r uses degree r, dotted s uses degree s + 1
        heads = [((first, False),), ((first - 1, True),)]
        for head in heads:
            for tail in _dotted_compositions_of_degree(k - first):
                out.append(DottedComposition(head + tail.entries))
    return tuple(sorted(out, key=DottedComposition.sort_key))


def dotted_compositions_of_degree(k: int) -> list[DottedComposition]:
    """All dotted compositions with n_degree equal to ``k``."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    return list(_dotted_compositions_of_degree(k))


def sort_dotted(alpha: DottedComposition) -> tuple[SuperPartition, int]:
    """Sort a dotted composition into a superpartition, returning the sign.

    The sign is the parity of the permutation taking the dotted entries (in
    order of appearance) to strictly decreasing order.
    """
    dotted = [v for v, d in alpha.entries if d]
    plain = [v for v, d in alpha.entries if not d]
    if len(set(dotted)) != len(dotted):
        raise RepeatedDotted(f"repeated dotted entry in {alpha}")
    sign = permutation_sign([-v for v in dotted])
    return SuperPartition(tuple(sorted(dotted, reverse=True)), tuple(sorted(plain, reverse=True))), sign


def aut_count(parts: Sequence[int]) -> int:
    """Order of the automorphism group of a partition: product of multiplicity factorials."""
    return prod(factorial(c) for c in Counter(parts).values())


def distinct_permutations(items: Sequence) -> Iterator[tuple]:
    """Distinct permutations of a multiset, in lexicographic order of first appearance."""
    counts = Counter(items)
    keys = list(dict.fromkeys(items))
    n = len(items)
    current: list = []

    def rec():
        if len(current) == n:
            yield tuple(current)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                current.append(key)
                yield from rec()
                current.pop()
                counts[key] += 1

    yield from rec()
