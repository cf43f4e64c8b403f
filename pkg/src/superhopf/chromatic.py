"""The chromatic Hopf superalgebra of two-colored graphs.

A basis element [G] is a canonical ordered list of connected components.
Components with an odd number of white vertices anticommute, so two equal
such components give zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .combinatorics import SuperPartition, aut_count, permutation_sign
from .linear import Element, Tensor, _accumulate
from .superpoly import DualNumber

MAX_COMPONENT_VERTICES = 10


class MultiWhiteComponent(ValueError):
    """The coloring expansion is only applied when every component has at most one white vertex."""


class GraphTooLarge(ValueError):
    pass


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@dataclass(frozen=True)
class Component:
    """Connected two-colored graph in canonical labeling.

    Vertices are 0..n-1, black ones first, so the whites are n-w..n-1.
    ``bits`` is the adjacency bitstring over pairs (i, j), i < j, in lex order.
    """

    n: int
    w: int
    bits: tuple[int, ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [p for p, b in zip(_pairs(self.n), self.bits) if b]

    @property
    def whites(self) -> range:
        return range(self.n - self.w, self.n)

    def sort_key(self):
        return (self.w, self.n, self.bits)

    def render(self) -> str:
        body = ",".join(f"{i}-{j}" for i, j in self.edges)
        return f"{self.n - self.w}b{self.w}w" + (f":{body}" if body else "")


def _is_connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    if n == 0:
        return False
    adj = {i: set() for i in range(n)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v] - seen:
            seen.add(u)
            stack.append(u)
    return len(seen) == n


@lru_cache(maxsize=None)
def _canonical_component(n: int, whites: frozenset, edges: frozenset) -> Component:
    if n > MAX_COMPONENT_VERTICES:
        raise GraphTooLarge(f"component with {n} vertices exceeds {MAX_COMPONENT_VERTICES}")
    blacks = [v for v in range(n) if v not in whites]
    wlist = sorted(whites)
    pairs = _pairs(n)
    best = None
    for pb in permutations(blacks):
        for pw in permutations(wlist):
            order = pb + pw  # new label i -> old vertex order[i]
            bits = tuple(1 if frozenset((order[i], order[j])) in edges else 0 for i, j in pairs)
            if best is None or bits < best:
                best = bits
    return Component(n, len(wlist), best)


def canonical_component(n: int, whites: Iterable[int], edges: Iterable[Sequence[int]]) -> Component:
    """Canonical form of a connected two-colored graph on vertices 0..n-1."""
    edges = [tuple(sorted(e)) for e in edges]
    if not _is_connected(n, edges):
        raise ValueError("component is not connected")
    return _canonical_component(n, frozenset(whites), frozenset(frozenset(e) for e in edges))


@dataclass(frozen=True)
class Graph:
    """Basis label: canonical ordered tuple of connected components."""

    components: tuple[Component, ...] = ()

    @property
    def n_vertices(self) -> int:
        return sum(c.n for c in self.components)

    @property
    def n_white(self) -> int:
        return sum(c.w for c in self.components)

    @property
    def n_degree(self) -> int:
        return self.n_vertices

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.n_vertices - self.n_white, self.n_white)

    @property
    def parity(self) -> int:
        return self.n_white % 2

    def sort_key(self):
        return (self.n_vertices, self.n_white, tuple(c.sort_key() for c in self.components))

    def render(self) -> str:
        return "|".join(c.render() for c in self.components)

    def __str__(self) -> str:
        return "[" + self.render() + "]"

    def is_admissible(self) -> bool:
        return all(c.w <= 1 for c in self.components)

    def to_json(self) -> dict:
        """Single-graph JSON with components laid out consecutively."""
        white, edges, off = [], [], 0
        for c in self.components:
            white.extend(off + v for v in c.whites)
            edges.extend([off + i, off + j] for i, j in c.edges)
            off += c.n
        return {"vertices": off, "white": white, "edges": edges}


def canonicalize(components: Sequence[Component]) -> tuple[int, Graph]:
    """Sort components into canonical order; returns (sign, graph) with sign 0 for zero.

    The sign is the parity of the permutation restricted to the odd components.
    """
    order = sorted(range(len(components)), key=lambda i: components[i].sort_key())
    ordered = tuple(components[i] for i in order)
    odd_positions = [i for i in order if components[i].w % 2]
    sign = permutation_sign(odd_positions)
    for a, b in zip(ordered, ordered[1:]):
        if a == b and a.w % 2:
            return 0, Graph()
    return sign, Graph(ordered)


class GraphElement(Element):
    __slots__ = ()
    family = "G"
    unit_label = Graph()

    @classmethod
    def basis_product(cls, a: Graph, b: Graph) -> GraphElement:
        sign, g = canonicalize(a.components + b.components)
        return cls._raw({g: Fraction(sign)} if sign else {})

    @classmethod
    def basis_coproduct(cls, a: Graph) -> Tensor:
        return _graph_coproduct(a)

    @classmethod
    def basis_zeta(cls, a: Graph) -> DualNumber:
        return zeta_ch_label(a)

    def render_label(self, label) -> str:
        if label == self.unit_label:
            return "1"
        return "G" + str(label)


def graph_element(components: Sequence[Component]) -> GraphElement:
    """+-[G] (or 0) for components in the given order."""
    sign, g = canonicalize(list(components))
    return GraphElement._raw({g: Fraction(sign)} if sign else {})


def from_raw(n: int, whites: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()) -> GraphElement:
    """Element for a (possibly disconnected) graph on vertices 0..n-1.

    Components are ordered by ascending white count, ties broken by smallest vertex.
    """
    whites = set(whites)
    edges = [tuple(sorted(e)) for e in edges]
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"bad edge {(i, j)}")
    if any(not 0 <= w < n for w in whites):
        raise ValueError("white vertex out of range")
    parts = _components_of(n, edges)
    parts.sort(key=lambda vs: (sum(v in whites for v in vs), vs[0]))
    comps = [_induced(vs, whites, edges) for vs in parts]
    return graph_element(comps)


def _components_of(n: int, edges) -> list[list[int]]:
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in edges:
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _induced(vs: Sequence[int], whites, edges) -> Component:
    index = {v: i for i, v in enumerate(vs)}
    sub_edges = [(index[i], index[j]) for i, j in edges if i in index and j in index]
    return canonical_component(len(vs), [index[v] for v in vs if v in whites], sub_edges)


def _restrict_component(c: Component, mask: int) -> tuple[int, Graph]:
    verts = [v for v in range(c.n) if mask >> v & 1]
    whites = set(c.whites)
    edges = [(i, j) for i, j in c.edges if mask >> i & 1 and mask >> j & 1]
    parts = _components_of_subset(verts, edges)
    parts.sort(key=lambda vs: sum(v in whites for v in vs))
    comps = [_induced(vs, whites, edges) for vs in parts]
    comps.sort(key=Component.sort_key)
    return canonicalize(comps)


def _components_of_subset(verts, edges) -> list[list[int]]:
    index = {v: i for i, v in enumerate(verts)}
    local = _components_of(len(verts), [(index[i], index[j]) for i, j in edges])
    return [[verts[i] for i in part] for part in local]


def restrict(g: Graph, vertices: Iterable[int]) -> GraphElement:
    """Induced two-colored subgraph on a vertex subset of a connected graph.

    Components of the result are ordered by ascending white count (ties by
    canonical key), then canonicalized.  When two odd components share a white
    count the sign of the class depends on this tie-break.
    """
    if len(g.components) != 1:
        raise ValueError("restriction is defined on connected graphs")
    (c,) = g.components
    mask = 0
    for v in vertices:
        if not 0 <= v < c.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    sign, h = _restrict_component(c, mask)
    return GraphElement._raw({h: Fraction(sign)} if sign else {})


@lru_cache(maxsize=None)
def _connected_coproduct(c: Component) -> Tensor:
    # the symmetrized sum over ordered pairs (V1, V2) collapses to the pairs
    # whose white counts are not both odd, each with coefficient 1
    full = (1 << c.n) - 1
    wmask = sum(1 << v for v in c.whites)
    acc: dict = {}
    for mask in range(full + 1):
        w1 = bin(mask & wmask).count("1")
        w2 = c.w - w1
        if w1 % 2 and w2 % 2:
            continue
        s1, g1 = _restrict_component(c, mask)
        if not s1:
            continue
        s2, g2 = _restrict_component(c, full ^ mask)
        if not s2:
            continue
        _accumulate(acc, (g1, g2), Fraction(s1 * s2))
    return Tensor._raw(GraphElement, acc)


def connected_coproduct_literal(c: Component) -> Tensor:
    """1/2 sum over (V1, V2) of [G|V1] (x) [G|V2] + (-1)^{W1 W2} [G|V2] (x) [G|V1]."""
    full = (1 << c.n) - 1
    wmask = sum(1 << v for v in c.whites)
    acc: dict = {}
    half = Fraction(1, 2)
    for mask in range(full + 1):
        w1 = bin(mask & wmask).count("1")
        w2 = c.w - w1
        s1, g1 = _restrict_component(c, mask)
        s2, g2 = _restrict_component(c, full ^ mask)
        if not (s1 and s2):
            continue
        _accumulate(acc, (g1, g2), half * s1 * s2)
        _accumulate(acc, (g2, g1), half * s1 * s2 * (-1 if w1 * w2 % 2 else 1))
    return Tensor._raw(GraphElement, acc)


@lru_cache(maxsize=None)
def _graph_coproduct(g: Graph) -> Tensor:
    out = Tensor._raw(GraphElement, {(Graph(), Graph()): Fraction(1)})
    for c in g.components:
        out = out * _connected_coproduct(c)
    return out


def product(f: GraphElement, g: GraphElement) -> GraphElement:
    return f * g


def coproduct(f: GraphElement) -> Tensor:
    out = Tensor(GraphElement)
    for g, c in f.terms.items():
        out = out + _graph_coproduct(g).scale(c)
    return out


def zeta_ch_label(g: Graph) -> DualNumber:
    val = DualNumber(1, 0)
    for c in g.components:
        if any(c.bits) or c.w > 1:
            return DualNumber(0, 0)
        val = val * (DualNumber(0, 1) if c.w == 1 else DualNumber(1, 0))
    return val


def zeta_ch(f: GraphElement) -> DualNumber:
    out = DualNumber(0, 0)
    for g, c in f.terms.items():
        out = out + zeta_ch_label(g) * c
    return out


# ---------------------------------------------------------------------------
# basis enumeration


@lru_cache(maxsize=None)
def connected_components_of_size(n: int) -> tuple[Component, ...]:
    """All connected two-colored graphs on n vertices up to isomorphism."""
    if n == 1:
        return (Component(1, 0, ()), Component(1, 1, ()))
    found = set()
    for c in connected_components_of_size(n - 1):
        whites = set(c.whites)
        edges = c.edges
        for new_white in (False, True):
            w2 = whites | ({n - 1} if new_white else set())
            for k in range(1, n):
                for nbrs in combinations(range(n - 1), k):
                    found.add(canonical_component(n, w2, edges + [(v, n - 1) for v in nbrs]))
    return tuple(sorted(found, key=Component.sort_key))


def _multisets(sizes_left: int, min_key, pool: list[Component]):
    if sizes_left == 0:
        yield ()
        return
    for c in pool:
        if min_key is not None and c.sort_key() < min_key:
            continue
        if c.n > sizes_left:
            continue
        for rest in _multisets(sizes_left - c.n, c.sort_key(), pool):
            if rest and rest[0] == c and c.w % 2:
                continue
            yield (c,) + rest


@lru_cache(maxsize=None)
def _basis(k: int) -> tuple[Graph, ...]:
    pool = [c for n in range(1, k + 1) for c in connected_components_of_size(n)]
    pool.sort(key=Component.sort_key)
    out = {Graph(ms) for ms in _multisets(k, None, pool)}
    return tuple(sorted(out, key=Graph.sort_key))


def basis(k: int) -> list[Graph]:
    """Canonical graphs with k vertices that are nonzero in the quotient."""
    return list(_basis(k))


def admissible_basis(k: int) -> list[Graph]:
    """Basis graphs whose components each have at most one white vertex."""
    return [g for g in _basis(k) if g.is_admissible()]


# ---------------------------------------------------------------------------
# chromatic symmetric functions in superspace


def _instances():
    from .chsa import HopfInstance

    return (
        HopfInstance("graph", GraphElement, basis, zeta_ch_label),
        HopfInstance("graph-admissible", GraphElement, admissible_basis, zeta_ch_label),
    )


# the admissible graphs span a sub-Hopf superalgebra: restrictions stay admissible
CHROMATIC, CHROMATIC_ADMISSIBLE = _instances()


def psi_universal(f: GraphElement):
    """Chromatic symmetric function in superspace via the universal map to Lambda."""
    from .chsa import psi_to_lambda

    return psi_to_lambda(CHROMATIC, f)


def _layout(g: Graph):
    """Global vertex numbering: components consecutively, canonical labels inside."""
    whites, edges, off = [], [], 0
    for c in g.components:
        whites.extend(off + v for v in c.whites)
        edges.extend((off + i, off + j) for i, j in c.edges)
        off += c.n
    return off, whites, edges


def _set_partitions(n: int):
    """Restricted growth strings of length n."""
    if n == 0:
        yield ()
        return
    block = [0] * n

    def rec(i, m):
        if i == n:
            yield tuple(block)
            return
        for b in range(m + 1):
            block[i] = b
            yield from rec(i + 1, max(m, b + 1))

    yield from rec(1, 1)


def coloring_sum(g: Graph):
    """m-expansion of the sum over proper colorings f of prod theta_f(w) prod x_f(v).

    White vertices contribute theta factors in vertex order.  No admissibility check.
    """
    from .slambda import SymSuper

    n, whites, edges = _layout(g)
    wset = set(whites)
    acc: dict = {}
    for rgs in _set_partitions(n):
        nblocks = max(rgs) + 1 if n else 0
        if any(rgs[i] == rgs[j] for i, j in edges):
            continue
        white_of = [None] * nblocks
        ok = True
        for w in whites:
            b = rgs[w]
            if white_of[b] is not None:
                ok = False
                break
            white_of[b] = w
        if not ok:
            continue
        blacks = [0] * nblocks
        for v in range(n):
            if v not in wset:
                blacks[rgs[v]] += 1
        dotted_blocks = [b for b in range(nblocks) if white_of[b] is not None]
        dvals = [blacks[b] for b in dotted_blocks]
        if len(set(dvals)) != len(dvals):
            continue
        dotted_blocks.sort(key=lambda b: -blacks[b])
        color = {b: i for i, b in enumerate(dotted_blocks)}
        sign = permutation_sign([color[rgs[w]] for w in whites])
        plain = sorted((blacks[b] for b in range(nblocks) if white_of[b] is None), reverse=True)
        lam = SuperPartition(tuple(blacks[b] for b in dotted_blocks), tuple(plain))
        _accumulate(acc, lam, Fraction(sign * aut_count(plain)))
    return SymSuper(acc)


def psi_coloring(f: GraphElement):
    """Chromatic symmetric function via proper colorings (at most one white per component)."""
    from .slambda import SymSuper

    out = SymSuper.zero()
    for g, c in f.terms.items():
        if not g.is_admissible():
            raise MultiWhiteComponent(f"{g} has a component with more than one white vertex")
        out = out + coloring_sum(g).scale(c)
    return out


# ---------------------------------------------------------------------------
# named graphs and JSON input


def complete_one_white(n: int) -> GraphElement:
    """[K_{n+1,1}]: the complete graph on n+1 vertices with one white vertex."""
    return from_raw(n + 1, [n], [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)])


def complete_black(n: int) -> GraphElement:
    return from_raw(n, [], [(i, j) for i in range(n) for j in range(i + 1, n)])


def white_center_star(leaves: int) -> GraphElement:
    """A white vertex joined to ``leaves`` black vertices."""
    return from_raw(leaves + 1, [0], [(0, i) for i in range(1, leaves + 1)])


def path(colors: str) -> GraphElement:
    """Path graph from a color string, e.g. ``'wwb'`` for white-white-black."""
    n = len(colors)
    return from_raw(n, [i for i, ch in enumerate(colors) if ch == "w"], [(i, i + 1) for i in range(n - 1)])


def _one_graph(obj: dict) -> GraphElement:
    try:
        n = int(obj["vertices"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError("graph JSON needs an integer 'vertices' field") from exc
    return from_raw(n, obj.get("white", []), obj.get("edges", []))


def from_json(data) -> GraphElement:
    """Graph input: one graph object, or a list of graphs multiplied in the given order."""
    if isinstance(data, str):
        data = json.loads(data)
    if isinstance(data, list):
        out = GraphElement.one()
        for obj in data:
            out = out * _one_graph(obj)
        return out
    if isinstance(data, dict):
        return _one_graph(data)
    raise ValueError("graph JSON must be an object or a list of objects")
