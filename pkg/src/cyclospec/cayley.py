"""Cayley graphs of finite abelian groups Z_{n1} x ... x Z_{nm} and their Laplacians."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from math import prod

import numpy as np


class GroupParseError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    orders: tuple

    def __post_init__(self):
        orders = tuple(int(o) for o in self.orders)
        if not orders:
            raise ValueError("a group needs at least one cyclic factor")
        if any(o < 1 for o in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def cyclic(cls, n):
        return cls((n,))

    @property
    def size(self):
        return prod(self.orders)

    @property
    def identity(self):
        return (0,) * len(self.orders)

    def elements(self):
        """Group elements in lexicographic order of residue tuples."""
        return list(product(*(range(o) for o in self.orders)))

    def reduce(self, g):
        if len(g) != len(self.orders):
            raise ValueError(f"element {g} does not match group with {len(self.orders)} factors")
        return tuple(x % o for x, o in zip(g, self.orders))

    def op(self, g, h):
        return tuple((x + y) % o for x, y, o in zip(g, h, self.orders))

    def inverse(self, g):
        return tuple(-x % o for x, o in zip(g, self.orders))

    def default_generators(self):
        """Unit vector of every nontrivial factor ({1} for Z_n)."""
        gens = []
        for i, o in enumerate(self.orders):
            if o > 1:
                e = [0] * len(self.orders)
                e[i] = 1
                gens.append(tuple(e))
        return GeneratorSet(gens)

    def __str__(self):
        return "x".join(f"Z{o}" for o in self.orders)


@dataclass(frozen=True)
class GeneratorSet:
    generators: frozenset

    def __post_init__(self):
        gens = frozenset(tuple(int(x) for x in g) for g in self.generators)
        if any(not any(g) for g in gens):
            raise ValueError("the identity cannot be a generator")
        object.__setattr__(self, "generators", gens)

    def __iter__(self):
        return iter(sorted(self.generators))

    def __len__(self):
        return len(self.generators)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("graphs need at least one vertex")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def degrees(self):
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_sets(self):
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("IntMatrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_numpy(self):
        return np.array(self.entries, dtype=float).reshape(self.n, self.n)

    def is_symmetric(self):
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.n) for j in range(i))


def cayley_graph(group, gens=None):
    """Simple Cayley graph: an edge {g, g*s} for each g and each s in gens and their inverses.

    Order-two generators contribute a single edge, so Z_2 is one edge (degree 1).
    """
    if gens is None:
        gens = group.default_generators()
    reduced = set()
    for s in gens:
        s = group.reduce(s)
        if s == group.identity:
            raise ValueError("the identity cannot be a generator")
        reduced.add(s)
        reduced.add(group.inverse(s))
    if not reduced and group.size > 1:
        raise ValueError("a nontrivial group needs at least one generator")
    elements = group.elements()
    index = {g: i for i, g in enumerate(elements)}
    edges = set()
    for g in elements:
        for s in reduced:
            u, v = index[g], index[group.op(g, s)]
            edges.add((min(u, v), max(u, v)))
    return Graph(len(elements), frozenset(edges))


def laplacian_of(g):
    """Degree on the diagonal, -1 for each edge, 0 elsewhere."""
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = -1
        rows[u][u] += 1
        rows[v][v] += 1
    return IntMatrix(rows)


def complement(g):
    all_pairs = set(combinations(range(g.vertex_count), 2))
    return Graph(g.vertex_count, frozenset(all_pairs - g.edges))


def cycle_graph(n):
    return cayley_graph(GroupSpec.cyclic(n))


def path_graph(n):
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def complete_graph(n):
    return Graph(n, frozenset(combinations(range(n), 2)))


MAX_ISOMORPHISM_VERTICES = 10


def isomorphic_small(g1, g2):
    """Backtracking isomorphism test for graphs with at most 10 vertices."""
    for g in (g1, g2):
        if g.vertex_count > MAX_ISOMORPHISM_VERTICES:
            raise ValueError(
                f"isomorphism search limited to {MAX_ISOMORPHISM_VERTICES} vertices, got {g.vertex_count}"
            )
    n = g1.vertex_count
    if n != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return False
    d1, d2 = g1.degrees(), g2.degrees()
    if sorted(d1) != sorted(d2):
        return False
    adj1, adj2 = g1.adjacency_sets(), g2.adjacency_sets()
    mapping = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or d2[j] != d1[i]:
                continue
            if all((mapping[u] in adj2[j]) == (u in adj1[i]) for u in range(i)):
                mapping[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                used[j] = False
        mapping[i] = -1
        return False

    return extend(0)


_GROUP_RE = re.compile(r"^\s*(Z\d+(?:\s*[xX×]\s*Z\d+)*)\s*(?:\[(.*)\])?\s*$")


def parse_group(text):
    """Parse ``"Z6"``, ``"Z2xZ3"``, ``"Z6[1,2]"`` or ``"Z2xZ3[(1,0);(0,1)]"``.

    Returns ``(GroupSpec, GeneratorSet)``; the default generators are used when
    no bracket is given.
    """
    m = _GROUP_RE.match(text)
    if not m:
        raise GroupParseError(f"cannot parse group spec {text!r}")
    orders = tuple(int(x) for x in re.findall(r"Z(\d+)", m.group(1)))
    try:
        group = GroupSpec(orders)
    except ValueError as exc:
        raise GroupParseError(str(exc)) from None
    body = m.group(2)
    if body is None:
        return group, group.default_generators()
    body = body.strip()
    if not body:
        raise GroupParseError("empty generator list")
    if len(orders) == 1 and "(" not in body:
        items = [(int(x),) for x in _split_ints(body, ",", text)]
    else:
        items = []
        for chunk in body.split(";"):
            chunk = chunk.strip()
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise GroupParseError(f"generator {chunk!r} must be a parenthesised tuple")
            items.append(tuple(_split_ints(chunk[1:-1], ",", text)))
    for g in items:
        if len(g) != len(orders):
            raise GroupParseError(f"generator {g} has wrong arity for {group}")
        if group.reduce(g) == group.identity:
            raise GroupParseError(f"generator {g} is the identity")
    return group, GeneratorSet(items)


def _split_ints(body, sep, text):
    try:
        return [int(x) for x in body.split(sep)]
    except ValueError:
        raise GroupParseError(f"bad generator list in {text!r}") from None


def format_group(group, gens=None):
    if gens is None or set(gens) == set(group.default_generators()):
        return str(group)
    if len(group.orders) == 1:
        inner = ",".join(str(g[0]) for g in gens)
    else:
        inner = ";".join("(" + ",".join(map(str, g)) + ")" for g in gens)
    return f"{group}[{inner}]"
