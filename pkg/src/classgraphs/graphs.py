"""The three graphs attached to a group, and exact clique detection.

Two graphs live on the non-central conjugacy classes: the order graph
joins classes whose representative orders share a prime factor, the size
graph joins classes whose sizes do. The prime graph lives on the primes
dividing |G|, joining p and q when an element of order pq exists. All
catalog graphs have at most ~15 vertices, so clique search is an exact
backtracking enumeration with no heuristics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import prime_factors
from .classes import ClassDecomposition, spectrum
from .perm import Group


@dataclass(frozen=True)
class ClassGraph:
    """Undirected vertex-labeled graph, adjacency as a symmetric bool matrix.

    For kind "order"/"size", vertex_keys are class positions in the source
    decomposition; for kind "prime" they are the primes themselves.
    """

    kind: str
    vertex_keys: tuple[int, ...]
    labels: tuple[str, ...]
    adjacency: tuple[tuple[bool, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_keys)

    def edges(self) -> tuple[tuple[int, int], ...]:
        n = self.vertex_count
        return tuple(
            (i, j) for i in range(n) for j in range(i + 1, n) if self.adjacency[i][j]
        )


def _class_graph(dec: ClassDecomposition, kind: str, value_of) -> ClassGraph:
    keys = dec.non_central()
    values = [value_of(dec.classes[k]) for k in keys]
    labels = tuple(
        f"C{k}:o={dec.classes[k].element_order},s={dec.classes[k].size}" for k in keys
    )
    n = len(keys)
    adjacency = tuple(
        tuple(i != j and math.gcd(values[i], values[j]) > 1 for j in range(n))
        for i in range(n)
    )
    return ClassGraph(kind=kind, vertex_keys=keys, labels=labels, adjacency=adjacency)


def order_class_graph(dec: ClassDecomposition) -> ClassGraph:
    """Non-central classes; edge when the representative orders share a prime."""
    return _class_graph(dec, "order", lambda c: c.element_order)


def size_class_graph(dec: ClassDecomposition) -> ClassGraph:
    """Non-central classes; edge when the class sizes share a prime."""
    return _class_graph(dec, "size", lambda c: c.size)


def prime_graph(group: Group) -> ClassGraph:
    """Primes dividing |G|; edge p -- q when pq is an element order."""
    primes = prime_factors(group.order)
    orders = spectrum(group)
    n = len(primes)
    adjacency = tuple(
        tuple(i != j and primes[i] * primes[j] in orders for j in range(n))
        for i in range(n)
    )
    return ClassGraph(
        kind="prime",
        vertex_keys=primes,
        labels=tuple(str(p) for p in primes),
        adjacency=adjacency,
    )


def primes_adjacent_to_two(graph: ClassGraph) -> frozenset[int]:
    """The odd primes joined to 2 in a prime graph."""
    if graph.kind != "prime":
        raise ValueError(f"expected a prime graph, got kind {graph.kind!r}")
    if 2 not in graph.vertex_keys:
        return frozenset()
    two = graph.vertex_keys.index(2)
    return frozenset(
        graph.vertex_keys[j]
        for j in range(graph.vertex_count)
        if graph.adjacency[two][j]
    )


def find_clique(graph: ClassGraph, n: int) -> tuple[int, ...] | None:
    """A clique of n vertices if one exists, else None.

    Exact backtracking over vertices in increasing order, so the returned
    witness is the lexicographically least n-clique.
    """
    if n < 1:
        raise ValueError(f"clique size must be >= 1, got {n}")
    total = graph.vertex_count
    adjacency = graph.adjacency

    def extend(clique: tuple[int, ...], start: int, need: int) -> tuple[int, ...] | None:
        if need == 0:
            return clique
        for v in range(start, total - need + 1):
            if all(adjacency[v][u] for u in clique):
                found = extend(clique + (v,), v + 1, need - 1)
                if found is not None:
                    return found
        return None

    return extend((), 0, n)


def has_clique(graph: ClassGraph, n: int) -> bool:
    return find_clique(graph, n) is not None


def max_clique(graph: ClassGraph) -> int:
    """Largest n for which an n-clique exists; 0 for the empty graph."""
    best = 0
    while best < graph.vertex_count and has_clique(graph, best + 1):
        best += 1
    return best
