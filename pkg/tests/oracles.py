"""Independent brute-force oracles the tests pin expected values against.

Each oracle deliberately takes the slow, definition-level path (conjugate
by every element, multiply until the identity shows up, enumerate every
vertex subset) so it shares no code with the implementation it checks.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from classgraphs import (
    Group,
    Perm,
    abelian,
    alternating,
    dicyclic,
    dihedral,
    semidirect_cyclic,
    symmetric,
)
from classgraphs.graphs import ClassGraph


def order_by_iteration(p: Perm) -> int:
    """Compose p with itself until the identity appears."""
    ident = Perm.identity(p.degree)
    power = p
    k = 1
    while power != ident:
        power = power * p
        k += 1
    return k


def classes_by_all_conjugations(group: Group) -> set[frozenset[int]]:
    """Conjugacy classes as index sets, conjugating by every group element."""
    index = group.index()
    remaining = set(range(group.order))
    out = set()
    while remaining:
        i = min(remaining)
        x = group.elements[i]
        members = frozenset(
            index[(g * x * g.inverse()).images] for g in group.elements
        )
        out.add(members)
        remaining -= members
    return out


def center_by_all_pairs(group: Group) -> set[Perm]:
    return {
        x for x in group.elements if all(x * g == g * x for g in group.elements)
    }


def centralizer_size_by_count(group: Group, x: Perm) -> int:
    return sum(1 for g in group.elements if g * x == x * g)


def commutator_subgroup_by_all_pairs(group: Group) -> set[Perm]:
    """Closure of the set of all commutators under multiplication."""
    commutators = {
        a * b * a.inverse() * b.inverse()
        for a in group.elements
        for b in group.elements
    }
    closure = set(commutators)
    frontier = list(commutators)
    while frontier:
        nxt = []
        for x in frontier:
            for c in commutators:
                y = x * c
                if y not in closure:
                    closure.add(y)
                    nxt.append(y)
        frontier = nxt
    return closure


def clique_exists_by_subsets(graph: ClassGraph, n: int) -> bool:
    """Exhaustive check over all n-subsets of the vertex set."""
    vertices = range(graph.vertex_count)
    return any(
        all(graph.adjacency[i][j] for i, j in combinations(subset, 2))
        for subset in combinations(vertices, n)
    )


@lru_cache(maxsize=1)
def small_group_battery() -> tuple[tuple[str, Group], ...]:
    """Cheap groups exercised by exhaustive property tests."""
    return (
        ("C12", abelian(12)),
        ("C2xC4", abelian(2, 4)),
        ("S3", symmetric(3)),
        ("S4", symmetric(4)),
        ("D4", dihedral(4)),
        ("D5", dihedral(5)),
        ("Q8", dicyclic(2)),
        ("Dic3", dicyclic(3)),
        ("A4", alternating(4)),
        ("A5", alternating(5)),
        ("F20", semidirect_cyclic(5, 4, 2)),
        ("F21", semidirect_cyclic(7, 3, 2)),
    )
