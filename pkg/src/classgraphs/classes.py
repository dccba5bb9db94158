"""Conjugacy classes, centers, derived subgroups, quotients and spectra.

`decompose` is the workhorse: it partitions a group into conjugacy classes
using the orbit algorithm (conjugating undiscovered elements by generators
only), and everything downstream in the verification suite reads off the
resulting `ClassDecomposition`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import NotAMember, NotASubgroup, NotNormal
from .perm import Group, Perm, generate


@dataclass(frozen=True, eq=False)
class ConjugacyClass:
    """One conjugacy class: representative, size, shared element order."""

    representative: Perm
    size: int
    element_order: int
    is_central: bool
    member_indices: frozenset[int]


@dataclass(frozen=True, eq=False)
class ClassDecomposition:
    """All conjugacy classes of a group, deterministically ordered.

    Classes are sorted by (element order, size, least member); the sizes
    partition the group order and the size-1 classes are exactly the
    center. `class_index_of[i]` is the class position of `group.elements[i]`.
    """

    group: Group
    classes: tuple[ConjugacyClass, ...]
    center_size: int
    class_index_of: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def non_central(self) -> tuple[int, ...]:
        """Positions of the non-central classes, in decomposition order."""
        return tuple(i for i, c in enumerate(self.classes) if not c.is_central)


def decompose(group: Group) -> ClassDecomposition:
    """Partition the group into conjugacy classes.

    Orbits of the conjugation action are grown by conjugating with the
    generators only, so the total work is O(|G| * #generators) group
    operations instead of O(|G|^2).
    """
    n = group.order
    index = group.index()
    gens = [p.images for p in group.generators]
    gen_invs = [p.inverse().images for p in group.generators]

    assigned = [-1] * n
    raw: list[list[int]] = []
    for start in range(n):
        if assigned[start] != -1:
            continue
        cid = len(raw)
        members = [start]
        assigned[start] = cid
        queue = deque([group.elements[start].images])
        while queue:
            x = queue.popleft()
            for g, gi in zip(gens, gen_invs):
                gx = tuple(g[i] for i in x)
                y = tuple(gx[i] for i in gi)  # g * x * g^-1
                j = index[y]
                if assigned[j] == -1:
                    assigned[j] = cid
                    members.append(j)
                    queue.append(y)
        raw.append(members)

    classes = []
    for members in raw:
        rep_idx = min(members, key=lambda i: group.elements[i].images)
        rep = group.elements[rep_idx]
        classes.append(
            ConjugacyClass(
                representative=rep,
                size=len(members),
                element_order=rep.order(),
                is_central=len(members) == 1,
                member_indices=frozenset(members),
            )
        )
    classes.sort(key=lambda c: (c.element_order, c.size, c.representative.images))

    class_index_of = [0] * n
    for pos, cls in enumerate(classes):
        for i in cls.member_indices:
            class_index_of[i] = pos
    return ClassDecomposition(
        group=group,
        classes=tuple(classes),
        center_size=sum(1 for c in classes if c.is_central),
        class_index_of=tuple(class_index_of),
    )


def centralizer_order(dec: ClassDecomposition, cls: ConjugacyClass) -> int:
    """|C_G(x)| for x in the class, via orbit-stabilizer: |G| / |x^G|."""
    if not any(c is cls for c in dec.classes):
        raise ValueError("class does not belong to this decomposition")
    return dec.group.order // cls.size


def spectrum(group: Group) -> frozenset[int]:
    """The set of element orders occurring in the group; always contains 1."""
    return frozenset(p.order() for p in group.elements)


def is_abelian(group: Group) -> bool:
    gens = group.generators
    return all(a * b == b * a for a in gens for b in gens)


def center(group: Group) -> Group:
    """The subgroup of elements commuting with everything."""
    gens = group.generators
    central = [p for p in group.elements if all(p * g == g * p for g in gens)]
    if len(central) == group.order:
        return group
    name = f"Z({group.name})" if group.name else "center"
    return generate(central, cap=group.order, name=name)


def normal_closure(group: Group, seed: Iterable[Perm]) -> Group:
    """Smallest normal subgroup of `group` containing the seed elements.

    Grows a generating set: enumerate the subgroup it generates, conjugate
    the generating set by the group's generators, and absorb any conjugate
    that escaped; repeat until stable. Conjugating the generating set
    suffices because g<K>g^-1 = <gKg^-1>.
    """
    members = group.index()
    gen_set: list[Perm] = []
    seen: set[tuple[int, ...]] = set()
    for p in seed:
        if p.images not in members:
            raise NotAMember(f"{p!r} is not in {group.name or 'group'}")
        if not p.is_identity() and p.images not in seen:
            seen.add(p.images)
            gen_set.append(p)
    if not gen_set:
        ident = group.identity
        return Group(group.degree, (ident,), (ident,), name="trivial")

    while True:
        sub = generate(gen_set, cap=group.order)
        escaped = []
        for s in gen_set:
            for g in group.generators:
                conj = g * s * g.inverse()
                if conj not in sub and conj.images not in seen:
                    seen.add(conj.images)
                    escaped.append(conj)
        if not escaped:
            return sub
        gen_set.extend(escaped)


def commutator(a: Perm, b: Perm) -> Perm:
    return a * b * a.inverse() * b.inverse()


def derived_subgroup(group: Group) -> Group:
    """The subgroup generated by all commutators.

    Computed as the normal closure of the generator-pair commutators,
    which equals the full commutator subgroup; verified directly against
    the all-pairs definition in the test suite.
    """
    seeds = [commutator(a, b) for a in group.generators for b in group.generators]
    sub = normal_closure(group, seeds)
    if sub.order == group.order:
        return group
    sub.name = f"derived({group.name})" if group.name else "derived"
    return sub


def derived_center_span(group: Group) -> Group:
    """The subgroup generated by the derived subgroup and the center."""
    derived = derived_subgroup(group)
    central = center(group)
    if derived.order == group.order or central.order == group.order:
        return group
    span = generate(
        derived.generators + central.generators,
        cap=group.order,
        name=f"M({group.name})" if group.name else "span",
    )
    return group if span.order == group.order else span


def classify_derived_center(group: Group) -> str:
    """Trichotomy on how much of the group the derived subgroup and center span.

    Returns "abelian", "proper" (the span is a proper subgroup), or "full"
    (the span is the whole group) -- the split the solvable/non-solvable
    halves of the catalog hinge on.
    """
    if is_abelian(group):
        return "abelian"
    span = derived_center_span(group)
    return "full" if span.order == group.order else "proper"


def is_subgroup(group: Group, sub: Group) -> bool:
    if sub.degree != group.degree or sub.order > group.order:
        return False
    members = group.index()
    return all(p.images in members for p in sub.elements)


def is_normal(group: Group, sub: Group) -> bool:
    """Whether `sub` is normal in `group` (conjugation check on generators)."""
    if not is_subgroup(group, sub):
        return False
    sub_members = sub.index()
    for s in sub.generators:
        for g in group.generators:
            if (g * s * g.inverse()).images not in sub_members:
                return False
    return True


def quotient_map(group: Group, sub: Group) -> tuple[Group, Callable[[Perm], Perm]]:
    """The quotient G/N on left cosets, plus the projection x -> xN.

    The quotient is realized as the permutation action of G on the left
    cosets of N; for normal N the kernel of that action is exactly N, so
    the image has order |G|/|N|. The returned callable sends each element
    of G to its image permutation, which is how order-divisibility facts
    like o(xN) | o(x) get tested.
    """
    if not is_subgroup(group, sub):
        raise NotASubgroup(
            f"{sub.name or 'subgroup'} is not a subgroup of {group.name or 'group'}"
        )
    if not is_normal(group, sub):
        raise NotNormal(f"{sub.name or 'subgroup'} is not normal in {group.name or 'group'}")

    index = group.index()
    coset_of = [-1] * group.order
    rep_elements: list[Perm] = []
    for i, p in enumerate(group.elements):
        if coset_of[i] != -1:
            continue
        cid = len(rep_elements)
        rep_elements.append(p)
        for h in sub.elements:
            coset_of[index[(p * h).images]] = cid
    count = len(rep_elements)
    assert count * sub.order == group.order

    def project(p: Perm) -> Perm:
        if p.images not in index:
            raise NotAMember(f"{p!r} is not in {group.name or 'group'}")
        return Perm(tuple(coset_of[index[(p * rep).images]] for rep in rep_elements))

    qname = f"{group.name}/{sub.name}" if group.name and sub.name else ""
    quotient_group = generate(
        [project(g) for g in group.generators], cap=count, name=qname
    )
    assert quotient_group.order == count
    return quotient_group, project


def quotient(group: Group, sub: Group) -> Group:
    """G/N as a permutation group on the left cosets of N."""
    return quotient_map(group, sub)[0]


def count_classes_meeting(dec: ClassDecomposition, indices: Iterable[int]) -> int:
    """Number of classes that intersect the given set of element indices."""
    hit: set[int] = set()
    n = dec.group.order
    for i in indices:
        if not 0 <= i < n:
            raise IndexError(f"element index {i} outside 0..{n - 1}")
        hit.add(dec.class_index_of[i])
    return len(hit)


def fingerprint(dec: ClassDecomposition) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """(order, sorted class sizes, sorted spectrum): the stand-in for isomorphism.

    Fingerprints distinguish all catalog members from one another at these
    orders; no isomorphism testing happens anywhere in the package.
    """
    sizes = tuple(sorted(c.size for c in dec.classes))
    orders = tuple(sorted({c.element_order for c in dec.classes}))
    return (dec.group.order, sizes, orders)
