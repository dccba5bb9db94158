"""Permutations of {0..n-1} and full enumeration of the groups they generate.

Everything downstream (class structure, graphs, the verification suite)
works with `Perm` and `Group` values built here. Groups are enumerated
completely: a breadth-first closure over the generators, capped so a bad
generating set cannot run away. The largest group this package builds is
Sz(8) with 29,120 elements on 65 points, so full enumeration is cheap.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DegreeMismatch, GroupTooLarge

#: Safety limit for closure enumeration; far above the largest catalog group.
DEFAULT_CAP = 1_000_000


class Perm:
    """A bijection on {0..degree-1}, stored as its tuple of images.

    Composition applies the right factor first: ``(a * b)[i] == a[b[i]]``.
    Every constructor and test in this package assumes that convention.
    Instances are immutable, hashable and compare by image tuple.
    """

    __slots__ = ("images",)

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]) -> None:
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {imgs!r}")
        self.images = imgs

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Perm":
        """Wrap an already-validated image tuple (internal fast path)."""
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build a permutation from disjoint cycles, e.g. ``[(0, 1), (2, 3, 4)]``."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} outside 0..{degree - 1}")
                if pt in seen:
                    raise ValueError(f"point {pt} appears in two cycles")
                seen.add(pt)
            for i, pt in enumerate(cycle):
                images[pt] = cycle[(i + 1) % len(cycle)]
        return cls._raw(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        a, b = self.images, other.images
        if len(a) != len(b):
            raise DegreeMismatch(f"degree {len(a)} vs {len(b)}")
        return Perm._raw(tuple(a[i] for i in b))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img] = i
        return Perm._raw(tuple(inv))

    def __invert__(self) -> "Perm":
        return self.inverse()

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Perm.identity(self.degree)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(i == img for i, img in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, ascending."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        """Least k >= 1 with self**k equal to the identity (lcm of cycle lengths)."""
        out = 1
        for cyc in self.cycles():
            out = math.lcm(out, len(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Perm[{self.degree}] {self.cycle_string()}"


class Group:
    """A fully enumerated permutation group.

    `elements` is the complete, deduplicated element list; for groups built
    by `generate` it is in breadth-first discovery order starting from the
    identity, which makes every downstream computation deterministic.
    Instances are immutable after construction and safe to share.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Perm],
        elements: Sequence[Perm],
        name: str = "",
        info: Mapping[str, object] | None = None,
    ) -> None:
        if not generators:
            raise ValueError("generator list must be non-empty")
        for p in generators:
            if p.degree != degree:
                raise DegreeMismatch(f"generator degree {p.degree} != {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.name = name
        self.info: dict[str, object] = dict(info or {})
        self._index: dict[tuple[int, ...], int] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def index(self) -> dict[tuple[int, ...], int]:
        """Image-tuple -> position in `elements`; built once, then cached."""
        if self._index is None:
            self._index = {p.images: i for i, p in enumerate(self.elements)}
        return self._index

    def index_of(self, p: Perm) -> int:
        try:
            return self.index()[p.images]
        except KeyError:
            raise KeyError(f"{p!r} is not an element of {self.name or 'group'}") from None

    def __contains__(self, p: object) -> bool:
        return isinstance(p, Perm) and p.images in self.index()

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<Group {label}: order {self.order}, degree {self.degree}>"


def generate(
    generators: Sequence[Perm],
    cap: int = DEFAULT_CAP,
    name: str = "",
    info: Mapping[str, object] | None = None,
) -> Group:
    """Enumerate the group the generators produce, by breadth-first closure.

    Discovery starts at the identity and multiplies by generators on the
    left, so the element ordering is a deterministic function of the
    generator list. Raises GroupTooLarge once more than `cap` elements
    appear.
    """
    if not generators:
        raise ValueError("generator list must be non-empty")
    if cap <= 0:
        raise ValueError(f"cap must be positive, got {cap}")
    degree = generators[0].degree
    for p in generators:
        if p.degree != degree:
            raise DegreeMismatch(f"generator degree {p.degree} != {degree}")
    gen_images = [p.images for p in generators]

    ident = tuple(range(degree))
    seen = {ident}
    elements = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gen_images:
            y = tuple(g[i] for i in x)
            if y not in seen:
                if len(elements) >= cap:
                    raise GroupTooLarge(cap)
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return Group(
        degree,
        generators,
        [Perm._raw(t) for t in elements],
        name=name,
        info=info,
    )
