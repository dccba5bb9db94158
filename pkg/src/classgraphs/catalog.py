"""The verification catalog: one entry per classified family member.

Families (i)-(vii) cover the groups in which, for every prime p, at most
three non-central conjugacy classes have representative order divisible
by p. A counterexample suite (groups that must fail the bound) and the S4
probe (which satisfies the bound but belongs to no family) ride along so
the verifier can exercise both directions and surface disagreements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import construct
from .perm import DEFAULT_CAP, Group

#: Clause keys for the classified families plus the two auxiliary roles.
CLAUSES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "counterexample", "probe")


@dataclass
class CatalogEntry:
    """A single catalog row; the group itself is built lazily and cached."""

    id: str
    clause: str
    description: str
    spec_text: str | None
    expected_order: int | None
    builder: Callable[[int], Group] | None = None
    reason: str | None = None
    _group: Group | None = field(default=None, repr=False)

    @property
    def constructible(self) -> bool:
        return self.builder is not None

    @property
    def expected_to_satisfy(self) -> bool:
        """Whether the entry should pass the n=4 bound (probe included)."""
        return self.clause != "counterexample"

    def group(self, cap: int = DEFAULT_CAP) -> Group:
        if self.builder is None:
            raise ValueError(f"entry {self.id} is not constructible: {self.reason}")
        if self._group is None:
            self._group = self.builder(cap)
        return self._group


def _a4_model(cap: int) -> Group:
    return construct.elementary_semidirect(2, 2, [[0, 1], [1, 1]], 3, cap=cap)


def _f36_model(cap: int) -> Group:
    return construct.elementary_semidirect(3, 2, [[0, 2], [1, 0]], 4, cap=cap)


def build_catalog(cap: int = DEFAULT_CAP) -> list[CatalogEntry]:
    """All catalog entries in fixed, deterministic order.

    Every family (i)-(vii) contributes at least one entry. The family (vi)
    kernel C9 is recorded as unconstructible: the unit group mod 9 has
    order 6, so no element acts on C9 with multiplicative order 4 and the
    requested fixed-point-free complement cannot exist.
    """
    e = CatalogEntry
    entries = [
        # (i) abelian groups (sample points of the family)
        e("C1", "i", "trivial group", "C1", 1,
          lambda cap: construct.cyclic(1, cap=cap)),
        e("C2", "i", "cyclic group of order 2", "C2", 2,
          lambda cap: construct.cyclic(2, cap=cap)),
        e("C12", "i", "cyclic group of order 12", "C12", 12,
          lambda cap: construct.cyclic(12, cap=cap)),
        e("C2xC4", "i", "abelian group C2 x C4", "C2 x C4", 8,
          lambda cap: construct.abelian(2, 4, cap=cap)),
        # (ii) Frobenius, complement of order 2
        e("D3", "ii", "Frobenius group of order 6: kernel C3, complement C2", "D(3)", 6,
          lambda cap: construct.dihedral(3)),
        e("D5", "ii", "Frobenius group of order 10: kernel C5, complement C2", "D(5)", 10,
          lambda cap: construct.dihedral(5)),
        e("D7", "ii", "Frobenius group of order 14: kernel C7, complement C2", "D(7)", 14,
          lambda cap: construct.dihedral(7)),
        # (iii) Frobenius, complement of order 3
        e("V4byC3", "iii", "Frobenius group of order 12: kernel C2 x C2, complement C3",
          "ESD(2,2;0,1,1,1;3)", 12, _a4_model),
        e("C7byC3", "iii", "Frobenius group of order 21: kernel C7, complement C3",
          "SD(7,3,2)", 21, lambda cap: construct.semidirect_cyclic(7, 3, 2, cap=cap)),
        # (iv) the two order-12 non-Frobenius solvable members
        e("S3xC2", "iv", "direct product S3 x C2", "S3 x C2", 12,
          lambda cap: construct.direct_product(
              construct.symmetric(3, cap=cap), construct.cyclic(2, cap=cap), cap=cap)),
        e("Dic3", "iv", "dicyclic group of order 12 (C3 with an order-4 inverting action)",
          "Dic(3)", 12, lambda cap: construct.dicyclic(3)),
        # (v) the two nonabelian groups of order 8
        e("D4", "v", "dihedral group of order 8", "D(4)", 8,
          lambda cap: construct.dihedral(4)),
        e("Q8", "v", "quaternion group of order 8", "Dic(2)", 8,
          lambda cap: construct.dicyclic(2)),
        # (vi) Frobenius, complement of order 4
        e("C5byC4", "vi", "Frobenius group of order 20: kernel C5, complement C4",
          "SD(5,4,2)", 20, lambda cap: construct.semidirect_cyclic(5, 4, 2, cap=cap)),
        e("C9byC4", "vi", "claimed Frobenius group of order 36: kernel C9, complement C4",
          None, None, None,
          reason="no fixed-point-free order-4 action on C9 exists "
                 "(the unit group mod 9 has order 6)"),
        e("E9byC4", "vi", "Frobenius group of order 36: kernel C3 x C3, complement C4",
          "ESD(3,2;0,2,1,0;4)", 36, _f36_model),
        e("C13byC4", "vi", "Frobenius group of order 52: kernel C13, complement C4",
          "SD(13,4,5)", 52, lambda cap: construct.semidirect_cyclic(13, 4, 5, cap=cap)),
        # (vii) the nonabelian simple members
        e("L2_5", "vii", "PSL(2,5), order 60", "PSL2(5)", 60,
          lambda cap: construct.psl2(5, cap=cap)),
        e("L2_7", "vii", "PSL(2,7), order 168", "PSL2(7)", 168,
          lambda cap: construct.psl2(7, cap=cap)),
        e("L2_9", "vii", "PSL(2,9), order 360", "PSL2(9)", 360,
          lambda cap: construct.psl2(9, cap=cap)),
        e("L2_11", "vii", "PSL(2,11), order 660", "PSL2(11)", 660,
          lambda cap: construct.psl2(11, cap=cap)),
        e("L2_13", "vii", "PSL(2,13), order 1092", "PSL2(13)", 1092,
          lambda cap: construct.psl2(13, cap=cap)),
        e("A7", "vii", "alternating group on 7 points", "A7", 2520,
          lambda cap: construct.alternating(7, cap=cap)),
        e("Sz8", "vii", "Suzuki group Sz(8), order 29120", "Sz8", 29120,
          lambda cap: construct.suzuki8(cap=cap)),
        # counterexamples: each must violate the n=4 bound
        e("S5", "counterexample", "symmetric group on 5 points", "S5", 120,
          lambda cap: construct.symmetric(5, cap=cap)),
    ]
    if 20160 <= cap:
        entries.append(
            e("A8", "counterexample", "alternating group on 8 points (large simple probe)",
              "A8", 20160, lambda cap: construct.alternating(8, cap=cap))
        )
    else:
        entries.append(
            e("S6", "counterexample", "symmetric group on 6 points (large probe)",
              "S6", 720, lambda cap: construct.symmetric(6, cap=cap))
        )
    entries.extend([
        e("SL2_5", "counterexample", "SL(2,5): nontrivial center over a simple quotient",
          "SL2(5)", 120, lambda cap: construct.sl2(5, cap=cap)),
        e("C4xS3", "counterexample", "C4 x S3: abelian direct factor", "C4 x S3", 24,
          lambda cap: construct.direct_product(
              construct.cyclic(4, cap=cap), construct.symmetric(3, cap=cap), cap=cap)),
        e("S7", "counterexample", "symmetric group on 7 points", "S7", 5040,
          lambda cap: construct.symmetric(7, cap=cap)),
        # probe: satisfies the bound yet belongs to no family above
        e("S4", "probe", "symmetric group on 4 points (deliberate probe)", "S4", 24,
          lambda cap: construct.symmetric(4, cap=cap)),
    ])
    return entries


def entry_by_id(entry_id: str, cap: int = DEFAULT_CAP) -> CatalogEntry:
    for entry in build_catalog(cap):
        if entry.id == entry_id:
            return entry
    raise KeyError(f"no catalog entry {entry_id!r}")
