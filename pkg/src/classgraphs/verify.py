"""The verification suite over the catalog.

Checks, for each catalog entry, whether at most n-1 non-central classes
share any prime divisor of their representative orders ("the bound"),
cross-checks that answer against clique detection in the order class
graph, exercises quotient inheritance, and verifies the hard-coded class
profiles of Sz(8) and the PSL(2,q) power-class counts. Findings that
disagree with the catalog's expectations are surfaced as discrepancies,
never silently reconciled.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arith import prime_factors
from .catalog import CatalogEntry, build_catalog
from .classes import (
    ClassDecomposition,
    center,
    classify_derived_center,
    decompose,
    derived_subgroup,
    fingerprint,
    quotient_map,
)
from .construct import psl2, suzuki8
from .errors import Unsupported
from .graphs import has_clique, max_clique, order_class_graph, prime_graph, size_class_graph
from .perm import DEFAULT_CAP, Group

#: Range of bounds cross-checked against clique detection for every entry.
CROSSCHECK_RANGE = range(2, 7)


# ---------------------------------------------------------------------------
# the bound itself


@dataclass(frozen=True)
class PrimeWitness:
    """A violating prime together with all classes it divides."""

    prime: int
    class_indices: tuple[int, ...]


@dataclass(frozen=True)
class PrimeBoundReport:
    """Outcome of the bound check at a given n."""

    n: int
    satisfied: bool
    per_prime_counts: dict[int, int]
    witness: PrimeWitness | None


def check_prime_bound(dec: ClassDecomposition, n: int) -> PrimeBoundReport:
    """For every prime p: do at most n-1 non-central classes have order divisible by p?

    Counts, per prime, the non-central classes whose representative order
    the prime divides. Satisfied when every count is <= n - 1; otherwise
    the witness carries the smallest violating prime and all its classes.
    """
    if n < 2:
        raise ValueError(f"bound must be >= 2, got {n}")
    counts: dict[int, int] = {}
    for ci in dec.non_central():
        for p in prime_factors(dec.classes[ci].element_order):
            counts[p] = counts.get(p, 0) + 1
    counts = dict(sorted(counts.items()))
    witness = None
    for p, count in counts.items():
        if count >= n:
            indices = tuple(
                ci
                for ci in dec.non_central()
                if dec.classes[ci].element_order % p == 0
            )
            witness = PrimeWitness(prime=p, class_indices=indices)
            break
    return PrimeBoundReport(
        n=n, satisfied=witness is None, per_prime_counts=counts, witness=witness
    )


# ---------------------------------------------------------------------------
# cross-check against clique detection


@dataclass(frozen=True)
class EquivalenceReport:
    consistent: bool
    mismatches: tuple[str, ...]


def crosscheck_clique_equivalence(
    dec: ClassDecomposition, ns: Iterable[int] = CROSSCHECK_RANGE
) -> EquivalenceReport:
    """Assert: the bound holds at n exactly when the order graph has no n-clique.

    Runs both sides independently for each n and reports any mismatch with
    diagnostics; a mismatch is a reported failure, not an exception.
    """
    graph = order_class_graph(dec)
    mismatches = []
    for n in ns:
        if not 2 <= n <= 8:
            raise ValueError(f"cross-check bound must be in 2..8, got {n}")
        bound_ok = check_prime_bound(dec, n).satisfied
        clique_found = has_clique(graph, n)
        if bound_ok != (not clique_found):
            mismatches.append(
                f"n={n}: bound {'satisfied' if bound_ok else 'violated'} "
                f"but {n}-clique {'present' if clique_found else 'absent'}"
            )
    return EquivalenceReport(consistent=not mismatches, mismatches=tuple(mismatches))


# ---------------------------------------------------------------------------
# quotient inheritance


@dataclass(frozen=True)
class InheritanceReport:
    """Bound outcomes for a group and one of its quotients.

    Records whether satisfaction passed down to the quotient; only the
    forward implication is ever asserted, the converse is false in general
    (SL(2,5) violates the bound while its central quotient satisfies it).
    """

    group_report: PrimeBoundReport
    quotient_report: PrimeBoundReport
    quotient_order: int
    implication_holds: bool


def quotient_inheritance_check(group: Group, sub: Group, n: int) -> InheritanceReport:
    """Check that the bound, when satisfied by G, is inherited by G/N."""
    quotient_group, _ = quotient_map(group, sub)
    group_report = check_prime_bound(decompose(group), n)
    quotient_report = check_prime_bound(decompose(quotient_group), n)
    return InheritanceReport(
        group_report=group_report,
        quotient_report=quotient_report,
        quotient_order=quotient_group.order,
        implication_holds=(not group_report.satisfied) or quotient_report.satisfied,
    )


# ---------------------------------------------------------------------------
# per-entry verification


@dataclass(frozen=True)
class GraphSummary:
    vertices: int
    edges: int
    max_clique: int


@dataclass(frozen=True)
class EntryResult:
    """Everything the verifier computed for one catalog entry (plain data)."""

    entry_id: str
    clause: str
    constructible: bool
    reason: str | None = None
    error: str | None = None
    order: int | None = None
    center_size: int | None = None
    class_count: int | None = None
    bound_report: PrimeBoundReport | None = None
    equivalence: EquivalenceReport | None = None
    span_class: str | None = None
    graph_summaries: dict[str, GraphSummary] = field(default_factory=dict)
    group_fingerprint: tuple[int, tuple[int, ...], tuple[int, ...]] | None = None
    order_matches_expected: bool | None = None
    runtime_ms: int = 0


def verify_entry(entry: CatalogEntry, n: int = 4, cap: int = DEFAULT_CAP) -> EntryResult:
    """Run the full per-entry analysis; construction failures are recorded."""
    if not entry.constructible:
        return EntryResult(
            entry_id=entry.id, clause=entry.clause, constructible=False,
            reason=entry.reason,
        )
    start = time.perf_counter()
    try:
        group = entry.group(cap)
        dec = decompose(group)
        summaries = {}
        for kind, graph in (
            ("order", order_class_graph(dec)),
            ("size", size_class_graph(dec)),
            ("prime", prime_graph(group)),
        ):
            summaries[kind] = GraphSummary(
                vertices=graph.vertex_count,
                edges=len(graph.edges()),
                max_clique=max_clique(graph),
            )
        result = EntryResult(
            entry_id=entry.id,
            clause=entry.clause,
            constructible=True,
            order=group.order,
            center_size=dec.center_size,
            class_count=dec.class_count,
            bound_report=check_prime_bound(dec, n),
            equivalence=crosscheck_clique_equivalence(dec, CROSSCHECK_RANGE),
            span_class=classify_derived_center(group),
            graph_summaries=summaries,
            group_fingerprint=fingerprint(dec),
            order_matches_expected=(
                entry.expected_order is None or group.order == entry.expected_order
            ),
            runtime_ms=int((time.perf_counter() - start) * 1000),
        )
        return result
    except Exception as exc:  # construction failures must not kill the run
        return EntryResult(
            entry_id=entry.id, clause=entry.clause, constructible=True,
            error=f"{type(exc).__name__}: {exc}",
            runtime_ms=int((time.perf_counter() - start) * 1000),
        )


def _entry_task(args: tuple[str, int, int]) -> EntryResult:
    entry_id, n, cap = args
    for entry in build_catalog(cap):
        if entry.id == entry_id:
            return verify_entry(entry, n, cap)
    raise KeyError(entry_id)


@dataclass(frozen=True)
class VerificationReport:
    """Deterministic result of verifying the whole catalog at a given n."""

    n: int
    entries: tuple[EntryResult, ...]
    discrepancies: tuple[str, ...]
    passed: bool


def _probe_discrepancy(entry_id: str) -> str:
    return (
        f"{entry_id}: probe satisfies the bound but its fingerprint "
        "matches no family entry"
    )


def _unconstructible_discrepancy(entry: CatalogEntry) -> str:
    return f"{entry.id}: unconstructible: {entry.reason}"


def expected_discrepancies(cap: int = DEFAULT_CAP) -> tuple[str, ...]:
    """The two findings a clean verification run is expected to surface."""
    out = []
    for entry in build_catalog(cap):
        if not entry.constructible:
            out.append(_unconstructible_discrepancy(entry))
        elif entry.clause == "probe":
            out.append(_probe_discrepancy(entry.id))
    return tuple(out)


def verify_catalog(
    n: int = 4,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    entries: Sequence[CatalogEntry] | None = None,
) -> VerificationReport:
    """Verify every catalog entry and collect discrepancies.

    Family entries are expected to satisfy the bound, counterexamples to
    violate it, and the probe to satisfy it while matching no family
    fingerprint. Whatever actually happens is reported; unexpected
    outcomes are appended to the discrepancy list and fail the run. The
    report is a deterministic function of (n, cap) regardless of `jobs`.
    """
    if entries is None:
        entries = build_catalog(cap)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_entry_task, [(e.id, n, cap) for e in entries]))
    else:
        results = [verify_entry(e, n, cap) for e in entries]

    family_fingerprints = {
        r.group_fingerprint
        for r in results
        if r.clause in ("i", "ii", "iii", "iv", "v", "vi", "vii")
        and r.group_fingerprint is not None
    }

    discrepancies: list[str] = []
    passed = True
    for entry, result in zip(entries, results):
        if not result.constructible:
            discrepancies.append(_unconstructible_discrepancy(entry))
            continue
        if result.error is not None:
            discrepancies.append(f"{entry.id}: construction failed: {result.error}")
            passed = False
            continue
        if not result.order_matches_expected:
            discrepancies.append(
                f"{entry.id}: order {result.order} differs from expected "
                f"{entry.expected_order}"
            )
            passed = False
        if result.equivalence is not None and not result.equivalence.consistent:
            for text in result.equivalence.mismatches:
                discrepancies.append(f"{entry.id}: bound/clique mismatch: {text}")
            passed = False
        assert result.bound_report is not None
        satisfied = result.bound_report.satisfied
        if entry.clause == "probe":
            if satisfied and result.group_fingerprint not in family_fingerprints:
                discrepancies.append(_probe_discrepancy(entry.id))
            elif not satisfied:
                discrepancies.append(f"{entry.id}: probe violated the bound")
                passed = False
        elif satisfied != entry.expected_to_satisfy:
            expected = "satisfy" if entry.expected_to_satisfy else "violate"
            witness = result.bound_report.witness
            detail = f" (prime {witness.prime})" if witness else ""
            discrepancies.append(
                f"{entry.id}: expected to {expected} the bound but did not{detail}"
            )
            passed = False
    return VerificationReport(
        n=n, entries=tuple(results), discrepancies=tuple(discrepancies), passed=passed
    )


# ---------------------------------------------------------------------------
# hard-coded structure checks


def suzuki_class_counts(dec: ClassDecomposition) -> dict[int, int]:
    """Number of conjugacy classes per element order."""
    counts: dict[int, int] = {}
    for cls in dec.classes:
        counts[cls.element_order] = counts.get(cls.element_order, 0) + 1
    return dict(sorted(counts.items()))


def check_suzuki_class_profile(dec: ClassDecomposition | None = None) -> bool:
    """Sz(8): one class of involutions, two of order 4, three each of orders 7 and 13.

    Also checks the general Sz(q) count of q/2 - 1 classes of elements of
    order q - 1 at q = 8, and the group order 29120.
    """
    if dec is None:
        dec = decompose(suzuki8())
    q = 8
    counts = suzuki_class_counts(dec)
    return (
        dec.group.order == q * q * (q * q + 1) * (q - 1)
        and counts.get(2, 0) == 1
        and counts.get(4, 0) == 2
        and counts.get(7, 0) == 3
        and counts.get(13, 0) == 3
        and counts.get(q - 1, 0) == q // 2 - 1
    )


#: q -> (order of the probed element, number of distinct power classes).
PSL2_POWER_CASES = {
    4: (3, 1),     # q even: order q-1, (q-2)/2 classes
    5: (3, 1),     # q = 1 mod 4: order (q+1)/2, (q-1)/4 classes
    7: (3, 1),     # q = 3 mod 4: order (q-1)/2, (q-3)/4 classes
    9: (5, 2),
    11: (5, 2),
    13: (7, 3),
}


def check_psl2_power_classes(q: int, dec: ClassDecomposition | None = None) -> bool:
    """In PSL(2,q): the first powers of a distinguished torus element lie in
    pairwise distinct classes, with the exact count the theory predicts.

    For even q the element has order q - 1 and (q - 2)/2 powers are
    checked; for q = 1 mod 4 order (q + 1)/2 with (q - 1)/4 powers; for
    q = 3 mod 4 order (q - 1)/2 with (q - 3)/4 powers.
    """
    if q not in PSL2_POWER_CASES:
        raise Unsupported(f"power-class check supports q in {sorted(PSL2_POWER_CASES)}")
    if q % 2 == 0:
        target, count = q - 1, (q - 2) // 2
    elif q % 4 == 1:
        target, count = (q + 1) // 2, (q - 1) // 4
    else:
        target, count = (q - 1) // 2, (q - 3) // 4
    assert (target, count) == PSL2_POWER_CASES[q]

    if dec is None:
        dec = decompose(psl2(q))
    group = dec.group
    element = next((p for p in group.elements if p.order() == target), None)
    if element is None:
        return False
    seen_classes = set()
    power = group.identity
    for _ in range(count):
        power = power * element
        seen_classes.add(dec.class_index_of[group.index_of(power)])
    return len(seen_classes) == count


# ---------------------------------------------------------------------------
# the full suite


@dataclass(frozen=True)
class InheritancePair:
    entry_id: str
    subgroup: str  # "center" or "derived"
    result: InheritanceReport


@dataclass(frozen=True)
class SuiteResult:
    """Everything `verify` runs: catalog report plus the structural checks."""

    report: VerificationReport
    suzuki_profile_ok: bool
    suzuki_counts: dict[int, int]
    power_checks: dict[int, bool]
    inheritance: tuple[InheritancePair, ...]
    passed: bool
    discrepancies_expected: bool


def run_full_suite(n: int = 4, cap: int = DEFAULT_CAP, jobs: int = 1) -> SuiteResult:
    """Catalog verification plus profile, power-class and inheritance checks.

    Inheritance is exercised over every (entry, center) and (entry,
    derived subgroup) pair where the subgroup is a nontrivial proper
    normal subgroup; quotients by the trivial subgroup reproduce the group
    itself and are covered by unit tests instead.
    """
    entries = build_catalog(cap)
    report = verify_catalog(n=n, cap=cap, jobs=jobs, entries=entries)
    by_id = {e.id: e for e in entries}
    results_by_id = {r.entry_id: r for r in report.entries}

    try:
        sz_dec = decompose(by_id["Sz8"].group(cap))
        suzuki_ok = check_suzuki_class_profile(sz_dec)
        counts = suzuki_class_counts(sz_dec)
    except Exception:
        suzuki_ok = False
        counts = {}

    power_checks = {q: check_psl2_power_classes(q) for q in sorted(PSL2_POWER_CASES)}

    inheritance: list[InheritancePair] = []
    for entry in entries:
        result = results_by_id[entry.id]
        if not result.constructible or result.error is not None:
            continue
        group = entry.group(cap)
        central = center(group)
        if 1 < central.order < group.order:
            inheritance.append(
                InheritancePair(entry.id, "center",
                                quotient_inheritance_check(group, central, n))
            )
        if result.span_class == "abelian":
            continue  # derived subgroup is trivial
        if result.span_class == "full" and result.center_size == 1:
            continue  # derived subgroup is the whole group
        derived = derived_subgroup(group)
        if 1 < derived.order < group.order:
            inheritance.append(
                InheritancePair(entry.id, "derived",
                                quotient_inheritance_check(group, derived, n))
            )

    passed = (
        report.passed
        and suzuki_ok
        and all(power_checks.values())
        and all(pair.result.implication_holds for pair in inheritance)
    )
    return SuiteResult(
        report=report,
        suzuki_profile_ok=suzuki_ok,
        suzuki_counts=counts,
        power_checks=power_checks,
        inheritance=tuple(inheritance),
        passed=passed,
        discrepancies_expected=report.discrepancies == expected_discrepancies(cap),
    )
