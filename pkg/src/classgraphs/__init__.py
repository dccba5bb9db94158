"""Finite-group toolkit: class structure, class graphs, catalog verification.

Builds small groups as fully enumerated permutation groups, computes their
conjugacy-class structure, attaches the order/size/prime graphs, decides
clique existence exactly, and machine-verifies a catalog of the groups in
which no four non-central conjugacy classes share a prime divisor of
their representative orders.
"""

__version__ = "0.1.0"

from .catalog import CatalogEntry, build_catalog, entry_by_id
from .classes import (
    ClassDecomposition,
    ConjugacyClass,
    center,
    centralizer_order,
    classify_derived_center,
    count_classes_meeting,
    decompose,
    derived_center_span,
    derived_subgroup,
    fingerprint,
    is_abelian,
    is_normal,
    is_subgroup,
    normal_closure,
    quotient,
    quotient_map,
    spectrum,
)
from .construct import (
    abelian,
    alternating,
    cyclic,
    cyclic_action_fixed_point_free,
    dicyclic,
    dihedral,
    direct_product,
    elementary_semidirect,
    matrix_action_fixed_point_free,
    psl2,
    semidirect_cyclic,
    sl2,
    suzuki8,
    symmetric,
)
from .gf import FieldElement, FiniteField, field_make, tits_power
from .graphs import (
    ClassGraph,
    find_clique,
    has_clique,
    max_clique,
    order_class_graph,
    prime_graph,
    primes_adjacent_to_two,
    size_class_graph,
)
from .perm import DEFAULT_CAP, Group, Perm, generate
from .verify import (
    EquivalenceReport,
    InheritanceReport,
    PrimeBoundReport,
    PrimeWitness,
    SuiteResult,
    VerificationReport,
    check_prime_bound,
    check_psl2_power_classes,
    check_suzuki_class_profile,
    crosscheck_clique_equivalence,
    expected_discrepancies,
    quotient_inheritance_check,
    run_full_suite,
    verify_catalog,
)

__all__ = [
    "__version__",
    "CatalogEntry",
    "ClassDecomposition",
    "ClassGraph",
    "ConjugacyClass",
    "DEFAULT_CAP",
    "EquivalenceReport",
    "FieldElement",
    "FiniteField",
    "Group",
    "InheritanceReport",
    "Perm",
    "PrimeBoundReport",
    "PrimeWitness",
    "SuiteResult",
    "VerificationReport",
    "abelian",
    "alternating",
    "build_catalog",
    "center",
    "centralizer_order",
    "check_prime_bound",
    "check_psl2_power_classes",
    "check_suzuki_class_profile",
    "classify_derived_center",
    "count_classes_meeting",
    "crosscheck_clique_equivalence",
    "cyclic",
    "cyclic_action_fixed_point_free",
    "decompose",
    "derived_center_span",
    "derived_subgroup",
    "dicyclic",
    "dihedral",
    "direct_product",
    "elementary_semidirect",
    "entry_by_id",
    "expected_discrepancies",
    "field_make",
    "find_clique",
    "fingerprint",
    "generate",
    "has_clique",
    "is_abelian",
    "is_normal",
    "is_subgroup",
    "matrix_action_fixed_point_free",
    "max_clique",
    "normal_closure",
    "order_class_graph",
    "prime_graph",
    "primes_adjacent_to_two",
    "psl2",
    "quotient",
    "quotient_inheritance_check",
    "quotient_map",
    "run_full_suite",
    "semidirect_cyclic",
    "size_class_graph",
    "sl2",
    "spectrum",
    "suzuki8",
    "symmetric",
    "tits_power",
    "verify_catalog",
]
