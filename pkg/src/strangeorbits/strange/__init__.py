"""Strange-pair checks, named complementary subalgebras, searches and classification."""

from .classify import (NOT_STRANGE, STRANGE, UNKNOWN, ClassificationVerdict, Numerology,
                       SearchConfig, classify_orbit, numerology, rebuild_witness, summary,
                       survey, verify_verdict)
from .pairs import (FlagSpec, PairReport, ab_invariants, check_pair, flag_stabilizer,
                    flag_type_dim, intersection_dim, is_complement)
from .search import SearchHit, conjugate_search, hook_candidate, hook_search, random_conjugate_search
from .sheets import SheetReport, is_regular_semisimple, sheet_check, slice_point
from .witnesses import (Witness, fig1_witness, flag2_witness, flag3_witness, power_nilpotent,
                        solvable_witness, witness_fig1, witness_flag_three_part,
                        witness_flag_two_part, witness_solvable_spherical)

__all__ = [
    "STRANGE", "NOT_STRANGE", "UNKNOWN", "ClassificationVerdict", "Numerology", "SearchConfig",
    "classify_orbit", "numerology", "rebuild_witness", "summary", "survey", "verify_verdict",
    "FlagSpec", "PairReport", "ab_invariants", "check_pair", "flag_stabilizer", "flag_type_dim",
    "intersection_dim", "is_complement", "SearchHit", "conjugate_search", "hook_candidate",
    "hook_search", "random_conjugate_search", "SheetReport", "is_regular_semisimple",
    "sheet_check", "slice_point", "Witness", "fig1_witness", "flag2_witness", "flag3_witness",
    "power_nilpotent", "solvable_witness", "witness_fig1", "witness_flag_three_part",
    "witness_flag_two_part", "witness_solvable_spherical",
]
