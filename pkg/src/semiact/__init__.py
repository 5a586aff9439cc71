"""Finite semigroups, right acts and their right congruences.

Brute-force congruence computations sit next to closed-form characterizations
of subdirectly irreducible, irreducible and uniform instances (completely
0-simple semigroups, acts over rectangular bands) so the two can be compared.
"""
from .acts import RightAct, analyze, cyclic_subact, regular_act, validate_act
from .closedform import (
    classify_act_rect_band,
    monocyclic_closed_form,
    predict_completely_0_simple,
    predict_completely_simple,
    two_zero_bound_check,
)
from .congruence import (
    Congruence,
    all_congruences_bruteforce,
    closure,
    intersect,
    is_large,
    monocyclic,
    rees_congruence,
    summarize,
    two_sided_check,
)
from .enumeration import EnumerationBounds, build_atlas, enumerate_acts, enumerate_rees
from .groups import (
    FiniteGroup,
    catalog_group,
    is_cocyclic,
    nontrivial_subgroups_pairwise_intersect,
    subgroups,
)
from .rees import ZERO, ReesMatrixSpec, make_spec, rees_matrix
from .semigroup import FiniteSemigroup, classify_idempotents, rectangular_band, validate_semigroup

__version__ = "0.1.0"
