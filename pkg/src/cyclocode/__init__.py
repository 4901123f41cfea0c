"""Exact arithmetic for cyclotomic cosets, BCH parameters and LCD counts
over lengths n = lambda*(q^m+1) with lambda | q-1."""

from .codes import (
    BCHSpec,
    CyclicCode,
    DistanceResult,
    bch_defining_set,
    bose_distance,
    code_from_spec,
    cyclic_code,
    dimension_closed_form,
    dual_defining_set,
    dually_bch,
    is_bch_form,
    is_lcd,
    min_distance,
    symmetric_bch_code,
)
from .cosets import (
    Coset,
    CosetPartition,
    FamilyParams,
    fold,
    fold_value,
    leader_table,
    negation_in_same_coset,
    orbit,
    partition,
    reflect,
)
from .harness import (
    Finding,
    GridSpec,
    conjecture_check,
    markdown_summary,
    verify_grid,
    write_jsonl,
)
from .lcd import LcdReport, lcd_count, pi_set, pi_size_closed_form, sample_lcd_generators
from .leaders import (
    ExtremalLeaders,
    LeaderVerdict,
    extremal_leaders,
    guaranteed_leader_range,
    is_leader_closed_form,
    m2_exceptions,
)
from .fieldpoly import (
    Field,
    Poly,
    build_extension,
    factor_xn_minus_1,
    is_self_reciprocal,
    minimal_poly,
    reciprocal,
)
from .spectrum import SizeSpectrum, count_by_size_general, possible_sizes, spectrum_closed_form

__version__ = "0.1.0"

__all__ = [
    "BCHSpec",
    "Coset",
    "CosetPartition",
    "CyclicCode",
    "DistanceResult",
    "ExtremalLeaders",
    "FamilyParams",
    "Field",
    "Finding",
    "GridSpec",
    "LcdReport",
    "LeaderVerdict",
    "Poly",
    "SizeSpectrum",
    "bch_defining_set",
    "bose_distance",
    "build_extension",
    "code_from_spec",
    "conjecture_check",
    "count_by_size_general",
    "cyclic_code",
    "dimension_closed_form",
    "dual_defining_set",
    "dually_bch",
    "extremal_leaders",
    "factor_xn_minus_1",
    "fold",
    "fold_value",
    "guaranteed_leader_range",
    "is_bch_form",
    "is_lcd",
    "is_leader_closed_form",
    "is_self_reciprocal",
    "lcd_count",
    "leader_table",
    "m2_exceptions",
    "markdown_summary",
    "min_distance",
    "minimal_poly",
    "negation_in_same_coset",
    "orbit",
    "partition",
    "pi_set",
    "pi_size_closed_form",
    "possible_sizes",
    "reciprocal",
    "reflect",
    "sample_lcd_generators",
    "spectrum_closed_form",
    "symmetric_bch_code",
    "verify_grid",
    "write_jsonl",
]
