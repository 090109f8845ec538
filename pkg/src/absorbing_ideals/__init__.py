"""Decision procedures and checkable proof traces for absorbing ideals
in finite commutative rings.

The public surface: ring construction (`build_ring`, descriptor types,
`parse_ring_spec`), ideal arithmetic (`Ideal`, `radical`, `ideal_power`,
`colon`, `enumerate_ideals`), the absorbing property (`is_n_absorbing`,
`omega`, the consequence checks), the derivation machinery
(`build_shift_matrix`, `find_zero_diagonal`, `prove_radical_power_zero`,
`verify_trace`), and the built-in corpus utilities.
"""

from .absorbing import (
    AbsorbingReport,
    AbsorbingWitness,
    ChainReport,
    ColonsReport,
    ElementPowerReport,
    OmegaResult,
    RadicalPowerReport,
    ReductionReport,
    check_colon_chain,
    check_colons_two_absorbing,
    check_element_power,
    check_quotient_reduction,
    check_radical_power,
    is_n_absorbing,
    omega,
)
from .corpus import (
    BUILTIN_CORPUS,
    IdealAudit,
    RingAudit,
    audit_ideal,
    battery_report,
    run_battery,
    run_ring_audit,
    trace_survey,
    zero_diagonal_survey,
)
from .errors import (
    HypothesisNotSatisfiedError,
    ImproperIdealError,
    InvariantViolationError,
    LemmaPreconditionError,
    MixedRingError,
    ParseError,
    ResourceLimitError,
    RingBuildError,
    TraceInconsistencyError,
)
from .ideals import (
    Ideal,
    colon,
    enumerate_ideals,
    ideal_power,
    ideal_product,
    proper_ideals,
    radical,
    sum_ideal,
)
from .machinery import (
    TRACE_SCHEMA,
    ProjectiveZeroResult,
    ProofTrace,
    ShiftMatrix,
    SquareMatrix,
    VerificationResult,
    ZeroDiagonalResult,
    build_shift_matrix,
    eval_monomial,
    find_zero_diagonal,
    is_projectively_zero,
    is_upper_triangular,
    monomial_image_ideal,
    prove_radical_power_zero,
    verify_trace,
)
from .monomials import (
    grlex_compare,
    grlex_key,
    induction_multidegrees,
    lex_compare,
    monomial_text,
    monomials_with_multidegree,
    multidegree,
    total_degree,
)
from .rings import (
    DEFAULT_MAX_RING_SIZE,
    PolyQuot,
    Product,
    Quotient,
    Ring,
    RingElement,
    ZMod,
    build_ring,
    quotient_ring,
)
from .ringspec import parse_ideal_text, parse_ring_spec, render_ring_spec

__version__ = "0.1.0"

__all__ = [
    "AbsorbingReport",
    "AbsorbingWitness",
    "BUILTIN_CORPUS",
    "ChainReport",
    "ColonsReport",
    "DEFAULT_MAX_RING_SIZE",
    "ElementPowerReport",
    "HypothesisNotSatisfiedError",
    "Ideal",
    "IdealAudit",
    "ImproperIdealError",
    "InvariantViolationError",
    "LemmaPreconditionError",
    "MixedRingError",
    "OmegaResult",
    "ParseError",
    "PolyQuot",
    "Product",
    "ProjectiveZeroResult",
    "ProofTrace",
    "Quotient",
    "RadicalPowerReport",
    "ReductionReport",
    "ResourceLimitError",
    "Ring",
    "RingAudit",
    "RingBuildError",
    "RingElement",
    "ShiftMatrix",
    "SquareMatrix",
    "TRACE_SCHEMA",
    "TraceInconsistencyError",
    "VerificationResult",
    "ZMod",
    "ZeroDiagonalResult",
    "audit_ideal",
    "battery_report",
    "build_ring",
    "build_shift_matrix",
    "check_colon_chain",
    "check_colons_two_absorbing",
    "check_element_power",
    "check_quotient_reduction",
    "check_radical_power",
    "colon",
    "enumerate_ideals",
    "eval_monomial",
    "find_zero_diagonal",
    "grlex_compare",
    "grlex_key",
    "ideal_power",
    "ideal_product",
    "induction_multidegrees",
    "is_n_absorbing",
    "is_projectively_zero",
    "is_upper_triangular",
    "lex_compare",
    "monomial_image_ideal",
    "monomial_text",
    "monomials_with_multidegree",
    "multidegree",
    "omega",
    "parse_ideal_text",
    "parse_ring_spec",
    "proper_ideals",
    "prove_radical_power_zero",
    "quotient_ring",
    "radical",
    "render_ring_spec",
    "run_battery",
    "run_ring_audit",
    "sum_ideal",
    "total_degree",
    "trace_survey",
    "verify_trace",
    "zero_diagonal_survey",
]
