"""One-coincidence frequency-hopping sequence sets over a prime p.

Construction of the dispersed-element sequence family from prime
permutation sequences, Hamming-correlation analysis and brute-force
verification of its structural properties, design filters (minimum
adjacent distance, bad-frequency exclusion), a slot-synchronous FH-CDMA
collision simulator, and deterministic CSV/JSON table output.
"""

from ._version import __version__
from .analysis import (
    CorrelationProfile,
    CheckResult,
    OneCoincidenceResult,
    VerificationReport,
    WorstPair,
    correlation_profile,
    hamming_cross_correlation,
    verify_lemmas,
    verify_one_coincidence,
)
from .designer import (
    DesignResult,
    DesignSpec,
    design,
    filter_by_bad_frequencies,
    filter_by_min_distance,
)
from .kernels import BACKEND
from .modp import Residue, add_mod, inv_mod, is_prime, mul_mod, sub_mod, validate_prime
from .sequences import (
    HmcSequence,
    PrimeSequence,
    SequenceSet,
    hmc_sequence,
    hmc_set,
    min_adjacent_distance,
    prime_sequence,
)
from .simulate import (
    HitReport,
    PairHits,
    ScenarioError,
    UserAssignment,
    load_scenario,
    simulate_period,
    sweep_delays,
)
from .tables import (
    FilteredSetDocument,
    HitsDocument,
    ProfileDocument,
    ReportDocument,
    SequenceRow,
    SetDocument,
    TableDocument,
    filtered_set_document,
    hit_report_document,
    hmc_set_document,
    parse,
    parse_many,
    prime_set_document,
    profile_document,
    report_document,
    serialize,
    serialize_many,
)

__all__ = [
    "BACKEND",
    "CheckResult",
    "CorrelationProfile",
    "DesignResult",
    "DesignSpec",
    "FilteredSetDocument",
    "HitReport",
    "HitsDocument",
    "HmcSequence",
    "OneCoincidenceResult",
    "PairHits",
    "PrimeSequence",
    "ProfileDocument",
    "ReportDocument",
    "Residue",
    "ScenarioError",
    "SequenceRow",
    "SequenceSet",
    "SetDocument",
    "TableDocument",
    "UserAssignment",
    "VerificationReport",
    "WorstPair",
    "__version__",
    "add_mod",
    "correlation_profile",
    "design",
    "filter_by_bad_frequencies",
    "filter_by_min_distance",
    "filtered_set_document",
    "hamming_cross_correlation",
    "hit_report_document",
    "hmc_sequence",
    "hmc_set",
    "hmc_set_document",
    "inv_mod",
    "is_prime",
    "load_scenario",
    "min_adjacent_distance",
    "mul_mod",
    "parse",
    "parse_many",
    "prime_sequence",
    "prime_set_document",
    "profile_document",
    "report_document",
    "serialize",
    "serialize_many",
    "simulate_period",
    "sub_mod",
    "sweep_delays",
    "validate_prime",
    "verify_lemmas",
    "verify_one_coincidence",
]
