"""Mixed-radix asymptotic bases: exact arithmetic, representation counting,
and certificate-emitting verification."""

from .core import DigitRep, DigitRangeError, DomainError, GadicSequence
from .partition import (HypothesisViolatedError, IntervalFamilies,
                        PartitionSpec, detect_interval_families, min_t)
from .basis import BasisSpec, MemberWindow, WindowTooLargeError, members_bruteforce
from .repcount import (RepCountResult, check_prefix_inequality,
                       count_reps_bruteforce, count_reps_digitdp,
                       hfold_sumset_window, mask_to_set)
from .verifier import (BasisReport, MinimalityBatch, WitnessCertificate,
                       check_lemma1, check_lemma2, construct_witness,
                       cross_check_witness, removability_scan,
                       verify_minimality, verify_theorem1, verify_theorem2,
                       verify_witness)
from .config import PRESETS, ConfigError, RunConfig, load_preset

__version__ = "0.1.0"

__all__ = [
    "BasisReport", "BasisSpec", "ConfigError", "DigitRangeError", "DigitRep",
    "DomainError", "GadicSequence", "HypothesisViolatedError",
    "IntervalFamilies", "MemberWindow", "MinimalityBatch", "PartitionSpec",
    "PRESETS", "RepCountResult", "RunConfig", "WindowTooLargeError",
    "WitnessCertificate", "check_lemma1", "check_lemma2",
    "check_prefix_inequality", "construct_witness", "count_reps_bruteforce",
    "count_reps_digitdp", "cross_check_witness", "detect_interval_families",
    "hfold_sumset_window", "load_preset", "mask_to_set", "members_bruteforce",
    "min_t", "removability_scan", "verify_minimality", "verify_theorem1",
    "verify_theorem2", "verify_witness",
]
