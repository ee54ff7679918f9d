"""Length bounds, constructions and coset analysis for binary linear codes."""

from .bounds import (
    BoundKind,
    BoundQuery,
    BoundResult,
    PackingInequalityEvaluation,
    coset_bound,
    hamming_bound,
    n_single_scan,
    nl_single_formula,
    packing_inequality,
    sphere_volume,
    step_positions,
)
from .construct import ConstructionSpec, SyndromeTable, build_check_matrix, syndrome_decode
from .cosets import CosetRecord, CosetReport, enumerate_cosets, verify_lemma, verify_theorem_counts
from .errors import (
    BudgetExceededError,
    CapExceededError,
    DistanceTooSmallError,
    DomainError,
    InfeasibleError,
    LinboundError,
)
from .gf2 import BinaryMatrix, LinearCode, Word, distance, min_distance, null_space_enumeration, rank, weight
from .search import SearchOutcome, SearchQuery, SearchStatus, exists_code, nl_search

__version__ = "0.1.0"
