"""Counterexample pipeline: r-tables, inequalities, multiplicities, verdicts and prime search"""

from metabelian import EpsilonVector
from .corollary import (
    GaussCheck, character_sum, corollary_threshold, delta_bound, delta_values, gauss_sum_check,
    omega_norm_squared,
)
from .errors import BadRecord, MergeConflict, RTableMismatch
from .inequalities import inequality_system, inequality_values, side_table
from .mu import (
    CosetRepresentative, MuTable, act_on_dual, coset_representatives, mu_by_coset_counts, mu_table,
    stabilizer_order,
)
from .rtable import RRow, RTable, r_rows, r_table
from .search import (
    EffectiveCheck, PairRecord, PrimeCandidate, RecheckResult, SearchResult, candidate_primes, merge_records,
    parse_record, recheck_record, search_prime_pairs,
)
from .verdict import TRIVIAL_SUPPORT_REASON, SideReport, Verdict, side_report, verdict

__all__ = [
    'EpsilonVector', 'RTable', 'RRow', 'r_table', 'r_rows',
    'inequality_values', 'inequality_system', 'side_table',
    'MuTable', 'CosetRepresentative', 'coset_representatives', 'mu_table', 'mu_by_coset_counts',
    'stabilizer_order', 'act_on_dual',
    'Verdict', 'SideReport', 'verdict', 'side_report', 'TRIVIAL_SUPPORT_REASON',
    'corollary_threshold', 'delta_bound', 'delta_values', 'character_sum', 'gauss_sum_check',
    'omega_norm_squared', 'GaussCheck',
    'PrimeCandidate', 'PairRecord', 'EffectiveCheck', 'SearchResult', 'candidate_primes',
    'search_prime_pairs', 'merge_records', 'parse_record', 'recheck_record', 'RecheckResult',
    'RTableMismatch', 'MergeConflict', 'BadRecord',
]
