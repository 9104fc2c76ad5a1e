"""
Counterexample Verdict
- Collects every checkable hypothesis for a unit of order pq with the given partial augmentations
- Failing checks are recorded as reasons, never raised
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from characters import eichler_condition, eigenvalue_condition
from metabelian import EpsilonVector, GroupParams
from .inequalities import inequality_system, side_table
from .mu import MuTable, mu_table
from .rtable import RTable

logger = logging.getLogger(__name__)

TRIVIAL_SUPPORT_REASON = "support size 1: unit exists but is trivially rationally conjugate"


@dataclass(frozen=True)
class SideReport:
    """Everything computed for the characters of N_prime x U_prime"""

    prime: int
    r_table: RTable
    inequalities: Tuple[int, ...]
    mu: MuTable

    @property
    def passes(self) -> bool:
        return min(self.inequalities) >= 0


@dataclass(frozen=True)
class Verdict:
    params: GroupParams
    eps: EpsilonVector
    sides: Dict[int, SideReport]
    sum_is_one: bool
    support_size: int
    hypotheses: bool
    eigenvalue: bool
    eichler: bool
    reasons: List[str] = field(default_factory=list)
    config_hash: Optional[str] = None

    @property
    def unit_exists(self) -> bool:
        """The partial augmentations are realized by some unit of order pq"""
        return (self.sum_is_one and self.hypotheses and self.eigenvalue and self.eichler
                and all(side.passes for side in self.sides.values()))

    @property
    def is_counterexample(self) -> bool:
        return self.unit_exists and self.support_size >= 2


def side_report(params: GroupParams, eps: EpsilonVector, prime: int) -> SideReport:
    return SideReport(prime, side_table(params, prime), inequality_system(params, eps, prime),
                      mu_table(params, eps, prime))


def verdict(params: GroupParams, eps: EpsilonVector, config_hash: Optional[str] = None) -> Verdict:
    eps.require_d(params.d)
    sides = {prime: side_report(params, eps, prime) for prime in (params.p, params.q)}
    reasons = []

    if eps.total != 1:
        reasons.append(f"partial augmentations sum to {eps.total}, not 1")
    if not params.satisfies_hypotheses:
        reasons.append(f"d={params.d} must divide both p-1={params.p - 1} and q-1={params.q - 1}")
    for prime, side in sides.items():
        for j, value in enumerate(side.inequalities):
            if value < 0:
                reasons.append(f"inequality row j={j} on the {prime}-side is {value}")
    eigenvalue = eigenvalue_condition(params, eps)
    if not eigenvalue and eps.total == 1:
        reasons.append("eigenvalue condition fails")
    eichler = eichler_condition(params)
    if not eichler:
        reasons.append("a nonlinear irreducible degree is below 3")
    if eps.support_size < 2:
        reasons.append(TRIVIAL_SUPPORT_REASON if eps.support_size == 1 else "support size 0")

    result = Verdict(params, eps, sides, eps.total == 1, eps.support_size, params.satisfies_hypotheses,
                     eigenvalue, eichler, reasons, config_hash)
    if result.is_counterexample:
        logger.info(f"✅ {params.describe()}: eps {eps.values} gives a counterexample")
    else:
        logger.info(f"❌ {params.describe()}: {'; '.join(reasons)}")
    return result
