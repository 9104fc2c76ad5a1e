"""
Circulant Inequalities
- Row j is sum_i r_{j+i}(p) * eps_(alpha^i, 1)
- The q-side reads eps in the (1, beta^i) ordering
"""

from functools import lru_cache
from typing import Tuple

from metabelian import DimensionMismatch, EpsilonVector, GroupParams
from .rtable import RTable, r_table


def inequality_values(rt: RTable, eps: EpsilonVector, beta_ordering: bool = False) -> Tuple[int, ...]:
    if eps.d != rt.d:
        raise DimensionMismatch(f"r-table has d={rt.d}, epsilon has {eps.d} entries")
    e = eps.beta_ordering() if beta_ordering else eps.values
    d = rt.d
    return tuple(sum(rt[j + k] * e[k] for k in range(d)) for j in range(d))


@lru_cache(maxsize=None)
def side_table(params: GroupParams, prime: int) -> RTable:
    return r_table(params.field(prime), params.d)


def inequality_system(params: GroupParams, eps: EpsilonVector, prime: int) -> Tuple[int, ...]:
    """Inequality rows for characters of N_prime x U_prime"""
    eps.require_d(params.d)
    return inequality_values(side_table(params, prime), eps, beta_ordering=(prime == params.q))
