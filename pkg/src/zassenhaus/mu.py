"""
Multiplicity Tables
- mu(phi, n) for the 3 + d orbit representatives of rational irreducibles of N_l x U_l
- Offset formula through l(g) and an independent recount through coset counts
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from characters import coset_counts, normalize_dual
from finite_fields import FieldElement, QuadField
from metabelian import EpsilonVector, GroupParams
from .inequalities import side_table

logger = logging.getLogger(__name__)

Dual = Tuple[int, int, int]


@dataclass(frozen=True)
class CosetRepresentative:
    """Kernel meeting N_l x {c_l} in alpha^(i(l+1)+1) + F_l"""

    i: int
    point: FieldElement
    offset: int

    @property
    def dual(self) -> Dual:
        return (0, 1, -self.point.v)


@dataclass(frozen=True)
class MuTable:
    prime: int
    trivial: int
    n_kernel: int
    u_kernel: int
    cosets: Tuple[int, ...]

    @property
    def entries(self) -> Tuple[int, ...]:
        return (self.trivial, self.n_kernel, self.u_kernel) + self.cosets

    @property
    def is_nonnegative(self) -> bool:
        return min(self.entries) >= 0


def coset_representatives(params: GroupParams, prime: int) -> List[CosetRepresentative]:
    """Points alpha^(i(l+1)+1) = u*alpha + v with l(g) = dlog(u^-1) mod d"""
    fld = params.field(prime)
    reps = []
    for i in range(params.d):
        point = fld.alpha_pow(i * (prime + 1) + 1)
        lam = fld.inv(fld.element(point.v))
        reps.append(CosetRepresentative(i, point, fld.dlog(lam) % params.d))
    return reps


def mu_table(params: GroupParams, eps: EpsilonVector, prime: int) -> MuTable:
    """Multiplicities for characters of N_prime x U_prime

    The trivial and U-kernel entries equal sum(eps), which is 1 for unit candidates.
    """
    eps.require_d(params.d)
    rt = side_table(params, prime)
    e = eps.beta_ordering() if prime == params.q else eps.values
    cosets = tuple(
        sum(rt[rep.offset + k] * e[k] for k in range(params.d))
        for rep in coset_representatives(params, prime)
    )
    return MuTable(prime, eps.total, 0, eps.total, cosets)


def act_on_dual(fld: QuadField, w: FieldElement, dual: Dual) -> Dual:
    """Dual of phi(w * -) for multiplication by w = w0 + w1*alpha on N_l"""
    a1, a2, a3 = dual
    w0, w1 = w.u, w.v
    return (a1 * w0 + a2 * w1, -a1 * fld.c0 * w1 + a2 * (w0 + fld.c1 * w1), a3)


def stabilizer_order(params: GroupParams, prime: int, dual: Dual) -> int:
    """Number of elements of C_G(n)/N fixing the kernel of the character with this dual"""
    fld = params.field(prime)
    target = normalize_dual(prime, dual)
    return sum(
        1 for k in range(params.centralizer_index(prime))
        if normalize_dual(prime, act_on_dual(fld, fld.alpha_pow(params.d * k), dual)) == target
    )


def _orbit_multiplicity(params: GroupParams, eps: EpsilonVector, prime: int, dual: Dual) -> int:
    weighted = sum(c * e for c, e in zip(coset_counts(params, prime, normalize_dual(prime, dual)), eps.values))
    stab = stabilizer_order(params, prime, dual)
    if weighted % stab:
        raise ArithmeticError(f"coset count {weighted} is not divisible by stabilizer order {stab}")
    return weighted // stab


def mu_by_coset_counts(params: GroupParams, eps: EpsilonVector, prime: int) -> MuTable:
    """(xi_n, phi) / ((l-1) |Stab(phi)|) for each orbit representative"""
    eps.require_d(params.d)
    u_kernel = _orbit_multiplicity(params, eps, prime, (0, 1, 0))
    cosets = tuple(
        _orbit_multiplicity(params, eps, prime, rep.dual)
        for rep in coset_representatives(params, prime)
    )
    return MuTable(prime, eps.total, 0, u_kernel, cosets)
