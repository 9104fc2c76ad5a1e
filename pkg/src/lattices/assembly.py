"""
Semi-Local Lattice Assemblies
- One summand M([n] x Ker(phi)) per orbit representative with positive multiplicity
- Projectivity of summands restricted to G
- Character identity: the orbit sums weighted by multiplicities give back xi_n
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from sympy import isprime

from characters import ElemAbelianGroup, IntClassFunction, RationalIrrChar, normalize_dual, xi_table
from metabelian import EpsilonVector, GroupParams
from zassenhaus import act_on_dual, coset_representatives, mu_table
from .errors import BadAuxPrime, CharacterMismatch, NegativeMultiplicity, UnsupportedShape
from .subgroups import (
    SubgroupDescriptor, Vector, cross, make_subgroup, n_on_side, side_factor, u_exponent,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeSummand:
    subgroup: SubgroupDescriptor
    side: int
    aux_prime: int
    multiplicity: int
    label: str

    def __post_init__(self):
        if self.multiplicity < 1:
            raise NegativeMultiplicity(f"summand {self.label} stored with multiplicity {self.multiplicity}")

    @property
    def kernel_order(self) -> int:
        return self.side ** self.subgroup.rank(self.side)


@dataclass(frozen=True)
class LatticeAssembly:
    params: GroupParams
    eps: EpsilonVector
    side: int
    aux_prime: int
    summands: Tuple[LatticeSummand, ...] = field(default_factory=tuple)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(s.multiplicity for s in self.summands)

    @property
    def degree(self) -> int:
        """Sum of mu * |C_G(n)/N| * deg(phi), the value of xi_n at the identity"""
        index = self.params.centralizer_index(self.side)
        total = 0
        for s in self.summands:
            deg = 1 if s.subgroup.rank(self.side) == 3 else self.side - 1
            total += s.multiplicity * index * deg
        return total


def default_aux_primes(params: GroupParams, side: int) -> List[int]:
    """Primes dividing |G| other than the side prime"""
    return [ell for ell in params.order_factors if ell != side]


def _n_factor(params: GroupParams, side: int):
    """The [n] factor <(n, c_other)> of order equal to the other prime"""
    other = params.other(side)
    return params.n_generator(side), u_exponent(params, other)


def build_assembly(params: GroupParams, eps: EpsilonVector, side: int, aux_prime: int) -> LatticeAssembly:
    if not isprime(aux_prime):
        raise BadAuxPrime(f"auxiliary prime {aux_prime} is not prime")
    if aux_prime == side:
        raise BadAuxPrime(f"auxiliary prime must differ from the side prime {side}")
    mu = mu_table(params, eps, side)
    if not mu.is_nonnegative:
        raise NegativeMultiplicity(f"multiplicities {mu.entries} on the {side}-side")

    fld = params.field(side)
    n_gen = _n_factor(params, side)
    c_side = u_exponent(params, side)
    line = (n_on_side(params, side, fld.one), 0)

    shapes = [
        ("trivial", mu.trivial, side_factor(params, side)),
        ("kernel N", mu.n_kernel, [line, (n_on_side(params, side, fld.alpha), 0)]),
        ("kernel U", mu.u_kernel, [line, (n_on_side(params, side, fld.zero), c_side)]),
    ]
    for rep in coset_representatives(params, side):
        shapes.append((f"phi_{rep.i}", mu.cosets[rep.i], [line, (n_on_side(params, side, rep.point), c_side)]))

    summands = tuple(
        LatticeSummand(make_subgroup(params, [n_gen] + gens), side, aux_prime, multiplicity, label)
        for label, multiplicity, gens in shapes if multiplicity > 0
    )
    logger.debug(f"Assembly on the {side}-side: " + ", ".join(f"{s.label}^{s.multiplicity}" for s in summands))
    return LatticeAssembly(params, eps, side, aux_prime, summands)


def projectivity_check(subgroup: SubgroupDescriptor, aux_prime: int) -> bool:
    """(X intersected with G) has trivial aux_prime-part"""
    params = subgroup.params
    if aux_prime not in (params.p, params.q):
        return True
    return subgroup.rank_without_u(aux_prime) == 0


def kernel_dual(subgroup: SubgroupDescriptor, side: int) -> Vector:
    """Dual vector of the rational irreducible whose kernel is X_side"""
    basis = subgroup.basis(side)
    if len(basis) == 3:
        return (0, 0, 0)
    if len(basis) == 2:
        return normalize_dual(side, cross(side, *basis))
    raise UnsupportedShape(f"X_{side} has rank {len(basis)}")


def orbit_sum(params: GroupParams, side: int, dual: Vector) -> np.ndarray:
    """Sum of phi^g over g in C_G(n)/N, acting on N_side by alpha^(d k)"""
    group = ElemAbelianGroup(side)
    if dual == (0, 0, 0):
        return params.centralizer_index(side) * RationalIrrChar(group, dual).values()
    fld = params.field(side)
    images = Counter(
        normalize_dual(side, act_on_dual(fld, fld.alpha_pow(params.d * k), dual))
        for k in range(params.centralizer_index(side))
    )
    total = np.zeros((side,) * 3, dtype=np.int64)
    for image, count in images.items():
        total += count * RationalIrrChar(group, image).values()
    return total


def assembly_character(assembly: LatticeAssembly) -> IntClassFunction:
    params, side = assembly.params, assembly.side
    group = ElemAbelianGroup(side)
    result = IntClassFunction.zero(group)
    for s in assembly.summands:
        result.values += s.multiplicity * orbit_sum(params, side, kernel_dual(s.subgroup, side))
    return result


def verify_assembly_character(params: GroupParams, eps: EpsilonVector, assembly: LatticeAssembly,
                              max_order: Optional[int] = None) -> bool:
    side = assembly.side
    xi = xi_table(params, eps, side)
    if assembly.degree != xi.identity_value:
        raise CharacterMismatch(f"degree {assembly.degree} differs from xi_n(1) = {xi.identity_value} "
                                f"on the {side}-side")
    if max_order is not None and side ** 3 > max_order:
        logger.warning(f"⚠️ N_{side} x U_{side} has order {side ** 3}; only degrees were compared")
        return True
    diff = assembly_character(assembly).first_difference(xi)
    if diff is not None:
        u, v, t = diff
        raise CharacterMismatch(f"assembled character differs from xi_n at (({u}, {v}), c_{side}^{t})")
    return True


class SummandShape(str, Enum):
    FULL_KERNEL = "full-p'-kernel"
    PRIME_INDEX = "prime-index-kernel"


@dataclass(frozen=True)
class SummandFormula:
    shape: SummandShape
    inducing: Tuple[SubgroupDescriptor, ...]


def summand_char_formula(subgroup: SubgroupDescriptor, side: int) -> SummandFormula:
    """Closed form of the summand character as induced permutation characters"""
    rank = subgroup.rank(side)
    if rank == 3:
        return SummandFormula(SummandShape.FULL_KERNEL, (subgroup,))
    if rank == 2:
        widened = make_subgroup(subgroup.params, list(subgroup.generators) + side_factor(subgroup.params, side))
        return SummandFormula(SummandShape.PRIME_INDEX, (subgroup, widened))
    raise UnsupportedShape(f"(N_{side} x U_{side})/X_{side} is not cyclic of prime order (rank {rank})")
