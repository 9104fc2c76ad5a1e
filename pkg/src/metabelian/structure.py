"""
Structure Oracles
- Cosets of order-p subgroups of N_p under the action of A
- Lines of N_p reached by powers of a
Used by tests and the selftest to guard the facts the character formulas rely on.
"""

from typing import FrozenSet, List, Set

from finite_fields import FieldElement, QuadField
from .model import GroupParams

Coset = FrozenSet[FieldElement]


def line(fld: QuadField, k: FieldElement) -> Coset:
    """F_p * k"""
    return frozenset(fld.scale(s, k) for s in range(fld.p))


def coset(fld: QuadField, m0: FieldElement, k: FieldElement) -> Coset:
    """m0 + F_p * k"""
    return frozenset(fld.add(m0, fld.scale(s, k)) for s in range(fld.p))


def _multipliers(params: GroupParams, prime: int) -> List[FieldElement]:
    """Images of A acting on N_prime, one per A-part modulo the kernel of the action"""
    fld = params.field(prime)
    # d*r + t runs over every residue mod prime^2 - 1 as (r, t) range over a^r c^t
    return [fld.alpha_pow(e) for e in range(fld.order)]


def coset_stabilizer(params: GroupParams, prime: int, m0: FieldElement, k: FieldElement) -> List[int]:
    """Exponents e of multipliers alpha^e fixing the coset m0 + F_p k"""
    fld = params.field(prime)
    target = coset(fld, m0, k)
    fixing = []
    for e, w in enumerate(_multipliers(params, prime)):
        if frozenset(fld.mul(w, m) for m in target) == target:
            fixing.append(e)
    return fixing


def nontrivial_cosets(fld: QuadField) -> Set[Coset]:
    """All cosets m0 + L with L an order-p subgroup and m0 outside L"""
    cosets = set()
    for direction in {line(fld, x) for x in fld.elements() if not x.is_zero}:
        k = next(x for x in direction if not x.is_zero)
        for m0 in fld.elements():
            if m0 not in direction:
                cosets.add(coset(fld, m0, k))
    return cosets


def coset_orbit(params: GroupParams, prime: int, m0: FieldElement, k: FieldElement) -> Set[Coset]:
    fld = params.field(prime)
    start = coset(fld, m0, k)
    return {frozenset(fld.mul(w, m) for m in start) for w in _multipliers(params, prime)}


def lines_reached_by_a(params: GroupParams, prime: int) -> Set[Coset]:
    """Order-p subgroups F_p * alpha^(d r) met by powers of the generator acting on N_prime"""
    fld = params.field(prime)
    order = params.order_a_gen if prime == params.p else params.order_b_gen
    return {line(fld, fld.alpha_pow(params.d * r)) for r in range(order)}
