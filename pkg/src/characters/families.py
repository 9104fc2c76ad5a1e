"""
Irreducible Character Families of G
- Four families: induced from N, from C_G(N_p), from C_G(N_q), and linear
- Eigenvalue inner products s(eta) on the cyclic group <(1,1)>
- Degree census and the Eichler degree bound
"""

import logging
from collections import Counter
from typing import Dict

import numpy as np

from finite_fields import QuadField
from metabelian import EpsilonVector, GroupParams

logger = logging.getLogger(__name__)

FAMILY_NAMES = {
    1: "induced from N",
    2: "induced from C_G(N_p)",
    3: "induced from C_G(N_q)",
    4: "linear",
}


def _prime_field_hits(fld: QuadField, exponents: np.ndarray) -> int:
    """Number of alpha^e in the prime field, i.e. in the kernel of a character trivial on F_p"""
    return int(np.count_nonzero(fld.power_table[exponents % fld.order, 1] == 0))


def family_inner_products(params: GroupParams) -> Dict[int, int]:
    """s(eta) = (1/pq) sum_j eta((1,1)^j) for one representative of each family

    Averaging lambda^j over j kills every nontrivial value, so s(eta) counts the
    transversal elements x with (1,1)^x in the kernel of the inducing character.
    """
    fp, fq, d = params.fp, params.fq, params.d
    rs = np.arange(params.order_a_gen, dtype=np.int64)
    ss = np.arange(params.order_b_gen, dtype=np.int64)
    # x = a^r b^s c^t moves (1,1) to (alpha^(dr+t), beta^(ds+t)); the two sides only share t
    s1 = sum(_prime_field_hits(fp, d * rs + t) * _prime_field_hits(fq, d * ss + t) for t in range(d))
    # transversal c^k of N<b> (resp. N<a>) acts on the relevant factor by alpha^k (resp. beta^k)
    s2 = _prime_field_hits(fp, np.arange(fp.order, dtype=np.int64))
    s3 = _prime_field_hits(fq, np.arange(fq.order, dtype=np.int64))
    return {1: s1, 2: s2, 3: s3, 4: 1}


def transversal_exponents(params: GroupParams, family: int) -> np.ndarray:
    """Exponents e_x mod pq with lambda((1,1)^x) = zeta_pq^e_x, one per transversal element"""
    p, q, d = params.p, params.q, params.d
    vp = params.fp.power_table[:, 1]
    vq = params.fq.power_table[:, 1]
    if family == 1:
        rs = np.arange(params.order_a_gen, dtype=np.int64)
        ss = np.arange(params.order_b_gen, dtype=np.int64)
        blocks = []
        for t in range(d):
            xs = vp[(d * rs + t) % params.fp.order]
            ys = vq[(d * ss + t) % params.fq.order]
            blocks.append(((q * xs[:, None] + p * ys[None, :]) % (p * q)).ravel())
        return np.concatenate(blocks)
    if family == 2:
        return (q * vp) % (p * q)
    if family == 3:
        return (p * vq) % (p * q)
    if family == 4:
        return np.zeros(1, dtype=np.int64)
    raise ValueError(f"unknown family {family}")


def eigenvalue_condition(params: GroupParams, eps: EpsilonVector) -> bool:
    """(chi, eta x 1_U) > 0 for every family, given sum(eps) = 1"""
    eps.require_d(params.d)
    if eps.total != 1:
        return False
    values = family_inner_products(params)
    for family, value in values.items():
        if value <= 0:
            logger.info(f"❌ Eigenvalue check fails for family {family} ({FAMILY_NAMES[family]})")
    return all(value > 0 for value in values.values())


def degree_census(params: GroupParams) -> Counter:
    """Irreducible degrees of G with multiplicities"""
    p2, q2, d = params.p ** 2 - 1, params.q ** 2 - 1, params.d
    census = Counter()
    census[1] += params.order_a
    census[p2] += q2 // d
    census[q2] += p2 // d
    census[params.order_a] += d
    square_sum = sum(deg * deg * mult for deg, mult in census.items())
    if square_sum != params.order:
        raise ArithmeticError(f"sum of squared degrees {square_sum} differs from |G| = {params.order}")
    return census


def eichler_condition(params: GroupParams) -> bool:
    """Every nonlinear irreducible degree is at least 3"""
    return min(deg for deg in degree_census(params) if deg > 1) >= 3
