"""
Xi Class Functions
- xi_n = sum over m in N_l of eps_{(m n)} * 1 induced from <(m, c_l)>
- Inner products with linear and rational characters, closed form and brute force
- Properness of xi_n by character enumeration or by the circulant inequalities
"""

import logging
from functools import lru_cache
from typing import List, Optional, Tuple, Union

import numpy as np

from metabelian import EpsilonVector, GroupParams
from .abelian import (
    Dual, ElemAbelianGroup, IntClassFunction, LinearChar, RationalIrrChar, XiSource,
    all_rational_irreducibles,
)
from .errors import MixedGroups

logger = logging.getLogger(__name__)

Character = Union[LinearChar, RationalIrrChar]


@lru_cache(maxsize=None)
def class_grid(params: GroupParams, prime: int) -> np.ndarray:
    """Class index of m*n for every m in N_prime, indexed [u, v]; -1 where m = 0"""
    logs = params.field(prime).log_grid
    d = params.d
    if prime == params.p:
        grid = np.where(logs >= 0, logs % d, -1)
    else:
        # (1, m) is conjugate to (alpha^(-dlog m), 1)
        grid = np.where(logs >= 0, (-logs) % d, -1)
    grid.setflags(write=False)
    return grid


def eps_grid(params: GroupParams, eps: EpsilonVector, prime: int) -> np.ndarray:
    """eps_{(m n)^G} for every m in N_prime"""
    eps.require_d(params.d)
    grid = class_grid(params, prime)
    weights = np.array(eps.values, dtype=np.int64)[np.maximum(grid, 0)]
    return np.where(grid >= 0, weights, 0)


def xi_table(params: GroupParams, eps: EpsilonVector, prime: int) -> IntClassFunction:
    """Dense table of xi_n on N_prime x U_prime by direct coset membership"""
    ell = prime
    group = ElemAbelianGroup(ell)
    weights = eps_grid(params, eps, prime)
    values = np.zeros((ell, ell, ell), dtype=np.int64)
    ks = np.arange(ell, dtype=np.int64)
    induced_value = ell * ell
    for mu, mv in zip(*np.nonzero(weights)):
        # [m] = {(k m, c_l^k)}; the induced trivial character is |group|/l on it
        values[(ks * mu) % ell, (ks * mv) % ell, ks] += weights[mu, mv] * induced_value
    return IntClassFunction(group, values, XiSource(params, eps, prime))


def xi_value(params: GroupParams, eps: EpsilonVector, prime: int, u: int, v: int, t: int) -> int:
    """Pointwise formula for xi_n((u + v alpha, c_l^t))"""
    ell = prime
    weights = eps_grid(params, eps, prime)
    u, v, t = u % ell, v % ell, t % ell
    if t:
        t_inv = pow(t, -1, ell)
        return ell * ell * int(weights[u * t_inv % ell, v * t_inv % ell])
    if u == 0 and v == 0:
        return ell * ell * int(weights.sum())
    return 0


@lru_cache(maxsize=None)
def coset_counts(params: GroupParams, prime: int, dual: Dual) -> Tuple[int, ...]:
    """Per-class counts of m with (m, c_l) in the kernel of the character with this dual

    The kernel meets N_l x {c_l} in a coset m0 + K with K = kernel on N_l.
    Requires the N-part of the dual to be nonzero.
    """
    ell = prime
    a1, a2, a3 = (c % ell for c in dual)
    if a1 == 0 and a2 == 0:
        raise ValueError("kernel contains no element with U-part c_l")
    if a1:
        m0 = (-a3 * pow(a1, -1, ell) % ell, 0)
    else:
        m0 = (0, -a3 * pow(a2, -1, ell) % ell)
    direction = (-a2 % ell, a1)
    grid = class_grid(params, prime)
    counts = [0] * params.d
    for s in range(ell):
        cls = grid[(m0[0] + s * direction[0]) % ell, (m0[1] + s * direction[1]) % ell]
        if cls >= 0:
            counts[cls] += 1
    return tuple(counts)


def _linear_closed(source: XiSource, dual: Dual) -> int:
    params, eps, prime = source.params, source.eps, source.prime
    a1, a2, a3 = (c % prime for c in dual)
    if (a1, a2, a3) == (0, 0, 0):
        return params.centralizer_index(prime) * eps.total
    if a1 == 0 and a2 == 0:
        return 0
    return sum(c * e for c, e in zip(coset_counts(params, prime, (a1, a2, a3)), eps.values))


def _linear_brute(xi: IntClassFunction, dual: Dual) -> int:
    group = xi.group
    ell = group.ell
    sums = np.zeros(ell, dtype=np.int64)
    np.add.at(sums, group.pairing(dual).ravel(), xi.values.ravel())
    if all(c % ell == 0 for c in dual):
        total = int(sums[0])
    else:
        # sum_k S_k zeta^-k is rational exactly when S_1 = ... = S_{l-1}
        if not np.all(sums[1:] == sums[1]):
            raise ArithmeticError("class function is not rational valued")
        total = int(sums[0] - sums[1])
    if total % group.order:
        raise ArithmeticError(f"inner product {total}/{group.order} is not integral")
    return total // group.order


def _rational_brute(xi: IntClassFunction, phi: RationalIrrChar) -> int:
    group = xi.group
    total = int(np.sum(xi.values * phi.values()))
    if total % group.order:
        raise ArithmeticError(f"inner product {total}/{group.order} is not integral")
    return total // group.order


def inner_product(xi: IntClassFunction, phi: Character, method: Optional[str] = None) -> int:
    """(xi, phi); method 'closed' uses coset counts, 'brute' sums over the group"""
    if xi.group != phi.group:
        raise MixedGroups(f"class function on l={xi.group.ell}, character on l={phi.group.ell}")
    if method is None:
        method = "closed" if xi.source is not None else "brute"
    if method == "closed":
        if xi.source is None:
            raise ValueError("closed form needs a xi_n table with provenance")
        value = _linear_closed(xi.source, phi.dual)
        if isinstance(phi, RationalIrrChar) and not phi.is_trivial:
            value *= phi.degree
        return value
    if method == "brute":
        if isinstance(phi, RationalIrrChar):
            return _rational_brute(xi, phi)
        return _linear_brute(xi, phi.dual)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _coset_count_matrix(params: GroupParams, prime: int) -> np.ndarray:
    """Coset counts for every rational irreducible whose kernel meets N_l x {c_l} properly"""
    group = ElemAbelianGroup(prime)
    rows = [coset_counts(params, prime, phi.dual)
            for phi in all_rational_irreducibles(group) if phi.dual[0] or phi.dual[1]]
    matrix = np.array(rows, dtype=np.int64)
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=None)
def _kernel_indices(ell: int) -> Tuple[List[RationalIrrChar], np.ndarray]:
    """Flat [u, v, t] indices of each kernel plane, one row per nontrivial rational irreducible"""
    group = ElemAbelianGroup(ell)
    chars = [phi for phi in all_rational_irreducibles(group) if not phi.is_trivial]
    s, r = np.indices((ell, ell), dtype=np.int64)
    s, r = s.ravel(), r.ravel()
    rows = []
    for phi in chars:
        a1, a2, a3 = phi.dual
        if a1:
            b1, b2 = (-a2 % ell, 1, 0), (-a3 % ell, 0, 1)
        elif a2:
            b1, b2 = (1, 0, 0), (0, -a3 % ell, 1)
        else:
            b1, b2 = (1, 0, 0), (0, 1, 0)
        u = (s * b1[0] + r * b2[0]) % ell
        v = (s * b1[1] + r * b2[1]) % ell
        t = (s * b1[2] + r * b2[2]) % ell
        rows.append((u * ell + v) * ell + t)
    indices = np.array(rows, dtype=np.int64)
    indices.setflags(write=False)
    return chars, indices


def brute_inner_products(xi: IntClassFunction) -> np.ndarray:
    """(xi, phi) for the trivial character followed by every nontrivial rational irreducible"""
    ell = xi.group.ell
    _, indices = _kernel_indices(ell)
    flat = xi.values.ravel()
    total = int(flat.sum())
    kernel_sums = flat[indices].sum(axis=1)
    scaled = np.concatenate(([total], ell * kernel_sums - total))
    if np.any(scaled % xi.group.order):
        raise ArithmeticError("non-integral inner product")
    return scaled // xi.group.order


def xi_is_proper(params: GroupParams, eps: EpsilonVector, prime: int, method: str = "characters") -> bool:
    """True when xi_n on N_prime x U_prime is a proper character

    'characters' checks every rational irreducible through coset counts,
    'brute' builds the table and sums over each kernel,
    'circulant' evaluates the shifted r-table inequalities.
    """
    eps.require_d(params.d)
    if method == "characters":
        if params.centralizer_index(prime) * eps.total < 0:
            return False
        values = _coset_count_matrix(params, prime) @ np.array(eps.values, dtype=np.int64)
        return bool(np.all(values >= 0))
    if method == "brute":
        return bool(np.all(brute_inner_products(xi_table(params, eps, prime)) >= 0))
    if method == "circulant":
        from zassenhaus.inequalities import inequality_system

        return all(v >= 0 for v in inequality_system(params, eps, prime))
    raise ValueError(f"unknown method {method!r}")
