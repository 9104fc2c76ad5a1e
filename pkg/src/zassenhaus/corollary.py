"""
Large-Prime Bounds
- Threshold d^4 M^2 / (1 - |cos(2 pi / d)|) above which every bounded eps passes
- delta_i = r_i - p/d and the Gauss-sum identity |sum delta_i zeta_d^i|^2 = p
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from finite_fields import QuadField
from metabelian import BadD
from utils.errors import ZassenhausError
from .rtable import RTable, r_table

GAUSS_TOLERANCE = 1e-6


def _cos_gap(d: int) -> float:
    if d < 3:
        raise BadD(f"d={d} must be at least 3")
    return 1 - abs(math.cos(2 * math.pi / d))


def corollary_threshold(d: int, m: int) -> float:
    if m < 1:
        raise ZassenhausError(f"bound M={m} must be positive")
    return d ** 4 * m * m / _cos_gap(d)


def delta_bound(p: int, d: int) -> float:
    """Bound on |r_i - p/d| for primes p with d | p - 1"""
    return math.sqrt(p / _cos_gap(d))


def delta_values(rt: RTable) -> Tuple[Fraction, ...]:
    mean = Fraction(rt.prime, rt.d)
    return tuple(r - mean for r in rt.values)


def character_sum(fld: QuadField, d: int) -> complex:
    """sum over x in F_p of chi(alpha + x) with chi(alpha^k) = exp(2 pi i k / d)"""
    logs = np.array([fld.dlog(fld.element(x, 1)) for x in range(fld.p)], dtype=np.int64)
    return complex(np.exp(2j * np.pi * (logs % d) / d).sum())


@dataclass(frozen=True)
class GaussCheck:
    prime: int
    d: int
    value: float
    exact: bool
    applicable: bool

    @property
    def passes(self) -> bool:
        """Only primes with d | p - 1 are bound by the identity"""
        if not self.applicable:
            return True
        if self.exact:
            return self.value == self.prime
        return abs(self.value - self.prime) <= GAUSS_TOLERANCE


def omega_norm_squared(rt: RTable):
    """|omega|^2; exact Fraction when d = 3"""
    deltas = delta_values(rt)
    d = rt.d
    if d == 3:
        squares = sum(x * x for x in deltas)
        cross = sum(deltas[i] * deltas[j] for i in range(d) for j in range(i + 1, d))
        return squares - cross
    zeta = np.exp(2j * np.pi * np.arange(d) / d)
    omega = np.dot(np.array([float(x) for x in deltas]), zeta)
    return float(abs(omega) ** 2)


def gauss_sum_check(fld: QuadField, d: int) -> GaussCheck:
    rt = r_table(fld, d)
    value = omega_norm_squared(rt)
    exact = isinstance(value, Fraction)
    applicable = (fld.p - 1) % d == 0
    if exact and value.denominator == 1:
        value = value.numerator
    return GaussCheck(fld.p, d, float(value), exact, applicable)
