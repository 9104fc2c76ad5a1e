"""
Elementary Abelian Factor Groups
- N_l x U_l as F_l^3 with coordinates (u, v, t): u + v*alpha in N_l, c_l^t in U_l
- Complex linear characters by dual vectors, rational irreducibles by kernels
- Dense integer class functions
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np

from metabelian import EpsilonVector, GroupParams

Dual = Tuple[int, int, int]


@dataclass(frozen=True)
class ElemAbelianGroup:
    """N_l x U_l, an elementary abelian group of rank 3"""

    ell: int

    @property
    def order(self) -> int:
        return self.ell ** 3

    @cached_property
    def coords(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        u, v, t = np.indices((self.ell, self.ell, self.ell), dtype=np.int64)
        return u, v, t

    def pairing(self, dual: Dual) -> np.ndarray:
        """<dual, g> mod l for every g, indexed [u, v, t]"""
        u, v, t = self.coords
        a1, a2, a3 = dual
        return (a1 * u + a2 * v + a3 * t) % self.ell


def normalize_dual(ell: int, dual: Dual) -> Dual:
    """Scale so that the first nonzero coordinate is 1"""
    dual = tuple(c % ell for c in dual)
    for c in dual:
        if c:
            k = pow(c, -1, ell)
            return tuple(k * x % ell for x in dual)
    return (0, 0, 0)


@dataclass(frozen=True)
class LinearChar:
    """g -> zeta_l^<dual, g>"""

    group: ElemAbelianGroup
    dual: Dual

    def __post_init__(self):
        object.__setattr__(self, 'dual', tuple(c % self.group.ell for c in self.dual))

    @property
    def is_trivial(self) -> bool:
        return self.dual == (0, 0, 0)


@dataclass(frozen=True)
class RationalIrrChar:
    """Sum of the Galois orbit of linear characters sharing one kernel"""

    group: ElemAbelianGroup
    dual: Dual

    def __post_init__(self):
        object.__setattr__(self, 'dual', normalize_dual(self.group.ell, self.dual))

    @property
    def is_trivial(self) -> bool:
        return self.dual == (0, 0, 0)

    @property
    def degree(self) -> int:
        return 1 if self.is_trivial else self.group.ell - 1

    def linear(self) -> LinearChar:
        return LinearChar(self.group, self.dual)

    def kernel_contains(self, u: int, v: int, t: int) -> bool:
        a1, a2, a3 = self.dual
        return (a1 * u + a2 * v + a3 * t) % self.group.ell == 0

    def values(self) -> np.ndarray:
        if self.is_trivial:
            return np.ones((self.group.ell,) * 3, dtype=np.int64)
        on_kernel = self.group.pairing(self.dual) == 0
        return np.where(on_kernel, self.group.ell - 1, -1).astype(np.int64)


def all_rational_irreducibles(group: ElemAbelianGroup) -> List[RationalIrrChar]:
    ell = group.ell
    duals = [(0, 0, 0), (0, 0, 1)]
    duals += [(0, 1, c) for c in range(ell)]
    duals += [(1, b, c) for b in range(ell) for c in range(ell)]
    return [RationalIrrChar(group, dual) for dual in duals]


@dataclass(frozen=True)
class XiSource:
    """Provenance of a xi_n table: parameters, augmentations and the character prime"""

    params: GroupParams
    eps: EpsilonVector
    prime: int


@dataclass(eq=False)
class IntClassFunction:
    """Integer-valued function on N_l x U_l stored densely as [u, v, t]"""

    group: ElemAbelianGroup
    values: np.ndarray
    source: Optional[XiSource] = field(default=None)

    @classmethod
    def zero(cls, group: ElemAbelianGroup) -> 'IntClassFunction':
        return cls(group, np.zeros((group.ell,) * 3, dtype=np.int64))

    def at(self, u: int, v: int, t: int) -> int:
        ell = self.group.ell
        return int(self.values[u % ell, v % ell, t % ell])

    @property
    def identity_value(self) -> int:
        return int(self.values[0, 0, 0])

    def first_difference(self, other: 'IntClassFunction') -> Optional[Tuple[int, int, int]]:
        diff = np.argwhere(self.values != other.values)
        if len(diff) == 0:
            return None
        return tuple(int(c) for c in diff[0])
