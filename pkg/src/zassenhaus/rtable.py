"""
r-Tables
- r_i(p) counts the points alpha + x of the affine line K_p lying in the class alpha^i <alpha^d>
- Stored 0-indexed; index 0 is the 1-indexed r_d
- Row listing (x, Nr(alpha + x), class) for printed tables
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from finite_fields import QuadField
from metabelian import BadD
from .errors import RTableMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RTable:
    """values[i] = r_i(prime) with residues taken mod d"""

    prime: int
    d: int
    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.d:
            raise ValueError(f"r-table has {len(self.values)} entries for d={self.d}")
        if sum(self.values) != self.prime or min(self.values) < 0:
            raise ArithmeticError(f"r-table {self.values} does not partition {self.prime} points")

    def __getitem__(self, i: int) -> int:
        return self.values[i % self.d]

    def one_indexed(self) -> Tuple[int, ...]:
        """(r_1, ..., r_d)"""
        return self.values[1:] + self.values[:1]

    def shifted(self, k: int) -> Tuple[int, ...]:
        return tuple(self[k + i] for i in range(self.d))


@dataclass(frozen=True)
class RRow:
    """One x of F_p: the norm of alpha + x and its class mod d (0-indexed)"""

    x: int
    norm: int
    cls: int
    d: int
    p: int

    @property
    def signed_norm(self) -> int:
        """Norm as the representative of least absolute value"""
        return self.norm if self.norm <= self.p // 2 else self.norm - self.p

    @property
    def one_indexed_class(self) -> int:
        return self.cls if self.cls else self.d


def _check_d(fld: QuadField, d: int):
    if d < 1 or fld.order % d:
        raise BadD(f"d={d} does not divide {fld.p}^2-1")


def _dlog_classes(fld: QuadField, d: int) -> List[int]:
    return [fld.dlog(fld.element(x, 1)) % d for x in range(fld.p)]


def _norm_classes(fld: QuadField, d: int) -> List[int]:
    # Nr(alpha^k) = c0^k, so the prime-field log of the norm recovers k mod p-1
    return [fld.prime_dlog(fld.norm_form(fld.element(x, 1))) % d for x in range(fld.p)]


def r_table(fld: QuadField, d: int) -> RTable:
    """Count x in F_p by the class of dlog(alpha + x) mod d

    When d divides p - 1 the classes are recomputed from norms in F_p and the
    two counts must agree.
    """
    _check_d(fld, d)
    classes = _dlog_classes(fld, d)
    if (fld.p - 1) % d == 0:
        by_norm = _norm_classes(fld, d)
        if by_norm != classes:
            x = next(i for i, (a, b) in enumerate(zip(classes, by_norm)) if a != b)
            raise RTableMismatch(f"x={x}: dlog class {classes[x]} but norm class {by_norm[x]} over F_{fld.p}")
    counts = [0] * d
    for cls in classes:
        counts[cls] += 1
    table = RTable(fld.p, d, tuple(counts))
    logger.debug(f"r-table for p={fld.p}, d={d}: {table.one_indexed()} (1-indexed)")
    return table


def r_rows(fld: QuadField, d: int) -> List[RRow]:
    _check_d(fld, d)
    return [
        RRow(x, fld.norm_form(fld.element(x, 1)), cls, d, fld.p)
        for x, cls in enumerate(_dlog_classes(fld, d))
    ]
