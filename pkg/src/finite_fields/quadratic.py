"""
Quadratic Extension Fields
- Exact arithmetic in F_p and F_{p^2} = F_p[X]/(X^2 - c1*X + c0)
- Norms, Frobenius conjugation and primitivity checks
- Table-driven discrete logarithms to the base alpha
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, Tuple

import numpy as np
from sympy import factorint, isprime

from utils.errors import ZassenhausError
from .errors import DivisionByZero, DlogOfZero, FieldTooLarge, NotPrime, NotPrimitive, ReduciblePolynomial

logger = logging.getLogger(__name__)

Coords = Tuple[int, int]

DEFAULT_MAX_FIELD_ORDER = 10_000_000
_max_field_order = DEFAULT_MAX_FIELD_ORDER


def set_max_field_order(limit: int):
    """Largest p^2 - 1 for which power and log tables may be built"""
    global _max_field_order
    if limit < 1:
        raise ZassenhausError(f"field order limit must be positive, got {limit}")
    _max_field_order = limit


def _check_size(p: int):
    if p * p - 1 > _max_field_order:
        raise FieldTooLarge(f"F_{p}^2 has {p * p - 1} units, above the limit {_max_field_order}")


@dataclass(frozen=True, order=True)
class FieldElement:
    """Element u + v*alpha written over the basis {1, alpha}"""

    u: int
    v: int = 0

    @property
    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def __str__(self) -> str:
        if self.v == 0:
            return str(self.u)
        if self.u == 0:
            return f"{self.v}a"
        return f"{self.u}+{self.v}a"


def _mul_coords(p: int, c1: int, c0: int, a: Coords, b: Coords) -> Coords:
    u1, v1 = a
    u2, v2 = b
    vv = v1 * v2
    return (u1 * u2 - c0 * vv) % p, (u1 * v2 + u2 * v1 + c1 * vv) % p


def _pow_coords(p: int, c1: int, c0: int, base: Coords, k: int) -> Coords:
    result = (1, 0)
    while k:
        if k & 1:
            result = _mul_coords(p, c1, c0, result, base)
        base = _mul_coords(p, c1, c0, base, base)
        k >>= 1
    return result


def has_root(p: int, c1: int, c0: int) -> bool:
    """True when X^2 - c1*X + c0 has a root in F_p"""
    return any((r * r - c1 * r + c0) % p == 0 for r in range(p))


def generator_is_primitive(p: int, c1: int, c0: int) -> bool:
    """True when the class of X has multiplicative order exactly p^2 - 1"""
    order = p * p - 1
    for ell in factorint(order):
        if _pow_coords(p, c1, c0, (0, 1), order // ell) == (1, 0):
            return False
    return True


@dataclass(frozen=True)
class QuadField:
    """F_{p^2} with a primitive generator alpha satisfying alpha^2 = c1*alpha - c0"""

    p: int
    c1: int
    c0: int

    def __post_init__(self):
        p, c1, c0 = self.p, self.c1, self.c0
        if p < 3 or not isprime(p):
            raise NotPrime(f"{p} is not an odd prime")
        _check_size(p)
        if not (0 <= c1 < p and 0 <= c0 < p):
            raise ZassenhausError(f"coefficients ({c1}, {c0}) are not reduced mod {p}")
        if has_root(p, c1, c0):
            raise ReduciblePolynomial(f"X^2 - {c1}X + {c0} has a root mod {p}")
        if not generator_is_primitive(p, c1, c0):
            raise NotPrimitive(f"root of X^2 - {c1}X + {c0} does not generate F_{p}^2 multiplicatively")

    @property
    def order(self) -> int:
        """Order of the multiplicative group"""
        return self.p * self.p - 1

    @property
    def polynomial(self) -> Tuple[int, int]:
        return self.c1, self.c0

    # Construction

    def element(self, u: int, v: int = 0) -> FieldElement:
        return FieldElement(u % self.p, v % self.p)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, 0)

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(0, 1)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.p):
            for u in range(self.p):
                yield FieldElement(u, v)

    def index(self, x: FieldElement) -> int:
        """Position of x in flat tables of size p^2"""
        return x.u + self.p * x.v

    # Arithmetic

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return FieldElement((x.u + y.u) % self.p, (x.v + y.v) % self.p)

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return FieldElement((x.u - y.u) % self.p, (x.v - y.v) % self.p)

    def neg(self, x: FieldElement) -> FieldElement:
        return FieldElement(-x.u % self.p, -x.v % self.p)

    def scale(self, k: int, x: FieldElement) -> FieldElement:
        return FieldElement(k * x.u % self.p, k * x.v % self.p)

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return FieldElement(*_mul_coords(self.p, self.c1, self.c0, (x.u, x.v), (y.u, y.v)))

    def conjugate(self, x: FieldElement) -> FieldElement:
        """Frobenius image x^p; the conjugate of alpha is c1 - alpha"""
        return FieldElement((x.u + self.c1 * x.v) % self.p, -x.v % self.p)

    def norm_form(self, x: FieldElement) -> int:
        """u^2 + c1*u*v + c0*v^2, the norm written as a quadratic form"""
        return (x.u * x.u + self.c1 * x.u * x.v + self.c0 * x.v * x.v) % self.p

    def inv(self, x: FieldElement) -> FieldElement:
        if x.is_zero:
            raise DivisionByZero("zero has no inverse")
        n_inv = pow(self.norm_form(x), -1, self.p)
        return self.scale(n_inv, self.conjugate(x))

    def div(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.mul(x, self.inv(y))

    def pow(self, x: FieldElement, k: int) -> FieldElement:
        if k < 0:
            x, k = self.inv(x), -k
        return FieldElement(*_pow_coords(self.p, self.c1, self.c0, (x.u, x.v), k))

    def norm(self, x: FieldElement) -> int:
        """x^(p+1), which always lies in the prime field"""
        n = self.pow(x, self.p + 1)
        assert n.v == 0, "norm left the prime field"
        return n.u

    # Logarithms

    @cached_property
    def _exp_table(self) -> np.ndarray:
        p, c1, c0 = self.p, self.c1, self.c0
        rows = []
        u, v = 1, 0
        for _ in range(self.order):
            rows.append((u, v))
            u, v = (-c0 * v) % p, (u + c1 * v) % p
        logger.debug(f"Built power table of F_{p}^2 ({self.order} entries)")
        return np.array(rows, dtype=np.int64)

    @cached_property
    def _log_table(self) -> np.ndarray:
        exp = self._exp_table
        logs = np.full(self.p * self.p, -1, dtype=np.int64)
        logs[exp[:, 0] + self.p * exp[:, 1]] = np.arange(self.order, dtype=np.int64)
        return logs

    @property
    def power_table(self) -> np.ndarray:
        """Row k holds the coordinates (u, v) of alpha^k"""
        return self._exp_table

    @property
    def log_grid(self) -> np.ndarray:
        """Discrete logs indexed [u, v]; -1 marks zero"""
        return self._log_table.reshape(self.p, self.p).T

    def alpha_pow(self, k: int) -> FieldElement:
        u, v = self._exp_table[k % self.order]
        return FieldElement(int(u), int(v))

    def dlog(self, x: FieldElement) -> int:
        """Exponent k in 0..p^2-2 with alpha^k = x"""
        if x.is_zero:
            raise DlogOfZero("discrete logarithm of zero")
        return int(self._log_table[self.index(x)])

    @cached_property
    def _prime_logs(self) -> Dict[int, int]:
        g = self.c0 % self.p
        logs = {}
        cur = 1
        for k in range(self.p - 1):
            logs[cur] = k
            cur = cur * g % self.p
        return logs

    def prime_dlog(self, a: int) -> int:
        """Discrete log in F_p^* to the base norm(alpha) = c0"""
        a %= self.p
        if a == 0:
            raise DlogOfZero("discrete logarithm of zero")
        return self._prime_logs[a]


def make_field(p: int, c1: int, c0: int) -> QuadField:
    """Validate (p, c1, c0) and return the field descriptor"""
    fld = QuadField(p, c1, c0)
    logger.debug(f"Constructed F_{p}^2 with alpha^2 = {c1}*alpha - {c0}")
    return fld


def least_primitive_polynomial(p: int) -> Tuple[int, int]:
    """Lexicographically least (c1, c0) whose polynomial is irreducible with primitive root"""
    if p < 3 or not isprime(p):
        raise NotPrime(f"{p} is not an odd prime")
    _check_size(p)
    for c1 in range(p):
        for c0 in range(1, p):
            if not has_root(p, c1, c0) and generator_is_primitive(p, c1, c0):
                return c1, c0
    raise NotPrimitive(f"no primitive quadratic over F_{p}")
