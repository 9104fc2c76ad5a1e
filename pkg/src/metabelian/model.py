"""
Metabelian Group Model
- Parameters of G = N x| A with N = F_{p^2} + F_{q^2}
- Normal-form elements n * a^r b^s c^t and their arithmetic
- Action of A on N, conjugacy classes inside N, centralizer orders
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd, lcm
from typing import Dict, Optional, Tuple

from sympy import factorint

from finite_fields import FieldElement, QuadField, make_field
from .errors import BadD, EqualPrimes, MixedParams, NotOrderPQ, Unsupported

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupParams:
    """Validated parameters (p, q, d, alpha, beta)"""

    p: int
    q: int
    d: int
    fp: QuadField
    fq: QuadField

    @property
    def order_a_gen(self) -> int:
        """Order of a, i.e. (p^2-1)/d"""
        return (self.p * self.p - 1) // self.d

    @property
    def order_b_gen(self) -> int:
        """Order of b, i.e. (q^2-1)/d"""
        return (self.q * self.q - 1) // self.d

    @property
    def order_a(self) -> int:
        return self.order_a_gen * self.order_b_gen * self.d

    @property
    def order_n(self) -> int:
        return self.p * self.p * self.q * self.q

    @property
    def order(self) -> int:
        return self.order_n * self.order_a

    @property
    def order_factors(self) -> Dict[int, int]:
        return dict(sorted(factorint(self.order).items()))

    @property
    def coprime_p(self) -> bool:
        return (self.p - 1) % self.d == 0

    @property
    def coprime_q(self) -> bool:
        return (self.q - 1) % self.d == 0

    @property
    def satisfies_hypotheses(self) -> bool:
        """d divides p-1 and q-1, so d is coprime to p+1 and q+1"""
        return self.coprime_p and self.coprime_q

    def field(self, prime: int) -> QuadField:
        if prime == self.p:
            return self.fp
        if prime == self.q:
            return self.fq
        raise Unsupported(f"{prime} is neither p={self.p} nor q={self.q}")

    def other(self, prime: int) -> int:
        self.field(prime)
        return self.q if prime == self.p else self.p

    def n_generator(self, prime: int) -> 'NPart':
        """Generator n of the other prime's N-part, paired with characters of N_prime x U_prime"""
        self.field(prime)
        return NPart(FieldElement(0), FieldElement(1)) if prime == self.p else NPart(FieldElement(1), FieldElement(0))

    def centralizer_index(self, prime: int) -> int:
        """[C_G(n) : N] for the generator n paired with `prime`"""
        self.field(prime)
        return self.order_a_gen if prime == self.p else self.order_b_gen

    def describe(self) -> str:
        return (f"G({self.p},{self.q};{self.d}) with alpha^2={self.fp.c1}a-{self.fp.c0}, "
                f"beta^2={self.fq.c1}b-{self.fq.c0}")


def make_group(p: int, q: int, d: int, poly_p: Tuple[int, int], poly_q: Tuple[int, int]) -> GroupParams:
    """Validate parameters and build both fields"""
    if p == q:
        raise EqualPrimes(f"p and q must differ, both are {p}")
    fp = make_field(p, *poly_p)
    fq = make_field(q, *poly_q)
    if d <= 1 or d % 2 == 0:
        raise BadD(f"d={d} must be odd and greater than 1")
    for prime in (p, q):
        if (prime * prime - 1) % d:
            raise BadD(f"d={d} does not divide {prime}^2-1")
    params = GroupParams(p, q, d, fp, fq)
    if not params.satisfies_hypotheses:
        logger.warning(f"⚠️ d={d} does not divide both p-1 and q-1; counterexample hypotheses fail")
    logger.debug(f"Built {params.describe()} of order {params.order}")
    return params


@dataclass(frozen=True)
class NPart:
    """Element (x, y) of the abelian normal subgroup N"""

    x: FieldElement
    y: FieldElement

    @property
    def is_identity(self) -> bool:
        return self.x.is_zero and self.y.is_zero

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class APart:
    """Normal form a^r b^s c^t with 0 <= t < d"""

    r: int = 0
    s: int = 0
    t: int = 0


class ClassKind(str, Enum):
    IDENTITY = "identity"
    ORDER_P = "order-p"
    ORDER_Q = "order-q"
    ORDER_PQ = "order-pq"


@dataclass(frozen=True)
class ClassIndex:
    """G-class of an element of N"""

    kind: ClassKind
    i: Optional[int] = None


@dataclass(frozen=True)
class GroupElement:
    """g = (x, y) * a^r b^s c^t"""

    params: GroupParams = field(repr=False)
    x: FieldElement
    y: FieldElement
    r: int = 0
    s: int = 0
    t: int = 0

    @property
    def n_part(self) -> NPart:
        return NPart(self.x, self.y)

    @property
    def a_part(self) -> APart:
        return APart(self.r, self.s, self.t)

    @property
    def in_n(self) -> bool:
        return self.r == 0 and self.s == 0 and self.t == 0

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        return mul(self, other)


# A-part arithmetic

def normalize_a(params: GroupParams, r: int, s: int, t: int) -> APart:
    """Reduce exponents using c^d = ab and the orders of a and b"""
    carry, t = divmod(t, params.d)
    return APart((r + carry) % params.order_a_gen, (s + carry) % params.order_b_gen, t)


def a_mul(params: GroupParams, a1: APart, a2: APart) -> APart:
    return normalize_a(params, a1.r + a2.r, a1.s + a2.s, a1.t + a2.t)


def a_inv(params: GroupParams, a: APart) -> APart:
    return normalize_a(params, -a.r, -a.s, -a.t)


def multiplier_exponents(params: GroupParams, a: APart) -> Tuple[int, int]:
    """Exponents e with a acting as alpha^e on the p-part and beta^e on the q-part"""
    return params.d * a.r + a.t, params.d * a.s + a.t


# N-part arithmetic

def n_add(params: GroupParams, m: NPart, n: NPart) -> NPart:
    return NPart(params.fp.add(m.x, n.x), params.fq.add(m.y, n.y))


def n_neg(params: GroupParams, n: NPart) -> NPart:
    return NPart(params.fp.neg(n.x), params.fq.neg(n.y))


def act(params: GroupParams, a: APart, n: NPart) -> NPart:
    """n^a: multiply x by alpha^(d*r+t) and y by beta^(d*s+t)"""
    ep, eq = multiplier_exponents(params, a)
    return NPart(params.fp.mul(params.fp.alpha_pow(ep), n.x), params.fq.mul(params.fq.alpha_pow(eq), n.y))


# Elements

def make_element(params: GroupParams, n: Optional[NPart] = None, a: Optional[APart] = None) -> GroupElement:
    n = n or NPart(FieldElement(0), FieldElement(0))
    a = normalize_a(params, *(a.r, a.s, a.t)) if a else APart()
    x = params.fp.element(n.x.u, n.x.v)
    y = params.fq.element(n.y.u, n.y.v)
    return GroupElement(params, x, y, a.r, a.s, a.t)


def identity(params: GroupParams) -> GroupElement:
    return make_element(params)


def _check_same(g: GroupElement, h: GroupElement):
    if g.params != h.params:
        raise MixedParams("elements belong to different groups")


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    """(n1 a1)(n2 a2) = (n1 + n2^(a1^-1)) a1 a2"""
    _check_same(g, h)
    params = g.params
    moved = act(params, a_inv(params, g.a_part), h.n_part)
    return make_element(params, n_add(params, g.n_part, moved), a_mul(params, g.a_part, h.a_part))


def inv(g: GroupElement) -> GroupElement:
    """(n a)^-1 = (-n)^a a^-1"""
    params = g.params
    return make_element(params, act(params, g.a_part, n_neg(params, g.n_part)), a_inv(params, g.a_part))


def conj(g: GroupElement, x: GroupElement) -> GroupElement:
    """x^-1 g x"""
    _check_same(g, x)
    return mul(mul(inv(x), g), x)


def power(g: GroupElement, k: int) -> GroupElement:
    if k < 0:
        g, k = inv(g), -k
    result = identity(g.params)
    base = g
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def elem_order(g: GroupElement) -> int:
    """Order from the multiplier orders of the A-part and additive orders in N"""
    params = g.params
    ep, eq = multiplier_exponents(params, g.a_part)
    np_, nq_ = params.fp.order, params.fq.order
    o = lcm(np_ // gcd(ep, np_), nq_ // gcd(eq, nq_))
    # g^o = (sum of the N-part over the orbit) * 1; the geometric sum vanishes unless the multiplier is 1
    xo = params.fp.scale(o, g.x) if ep % np_ == 0 else FieldElement(0)
    yo = params.fq.scale(o, g.y) if eq % nq_ == 0 else FieldElement(0)
    return o * (1 if xo.is_zero else params.p) * (1 if yo.is_zero else params.q)


# Classes inside N

def class_key(params: GroupParams, n: NPart) -> ClassIndex:
    if n.is_identity:
        return ClassIndex(ClassKind.IDENTITY)
    if n.y.is_zero:
        return ClassIndex(ClassKind.ORDER_P)
    if n.x.is_zero:
        return ClassIndex(ClassKind.ORDER_Q)
    return ClassIndex(ClassKind.ORDER_PQ, (params.fp.dlog(n.x) - params.fq.dlog(n.y)) % params.d)


def class_index(params: GroupParams, n: NPart) -> int:
    """i with n conjugate to (alpha^i, 1)"""
    if n.x.is_zero or n.y.is_zero:
        raise NotOrderPQ(f"{n} does not have order p*q")
    return class_key(params, n).i


def class_representative(params: GroupParams, i: int) -> NPart:
    return NPart(params.fp.alpha_pow(i % params.d), FieldElement(1))


def centralizer_order(params: GroupParams, g) -> int:
    """|C_G(g)| for g in N (an NPart or a GroupElement without A-part)"""
    if isinstance(g, GroupElement):
        if not g.in_n:
            raise Unsupported("centralizer orders are only available for elements of N")
        g = g.n_part
    kind = class_key(params, g).kind
    if kind is ClassKind.IDENTITY:
        return params.order
    if kind is ClassKind.ORDER_P:
        return params.order_n * params.order_b_gen
    if kind is ClassKind.ORDER_Q:
        return params.order_n * params.order_a_gen
    return params.order_n
