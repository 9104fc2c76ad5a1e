"""
Subgroups of N x U
- Generators (n, c^k) with n in N and k mod pq
- Each subgroup splits into a p-part and a q-part, both F_l-subspaces of N_l x U_l
- Spans are reduced to echelon form over GF(l) with sympy
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Sequence, Tuple

from sympy import FiniteField
from sympy.polys.matrices import DomainMatrix

from finite_fields import FieldElement
from metabelian import GroupParams, NPart

logger = logging.getLogger(__name__)

Generator = Tuple[NPart, int]
Vector = Tuple[int, int, int]


def u_exponent(params: GroupParams, prime: int, t: int = 1) -> int:
    """k mod pq with c^k = c_prime^t, i.e. k = t mod prime and k = 0 mod the other prime"""
    other = params.other(prime)
    return t * other * pow(other, -1, prime) % (params.p * params.q)


def n_on_side(params: GroupParams, prime: int, m: FieldElement) -> NPart:
    """Embed m of F_{prime^2} as an element of N"""
    zero = FieldElement(0)
    return NPart(m, zero) if prime == params.p else NPart(zero, m)


def project(params: GroupParams, gen: Generator, prime: int) -> Vector:
    n, k = gen
    m = n.x if prime == params.p else n.y
    return m.u % prime, m.v % prime, k % prime


def echelon_basis(prime: int, vectors: Sequence[Vector]) -> Tuple[Vector, ...]:
    rows = [list(v) for v in vectors if any(c % prime for c in v)]
    if not rows:
        return ()
    rref, pivots = DomainMatrix.from_list(rows, FiniteField(prime)).rref()
    reduced = rref.to_list()
    return tuple(tuple(int(c) % prime for c in reduced[i]) for i in range(len(pivots)))


def cross(prime: int, a: Vector, b: Vector) -> Vector:
    """Normal vector of the plane spanned by a and b"""
    return (
        (a[1] * b[2] - a[2] * b[1]) % prime,
        (a[2] * b[0] - a[0] * b[2]) % prime,
        (a[0] * b[1] - a[1] * b[0]) % prime,
    )


@dataclass(frozen=True, eq=False)
class SubgroupDescriptor:
    params: GroupParams
    generators: Tuple[Generator, ...]

    @cached_property
    def _bases(self) -> Dict[int, Tuple[Vector, ...]]:
        return {
            prime: echelon_basis(prime, [project(self.params, g, prime) for g in self.generators])
            for prime in (self.params.p, self.params.q)
        }

    def basis(self, prime: int) -> Tuple[Vector, ...]:
        self.params.field(prime)
        return self._bases[prime]

    def rank(self, prime: int) -> int:
        return len(self.basis(prime))

    @property
    def order(self) -> int:
        return self.params.p ** self.rank(self.params.p) * self.params.q ** self.rank(self.params.q)

    def contains(self, prime: int, vector: Vector) -> bool:
        basis = self.basis(prime)
        return len(echelon_basis(prime, list(basis) + [vector])) == len(basis)

    def rank_without_u(self, prime: int) -> int:
        """Rank of the part of X_prime with trivial U-coordinate"""
        basis = self.basis(prime)
        u_rank = 1 if any(v[2] for v in basis) else 0
        return len(basis) - u_rank

    def elements_on(self, prime: int) -> FrozenSet[Vector]:
        """Additive closure of the generator projections, independent of the echelon form"""
        span = {(0, 0, 0)}
        for g in self.generators:
            a = project(self.params, g, prime)
            span = {
                tuple((s[i] + k * a[i]) % prime for i in range(3))
                for s in span for k in range(prime)
            }
        return frozenset(span)

    def describe(self) -> str:
        gens = ", ".join(f"({n}, c^{k})" if k else f"({n}, 1)" for n, k in self.generators)
        return f"<{gens}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgroupDescriptor):
            return NotImplemented
        return self.params == other.params and self._bases == other._bases

    def __hash__(self) -> int:
        return hash((self.params, tuple(sorted(self._bases.items()))))


def make_subgroup(params: GroupParams, generators: Sequence[Generator]) -> SubgroupDescriptor:
    pq = params.p * params.q
    normalized = tuple((n, k % pq) for n, k in generators)
    return SubgroupDescriptor(params, normalized)


def side_factor(params: GroupParams, prime: int) -> List[Generator]:
    """Generators of N_prime x U_prime"""
    fld = params.field(prime)
    return [
        (n_on_side(params, prime, fld.one), 0),
        (n_on_side(params, prime, fld.alpha), 0),
        (n_on_side(params, prime, fld.zero), u_exponent(params, prime)),
    ]
