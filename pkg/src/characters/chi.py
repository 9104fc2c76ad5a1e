"""
Double Action Character
- chi((g, c^j)) = |C_G(g)| * sum of eps_i over classes (alpha^i, 1)^j conjugate to g
- Recovery of partial augmentations from character values
"""

from typing import Callable, Union

from metabelian import (
    EpsilonVector, GroupElement, GroupParams, NPart, Unsupported,
    centralizer_order, class_key, class_representative,
)
from .errors import NonIntegralAugmentation

ChiOracle = Callable[[NPart, int], int]


def chi_value(params: GroupParams, eps: EpsilonVector, g: Union[NPart, GroupElement], j: int) -> int:
    eps.require_d(params.d)
    if isinstance(g, GroupElement):
        if not g.in_n:
            raise Unsupported("chi is only evaluated on N x U")
        g = g.n_part
    target = class_key(params, g)
    weight = 0
    for i, e in enumerate(eps.values):
        if not e:
            continue
        rep = class_representative(params, i)
        powered = NPart(params.fp.scale(j, rep.x), params.fq.scale(j, rep.y))
        if class_key(params, powered) == target:
            weight += e
    return centralizer_order(params, g) * weight


def extract_eps(params: GroupParams, chi_oracle: ChiOracle) -> EpsilonVector:
    """eps_i = chi(((alpha^i, 1), c)) / |N|"""
    values = []
    for i in range(params.d):
        value = chi_oracle(class_representative(params, i), 1)
        q, r = divmod(value, params.order_n)
        if r:
            raise NonIntegralAugmentation(f"chi at class {i} is {value}, not a multiple of |N|={params.order_n}")
        values.append(q)
    return EpsilonVector(tuple(values))
