"""Group model module for G(p,q;d;alpha,beta)"""

from .epsilon import EpsilonVector
from .errors import BadD, DimensionMismatch, EqualPrimes, MixedParams, NotOrderPQ, Unsupported
from .model import (
    APart, ClassIndex, ClassKind, GroupElement, GroupParams, NPart,
    act, centralizer_order, class_index, class_key, class_representative, conj,
    elem_order, identity, inv, make_element, make_group, mul, n_add, power,
)

__all__ = [
    'GroupParams', 'GroupElement', 'NPart', 'APart', 'ClassIndex', 'ClassKind', 'EpsilonVector',
    'make_group', 'make_element', 'identity', 'mul', 'inv', 'conj', 'power', 'elem_order',
    'act', 'n_add', 'class_key', 'class_index', 'class_representative', 'centralizer_order',
    'BadD', 'EqualPrimes', 'MixedParams', 'NotOrderPQ', 'Unsupported', 'DimensionMismatch',
]
