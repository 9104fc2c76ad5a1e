"""Character engine module for xi_n, chi and the irreducible families of G"""

from .abelian import (
    ElemAbelianGroup, IntClassFunction, LinearChar, RationalIrrChar, XiSource,
    all_rational_irreducibles, normalize_dual,
)
from .chi import chi_value, extract_eps
from .errors import MixedGroups, NonIntegralAugmentation
from .families import (
    degree_census, eichler_condition, eigenvalue_condition, family_inner_products, transversal_exponents,
)
from .xi import brute_inner_products, coset_counts, inner_product, xi_is_proper, xi_table, xi_value

__all__ = [
    'ElemAbelianGroup', 'LinearChar', 'RationalIrrChar', 'IntClassFunction', 'XiSource',
    'all_rational_irreducibles', 'normalize_dual',
    'xi_table', 'xi_value', 'inner_product', 'coset_counts', 'brute_inner_products', 'xi_is_proper',
    'chi_value', 'extract_eps',
    'family_inner_products', 'transversal_exponents', 'eigenvalue_condition', 'degree_census',
    'eichler_condition',
    'MixedGroups', 'NonIntegralAugmentation',
]
