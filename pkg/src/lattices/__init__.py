"""Lattice assembler module: subgroup descriptors, summands and character checks"""

from .assembly import (
    LatticeAssembly, LatticeSummand, SummandFormula, SummandShape, assembly_character, build_assembly,
    default_aux_primes, kernel_dual, orbit_sum, projectivity_check, summand_char_formula,
    verify_assembly_character,
)
from .errors import BadAuxPrime, CharacterMismatch, NegativeMultiplicity, UnsupportedShape
from .subgroups import SubgroupDescriptor, make_subgroup, n_on_side, side_factor, u_exponent

__all__ = [
    'SubgroupDescriptor', 'make_subgroup', 'n_on_side', 'side_factor', 'u_exponent',
    'LatticeSummand', 'LatticeAssembly', 'build_assembly', 'default_aux_primes',
    'projectivity_check', 'verify_assembly_character', 'assembly_character', 'orbit_sum', 'kernel_dual',
    'summand_char_formula', 'SummandFormula', 'SummandShape',
    'NegativeMultiplicity', 'BadAuxPrime', 'CharacterMismatch', 'UnsupportedShape',
]
