"""
Self Test
- Oracle-equivalence suites on the bundled (7, 19, 3) parameters
- Each suite reports pass/fail with a short detail line
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np

from characters import (
    ElemAbelianGroup, all_rational_irreducibles, chi_value, extract_eps, inner_product, xi_is_proper, xi_table,
)
from finite_fields import least_primitive_polynomial, make_field
from lattices import build_assembly, verify_assembly_character
from metabelian import EpsilonVector, GroupParams, make_group
from zassenhaus import gauss_sum_check, mu_by_coset_counts, mu_table, r_table

logger = logging.getLogger(__name__)

COUNTEREXAMPLE = (7, 19, 3, (1, 3), (1, 2))
COUNTEREXAMPLE_EPS = (2, -1, 0)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _counterexample() -> Tuple[GroupParams, EpsilonVector]:
    p, q, d, poly_p, poly_q = COUNTEREXAMPLE
    return make_group(p, q, d, poly_p, poly_q), EpsilonVector(COUNTEREXAMPLE_EPS)


def _random_eps(d: int, count: int, seed: int) -> List[EpsilonVector]:
    rng = np.random.default_rng(seed)
    vectors = []
    while len(vectors) < count:
        head = [int(x) for x in rng.integers(-3, 4, size=d - 1)]
        last = 1 - sum(head)
        if abs(last) <= 3:
            vectors.append(EpsilonVector(tuple(head + [last])))
    return vectors


def suite_r_tables() -> str:
    params, _ = _counterexample()
    assert r_table(params.fp, 3).one_indexed() == (2, 4, 1)
    assert r_table(params.fq, 3).one_indexed() == (9, 6, 4)
    return "r(7) = (2, 4, 1), r(19) = (9, 6, 4)"


def suite_xi_properness() -> str:
    params, _ = _counterexample()
    vectors = _random_eps(params.d, 40, 7)
    for eps in vectors:
        for prime in (params.p, params.q):
            by_chars = xi_is_proper(params, eps, prime, "characters")
            assert by_chars == xi_is_proper(params, eps, prime, "circulant"), f"{eps.values} on {prime}"
            if prime == params.p:
                assert by_chars == xi_is_proper(params, eps, prime, "brute"), f"{eps.values} brute"
    return f"{len(vectors)} random eps agree on both sides"


def suite_inner_products() -> str:
    params, eps = _counterexample()
    xi = xi_table(params, eps, params.p)
    chars = all_rational_irreducibles(ElemAbelianGroup(params.p))
    for phi in chars:
        assert inner_product(xi, phi, "closed") == inner_product(xi, phi, "brute"), f"dual {phi.dual}"
    return f"{len(chars)} rational irreducibles on N_7 x U_7"


def suite_gauss_sums() -> str:
    checked = []
    for p in (7, 19, 163, 167):
        check = gauss_sum_check(make_field(p, *least_primitive_polynomial(p)), 3)
        assert check.passes, f"p={p}: |omega|^2 = {check.value}"
        checked.append(p)
    return f"primes {checked}"


def suite_round_trips() -> str:
    params, eps = _counterexample()
    assert EpsilonVector.from_beta_ordering(eps.beta_ordering()) == eps
    recovered = extract_eps(params, lambda n, j: chi_value(params, eps, n, j))
    assert recovered == eps, f"recovered {recovered.values}"
    for prime in (params.p, params.q):
        assert mu_table(params, eps, prime) == mu_by_coset_counts(params, eps, prime), f"mu on {prime}"
    return "epsilon orderings, chi extraction, mu recount"


def suite_assemblies() -> str:
    params, eps = _counterexample()
    for side in (params.p, params.q):
        assembly = build_assembly(params, eps, side, 2)
        assert verify_assembly_character(params, eps, assembly)
    return "both sides reproduce xi_n"


SUITES: List[Tuple[str, Callable[[], str]]] = [
    ("r-tables", suite_r_tables),
    ("xi properness", suite_xi_properness),
    ("inner products", suite_inner_products),
    ("gauss sums", suite_gauss_sums),
    ("round trips", suite_round_trips),
    ("assemblies", suite_assemblies),
]


def run_selftest() -> List[SuiteResult]:
    results = []
    for name, suite in SUITES:
        try:
            results.append(SuiteResult(name, True, suite()))
        except Exception as e:
            logger.error(f"💥 Suite {name} failed: {e}")
            results.append(SuiteResult(name, False, str(e) or type(e).__name__))
    return results
