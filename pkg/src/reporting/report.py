"""
Report Documents
- Pydantic models mirroring the verdict, r-tables, inequalities, multiplicities and assemblies
- Certificate hash over the canonical JSON of everything except timing
- 0-indexed and 1-indexed labels side by side
"""

import hashlib
import json
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from characters import degree_census, family_inner_products
from lattices import LatticeAssembly, projectivity_check, summand_char_formula
from metabelian import EpsilonVector, GroupParams
from zassenhaus import SideReport, Verdict

BOUNDARY_NOTE = (
    "Certified: every hypothesis of the reduction (sum of partial augmentations, circulant "
    "inequalities on both sides, eigenvalue and degree conditions, semi-local lattice multiplicities). "
    "Not certified: the final gluing of the semi-local lattices into a global lattice, an existence "
    "argument without a finite certificate."
)


class ParamsSection(BaseModel):
    p: int
    q: int
    d: int
    poly_p: Tuple[int, int]
    poly_q: Tuple[int, int]
    group_order: int
    order_factors: Dict[str, int]
    satisfies_hypotheses: bool


class EpsilonSection(BaseModel):
    labels: List[str]
    values: List[int]
    one_indexed_labels: List[str]
    one_indexed: List[int]


class SummandSection(BaseModel):
    label: str
    generators: str
    multiplicity: int
    order: int
    shape: str
    projective: bool


class AssemblySection(BaseModel):
    aux_prime: int
    summands: List[SummandSection]
    degree: int


class SideSection(BaseModel):
    prime: int
    r_table: List[int]
    r_table_one_indexed: List[int]
    inequalities: List[int]
    mu_trivial: int
    mu_n_kernel: int
    mu_u_kernel: int
    mu_cosets: List[int]
    assemblies: List[AssemblySection] = Field(default_factory=list)
    assembly_character: Optional[bool] = None


class ChecksSection(BaseModel):
    sum_is_one: bool
    support_size: int
    eigenvalue: bool
    eichler: bool
    family_inner_products: Dict[str, int]
    degree_census: Dict[str, int]


class ReportDocument(BaseModel):
    params: ParamsSection
    epsilon: EpsilonSection
    sides: List[SideSection]
    checks: ChecksSection
    is_counterexample: bool
    reasons: List[str]
    boundary: str = BOUNDARY_NOTE
    config_sha256: Optional[str] = None
    certificate_sha256: str = ""
    timing_seconds: Optional[float] = None

    def certificate(self) -> str:
        """Canonical JSON of the hashed section"""
        data = self.model_dump(exclude={'certificate_sha256', 'timing_seconds'})
        return json.dumps(data, sort_keys=True, separators=(",", ":"))

    def seal(self) -> 'ReportDocument':
        self.certificate_sha256 = hashlib.sha256(self.certificate().encode()).hexdigest()
        return self

    @property
    def is_sealed(self) -> bool:
        return self.certificate_sha256 == hashlib.sha256(self.certificate().encode()).hexdigest()


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def params_section(params: GroupParams) -> ParamsSection:
    return ParamsSection(
        p=params.p, q=params.q, d=params.d,
        poly_p=params.fp.polynomial, poly_q=params.fq.polynomial,
        group_order=params.order,
        order_factors={str(k): v for k, v in params.order_factors.items()},
        satisfies_hypotheses=params.satisfies_hypotheses,
    )


def epsilon_section(eps: EpsilonVector) -> EpsilonSection:
    d = eps.d
    return EpsilonSection(
        labels=eps.labels(),
        values=list(eps.values),
        one_indexed_labels=[f"(alpha^{i},1)" for i in range(1, d + 1)],
        one_indexed=list(eps.one_indexed()),
    )


def assembly_section(assembly: LatticeAssembly) -> AssemblySection:
    return AssemblySection(
        aux_prime=assembly.aux_prime,
        summands=[
            SummandSection(
                label=s.label,
                generators=s.subgroup.describe(),
                multiplicity=s.multiplicity,
                order=s.subgroup.order,
                shape=summand_char_formula(s.subgroup, s.side).shape.value,
                projective=projectivity_check(s.subgroup, s.aux_prime),
            )
            for s in assembly.summands
        ],
        degree=assembly.degree,
    )


def side_section(side: SideReport) -> SideSection:
    return SideSection(
        prime=side.prime,
        r_table=list(side.r_table.values),
        r_table_one_indexed=list(side.r_table.one_indexed()),
        inequalities=list(side.inequalities),
        mu_trivial=side.mu.trivial,
        mu_n_kernel=side.mu.n_kernel,
        mu_u_kernel=side.mu.u_kernel,
        mu_cosets=list(side.mu.cosets),
    )


def build_report(v: Verdict) -> ReportDocument:
    params = v.params
    checks = ChecksSection(
        sum_is_one=v.sum_is_one,
        support_size=v.support_size,
        eigenvalue=v.eigenvalue,
        eichler=v.eichler,
        family_inner_products={str(k): s for k, s in family_inner_products(params).items()},
        degree_census={str(k): m for k, m in sorted(degree_census(params).items())},
    )
    return ReportDocument(
        params=params_section(params),
        epsilon=epsilon_section(v.eps),
        sides=[side_section(v.sides[prime]) for prime in (params.p, params.q)],
        checks=checks,
        is_counterexample=v.is_counterexample,
        reasons=list(v.reasons),
        config_sha256=v.config_hash,
    )
