"""
Verification Pipeline
- make_group, r-tables, inequalities, multiplicities, eigenvalue and degree checks
- Assemblies per auxiliary prime and the character identity on each side
"""

import logging
import time
from contextlib import nullcontext
from typing import List, Optional, Sequence

from config import RunConfig, Settings
from lattices import CharacterMismatch, build_assembly, default_aux_primes, verify_assembly_character
from metabelian import GroupParams
from zassenhaus import verdict
from .report import ReportDocument, assembly_section, build_report, sha256_text

logger = logging.getLogger(__name__)


def side_aux_primes(params: GroupParams, side: int, requested: Optional[Sequence[int]]) -> List[int]:
    if not requested:
        return default_aux_primes(params, side)
    chosen = []
    for ell in requested:
        if ell == side:
            logger.warning(f"⚠️ Auxiliary prime {ell} skipped on its own side")
            continue
        chosen.append(ell)
    return chosen


def run_verification(cfg: RunConfig, settings: Settings, aux_primes: Optional[Sequence[int]] = None,
                     metrics=None) -> ReportDocument:
    started = time.time()
    params = cfg.to_params()
    eps = cfg.to_epsilon()
    eps.require_d(params.d)

    with (metrics.time_check("verdict") if metrics is not None else nullcontext()):
        v = verdict(params, eps, sha256_text(cfg.canonical_json()))
    report = build_report(v)

    requested = aux_primes or cfg.options.aux_primes
    if cfg.options.checks.assemblies and v.unit_exists:
        for section in report.sides:
            side = section.prime
            for ell in side_aux_primes(params, side, requested):
                section.assemblies.append(assembly_section(build_assembly(params, eps, side, ell)))
            if not cfg.options.checks.assembly_character:
                continue
            # the character identity does not depend on the auxiliary prime
            assembly = build_assembly(params, eps, side, default_aux_primes(params, side)[0])
            try:
                section.assembly_character = verify_assembly_character(
                    params, eps, assembly, settings.max_exhaustive_order)
            except CharacterMismatch as e:
                section.assembly_character = False
                report.reasons.append(str(e))
                report.is_counterexample = False

    report.seal()
    report.timing_seconds = round(time.time() - started, 3)
    if metrics is not None:
        metrics.record_verdict("counterexample" if report.is_counterexample else "failed")
    return report
