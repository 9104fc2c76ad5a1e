"""
Prime Pair Search
- Candidate primes p <= pMax with d | p^2 - 1, flagged by coprimality and threshold
- Consecutive candidates above the threshold are paired
- Optional effective check of every bounded eps, exhaustive or sampled
- Pairs evaluated on a thread pool, merged by key in submission order
- Written records re-read and their flags recomputed from scratch
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
from sympy import primerange

from finite_fields import QuadField, least_primitive_polynomial, make_field
from metabelian import BadD, EpsilonVector
from .corollary import GaussCheck, corollary_threshold, gauss_sum_check
from .errors import BadRecord, MergeConflict
from .inequalities import inequality_values
from .rtable import RTable, r_table

logger = logging.getLogger(__name__)

BELOW_THRESHOLD = "below-threshold, per-eps check required"
NOT_COPRIME = "d does not divide p-1, no guarantee"
ELIGIBLE = "above threshold"

PairKey = Tuple[int, int, int, int]


@dataclass(frozen=True)
class PrimeCandidate:
    p: int
    coprime: bool
    above_threshold: bool

    @property
    def status(self) -> str:
        if not self.above_threshold:
            return BELOW_THRESHOLD
        return ELIGIBLE if self.coprime else NOT_COPRIME


@dataclass(frozen=True)
class EffectiveCheck:
    mode: str
    checked: int
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class PairRecord:
    p: int
    q: int
    d: int
    m: int
    guaranteed: bool
    poly_p: Tuple[int, int] = (0, 0)
    poly_q: Tuple[int, int] = (0, 0)
    effective: Optional[EffectiveCheck] = None

    @property
    def key(self) -> PairKey:
        return self.p, self.q, self.d, self.m

    def to_line(self) -> str:
        """`p q d M guaranteed_flag`"""
        return f"{self.p} {self.q} {self.d} {self.m} {int(self.guaranteed)}"


def parse_record(line: str) -> PairRecord:
    fields = line.split()
    if len(fields) != 5:
        raise BadRecord(f"search record needs 5 fields, got {len(fields)}: {line!r}")
    try:
        p, q, d, m, flag = (int(f) for f in fields)
    except ValueError:
        raise BadRecord(f"search record fields must be integers: {line!r}")
    if flag not in (0, 1):
        raise BadRecord(f"guaranteed flag must be 0 or 1, got {flag}")
    return PairRecord(p, q, d, m, bool(flag))


@dataclass
class SearchResult:
    d: int
    m: int
    p_max: int
    threshold: float
    candidates: List[PrimeCandidate] = field(default_factory=list)
    pairs: List[PairRecord] = field(default_factory=list)
    gauss: List[GaussCheck] = field(default_factory=list)


def candidate_primes(d: int, m: int, p_max: int) -> List[PrimeCandidate]:
    threshold = corollary_threshold(d, m)
    return [
        PrimeCandidate(p, (p - 1) % d == 0, p >= threshold)
        for p in primerange(5, p_max + 1)
        if (p * p - 1) % d == 0
    ]


def eps_box(d: int, m: int, sample_size: int, box_limit: int, rng: np.random.Generator) -> Tuple[str, Iterator[EpsilonVector]]:
    """Vectors with entries in [-M, M] summing to 1"""
    if (2 * m + 1) ** (d - 1) <= box_limit:
        def exhaustive():
            for head in itertools.product(range(-m, m + 1), repeat=d - 1):
                last = 1 - sum(head)
                if abs(last) <= m:
                    yield EpsilonVector(head + (last,))
        return "exhaustive", exhaustive()

    def sampled():
        drawn = 0
        while drawn < sample_size:
            head = tuple(int(x) for x in rng.integers(-m, m + 1, size=d - 1))
            last = 1 - sum(head)
            if abs(last) <= m:
                drawn += 1
                yield EpsilonVector(head + (last,))
    return "sampled", sampled()


def effective_check(rp: RTable, rq: RTable, m: int, sample_size: int, box_limit: int, seed: int) -> EffectiveCheck:
    rng = np.random.default_rng([seed, rp.prime, rq.prime])
    mode, vectors = eps_box(rp.d, m, sample_size, box_limit, rng)
    checked = failures = 0
    for eps in vectors:
        checked += 1
        if min(inequality_values(rp, eps)) < 0 or min(inequality_values(rq, eps, beta_ordering=True)) < 0:
            failures += 1
    return EffectiveCheck(mode, checked, failures)


def merge_records(merged: Dict[PairKey, PairRecord], record: PairRecord) -> bool:
    """Insert by key; returns False for a repeated identical record"""
    existing = merged.get(record.key)
    if existing is None:
        merged[record.key] = record
        return True
    if existing != record:
        raise MergeConflict(f"pair {record.key} produced two different results")
    return False


def search_prime_pairs(
    d: int,
    m: int,
    p_max: int,
    effective: bool = False,
    workers: int = 4,
    sample_size: int = 50,
    box_limit: int = 100_000,
    seed: int = 2019,
    sink: Optional[Callable[[PairRecord], None]] = None,
    metrics=None,
) -> SearchResult:
    if d < 3 or d % 2 == 0:
        raise BadD(f"d={d} must be odd and at least 3")
    threshold = corollary_threshold(d, m)
    result = SearchResult(d, m, p_max, threshold, candidate_primes(d, m, p_max))
    above = [c for c in result.candidates if c.above_threshold]
    logger.info(f"🔍 {len(result.candidates)} candidate primes up to {p_max}, "
                f"{len(above)} above threshold {threshold:g}")

    fields: Dict[int, QuadField] = {}
    tables: Dict[int, RTable] = {}
    for cand in above:
        fld = make_field(cand.p, *least_primitive_polynomial(cand.p))
        fields[cand.p] = fld
        tables[cand.p] = r_table(fld, d)
        result.gauss.append(gauss_sum_check(fld, d))
        if metrics is not None:
            metrics.record_field()
    for check in result.gauss:
        if not check.passes:
            logger.error(f"💥 Gauss-sum identity fails at p={check.prime}: |omega|^2 = {check.value}")

    def evaluate(pair: Tuple[PrimeCandidate, PrimeCandidate]) -> PairRecord:
        cp, cq = pair
        eff = None
        if effective:
            eff = effective_check(tables[cp.p], tables[cq.p], m, sample_size, box_limit, seed)
        return PairRecord(cp.p, cq.p, d, m, cp.coprime and cq.coprime,
                          fields[cp.p].polynomial, fields[cq.p].polynomial, eff)

    merged: Dict[PairKey, PairRecord] = {}
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        for record in executor.map(evaluate, zip(above, above[1:])):
            if not merge_records(merged, record):
                continue
            result.pairs.append(record)
            if metrics is not None:
                metrics.record_pair(record.guaranteed)
            if sink is not None:
                sink(record)
            if record.effective is not None and record.guaranteed and not record.effective.passed:
                logger.error(f"💥 Guaranteed pair ({record.p}, {record.q}) failed "
                             f"{record.effective.failures} of {record.effective.checked} eps checks")

    logger.info(f"✅ Search found {len(result.pairs)} pairs")
    return result


@dataclass(frozen=True)
class RecheckResult:
    recorded: PairRecord
    recomputed: PairRecord

    @property
    def matches(self) -> bool:
        """Same guarantee flag, and a guaranteed pair passes its effective check when one was run"""
        if self.recorded.guaranteed != self.recomputed.guaranteed:
            return False
        eff = self.recomputed.effective
        return eff is None or not self.recomputed.guaranteed or eff.passed


def recheck_record(record: PairRecord, effective: bool = False, sample_size: int = 50,
                   box_limit: int = 100_000, seed: int = 2019) -> RecheckResult:
    """Rebuild both fields from their least primitive polynomials and recompute the record"""
    p, q, d, m = record.key
    if d < 3 or d % 2 == 0:
        raise BadD(f"d={d} must be odd and at least 3")
    threshold = corollary_threshold(d, m)
    fp = make_field(p, *least_primitive_polynomial(p))
    fq = make_field(q, *least_primitive_polynomial(q))
    rp, rq = r_table(fp, d), r_table(fq, d)
    guaranteed = all(prime >= threshold and (prime - 1) % d == 0 for prime in (p, q))
    eff = effective_check(rp, rq, m, sample_size, box_limit, seed) if effective else None
    result = RecheckResult(record, PairRecord(p, q, d, m, guaranteed, fp.polynomial, fq.polynomial, eff))
    if not result.matches:
        logger.error(f"❌ Record '{record.to_line()}' does not reproduce: recomputed "
                     f"'{result.recomputed.to_line()}'")
    return result
