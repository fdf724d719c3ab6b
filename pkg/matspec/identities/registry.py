"""
Identity entries, their evaluation and the verification reports.

An entry compares a left-hand side with a right-hand side over sampled
parameters. Entries whose printed form is suspected to contain a typo carry
a corrected form: the report is PASS if the printed form holds, CORRECTED if
only the corrected form holds and FAIL otherwise.
"""

import fnmatch
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Optional
import numpy as np
from matspec.errors import MatspecError, ConfigurationError
from matspec.matrix.core import norm
from matspec.series.formal import MatrixPowerSeries, SeriesComparison, compare
from matspec.special.hyper import SeriesControl
from matspec.identities.samplers import sample_rng

logger = logging.getLogger(__name__)

TOLERANCE_CLASSES = ("quadrature", "formal", "laplace", "expansion", "pointwise", "extraction")
ENTRY_STATUSES = ("expected-pass", "suspected-typo")
REPORT_STATUSES = ("PASS", "FAIL", "CORRECTED")
EVALUATION_ERRORS = (MatspecError, np.linalg.LinAlgError, ArithmeticError)


@dataclass(frozen=True)
class EvalContext:
    """ Truncation settings handed to every lhs/rhs callable """
    truncation_k: int = 30
    ctrl: SeriesControl = field(default_factory=SeriesControl)
    quad_n: int = 40


@dataclass(frozen=True)
class IdentityEntry:
    """
    One catalog identity.

    lhs and rhs are callables (params, ctx) -> value where value is a matrix,
    a MatrixPowerSeries or a list of either. When rhs is None, lhs returns the
    residual itself (a float or a SeriesComparison). printed_variants holds
    (lhs, rhs) pairs for other readings of an ambiguous printed form; the best
    reading counts.
    """
    id: str
    paper_eq: str
    lhs: Callable
    rhs: Optional[Callable]
    mode: str
    sampler: Callable
    status: str = "expected-pass"
    corrected_lhs: Optional[Callable] = None
    corrected_rhs: Optional[Callable] = None
    corrected_form: Optional[str] = None
    printed_variants: tuple = ()
    scalar_only: bool = False
    max_dim: Optional[int] = None

    def __post_init__(self):
        if self.mode not in TOLERANCE_CLASSES:
            raise ConfigurationError(f"Entry '{self.id}': unknown mode '{self.mode}'")
        if self.status not in ENTRY_STATUSES:
            raise ConfigurationError(f"Entry '{self.id}': unknown status '{self.status}'")
        if self.status == "suspected-typo" and (
                not self.corrected_form or (self.corrected_lhs is None and self.corrected_rhs is None)):
            raise ConfigurationError(f"Entry '{self.id}' is suspected-typo but has no corrected form")

    def dims(self, dims):
        if self.scalar_only:
            return [1]
        return [d for d in dims if self.max_dim is None or d <= self.max_dim]


@dataclass(frozen=True)
class IdentityCheckReport:
    id: str
    paper_eq: str
    residual: Optional[float]
    tolerance: float
    status: str
    corrected_form: Optional[str]
    samples: int

    def to_json(self):
        return {"id": self.id,
                "paperEq": self.paper_eq,
                "residual": self.residual,
                "tolerance": self.tolerance,
                "status": self.status,
                "correctedForm": self.corrected_form,
                "samples": self.samples}

    @classmethod
    def from_json(cls, obj):
        return cls(id=obj["id"], paper_eq=obj["paperEq"], residual=obj["residual"],
                   tolerance=obj["tolerance"], status=obj["status"],
                   corrected_form=obj.get("correctedForm"), samples=obj["samples"])


def relative_difference(lhs, rhs):
    """
    Residual between two evaluated sides.

    Matrices: ||lhs - rhs|| / max(||lhs||, ||rhs||). Series: compare().
    Lists of matrices: largest difference over the largest norm of the list.
    Lists of series: the worst pairwise comparison.
    """
    if rhs is None:
        return float(lhs.residual if isinstance(lhs, SeriesComparison) else lhs)
    if isinstance(lhs, MatrixPowerSeries):
        return compare(lhs, rhs, tol=np.inf).residual
    if isinstance(lhs, (list, tuple)):
        if len(lhs) != len(rhs):
            raise ValueError(f"Sides have different lengths: {len(lhs)} vs {len(rhs)}")
        if lhs and isinstance(lhs[0], MatrixPowerSeries):
            return max(relative_difference(a, b) for a, b in zip(lhs, rhs))
        diff = max(norm(np.asarray(a) - np.asarray(b)) for a, b in zip(lhs, rhs))
        scale = max(max(norm(np.asarray(a)), norm(np.asarray(b))) for a, b in zip(lhs, rhs))
        return diff / scale if scale > 0 else diff
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    scale = max(norm(lhs), norm(rhs))
    diff = norm(lhs - rhs)
    return diff / scale if scale > 0 else diff


def relative_sum(terms):
    """ ||sum of terms|| relative to the largest term norm """
    terms = [np.asarray(t) for t in terms]
    scale = max(norm(t) for t in terms)
    total = norm(sum(terms))
    return total / scale if scale > 0 else total


def _worst_residual(entry_id, lhs_fn, rhs_fn, samples, ctx):
    """ Largest residual over samples, or None if evaluation failed """
    worst = 0.0
    for params in samples:
        try:
            lhs = lhs_fn(params, ctx)
            rhs = rhs_fn(params, ctx) if rhs_fn is not None else None
            residual = relative_difference(lhs, rhs)
        except EVALUATION_ERRORS as e:
            logger.info(f"Entry '{entry_id}': evaluation failed ({type(e).__name__}: {e})")
            return None
        if not np.isfinite(residual):
            return None
        worst = max(worst, residual)
    return float(worst)


def _best(residuals):
    finite = [r for r in residuals if r is not None]
    return min(finite) if finite else None


def run_identity(entry, seeds, dims, tolerances, ctx=None):
    """
    Evaluate one entry over all (dim, seed) samples.

    Args:
        entry:      (IdentityEntry) Entry to run
        seeds:      (list) Integer seeds
        dims:       (list) Matrix dimensions (restricted by the entry)
        tolerances: (dict) Tolerance class -> threshold
        ctx:        (EvalContext) Truncation settings

    Returns:
        IdentityCheckReport
    """
    ctx = ctx or EvalContext()
    tol = float(tolerances[entry.mode])
    try:
        samples = [entry.sampler(sample_rng(seed, dim, entry.id), dim)
                   for dim in entry.dims(dims) for seed in seeds]
    except EVALUATION_ERRORS as e:
        logger.error(f"Entry '{entry.id}': parameter sampling failed ({e})")
        return IdentityCheckReport(entry.id, entry.paper_eq, None, tol, "FAIL", entry.corrected_form, 0)

    printed = _best([_worst_residual(entry.id, lhs, rhs, samples, ctx)
                     for lhs, rhs in ((entry.lhs, entry.rhs), *entry.printed_variants)])
    if printed is not None and printed <= tol:
        status, residual = "PASS", printed
    elif entry.status == "suspected-typo":
        corrected = _worst_residual(entry.id, entry.corrected_lhs or entry.lhs,
                                    entry.corrected_rhs or entry.rhs, samples, ctx)
        printed_str = "n/a" if printed is None else f"{printed:.3e}"
        if corrected is not None and corrected <= tol:
            status, residual = "CORRECTED", corrected
            logger.warning(f"Entry '{entry.id}': printed form fails (residual {printed_str}), "
                           f"corrected form holds: {entry.corrected_form}")
        else:
            status, residual = "FAIL", corrected
            logger.error(f"Entry '{entry.id}': printed ({printed_str}) and corrected forms both fail")
    else:
        status, residual = "FAIL", printed
        logger.error(f"Entry '{entry.id}' FAILED (residual {residual}, tolerance {tol:.1e})")
    return IdentityCheckReport(entry.id, entry.paper_eq, residual, tol, status,
                               entry.corrected_form if status != "PASS" else None, len(samples))


def select_entries(entries, pattern=None):
    """ Entries whose id matches the glob 'pattern' (all if None), sorted by id """
    chosen = [e for e in entries if pattern is None or fnmatch.fnmatchcase(e.id, pattern)]
    return sorted(chosen, key=lambda e: e.id)


def check_unique_ids(entries):
    seen = set()
    for entry in entries:
        if entry.id in seen:
            raise ConfigurationError(f"Duplicate identity id '{entry.id}'")
        seen.add(entry.id)
    return entries


def run_catalog(entries, seeds, dims, tolerances, ctx=None, num_workers=1):
    """
    Run entries in a thread pool. Reports come back sorted by id whatever the
    completion order.
    """
    entries = select_entries(entries)
    process_func = partial(run_identity, seeds=seeds, dims=dims, tolerances=tolerances, ctx=ctx)
    reports = []
    with ThreadPoolExecutor(max(1, int(num_workers))) as pool:
        for i, report in enumerate(pool.map(process_func, entries)):
            logger.debug(f"{i + 1}/{len(entries)} {report.id}: {report.status}")
            reports.append(report)
    return sorted(reports, key=lambda r: r.id)
