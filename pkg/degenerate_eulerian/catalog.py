# -*- coding: utf-8 -*-
"""
Identity catalog: listing and running the registered checks.

Coordinates one verification:
1. Look up the check and validate the index bounds
2. Run it against a CheckRun over the chosen SequenceContext
3. Turn the outcome (pass, first counterexample, or a failed computation)
   into an IdentityReport
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from . import checks  # noqa: F401  (registers every check)
from .config import DEFAULT_M_MAX
from .context import SequenceContext, default_context
from .errors import MissingSecondIndex, NegativeIndex
from .models import IdentityInfo, IdentityReport
from .registry import CheckFailed, CheckRun, get_check, registered

logger = logging.getLogger(__name__)


def list_identities() -> List[IdentityInfo]:
    """Every registered identity, in registration order."""
    return [check.info() for check in registered()]


def verify(
    tag: str,
    n_max: int,
    m_max: Optional[int] = None,
    ctx: Optional[SequenceContext] = None,
    fast: bool = False,
) -> IdentityReport:
    """
    Verify one identity for indices up to n_max (and m_max for two-index identities).

    Args:
        tag: Registered identity tag, e.g. "EQ09_WORPITZKY"
        n_max: Upper bound for the main index
        m_max: Upper bound for the second index; required when the identity has one
        ctx: Sequence context to compute in (the shared pristine one by default)
        fast: Compare at random rational points instead of symbolically

    Returns:
        IdentityReport with status "fail" and a counterexample at the first mismatch
    """
    check = get_check(tag)
    if n_max < 0:
        raise NegativeIndex(f"n_max must be nonnegative, got {n_max}")
    if check.two_index:
        if m_max is None:
            raise MissingSecondIndex(f"{tag} needs m_max")
        if m_max < 0:
            raise NegativeIndex(f"m_max must be nonnegative, got {m_max}")

    run = CheckRun(
        ctx=ctx if ctx is not None else default_context(),
        n_max=n_max,
        m_max=m_max,
        mode="fast" if fast else "exact",
    )
    started = time.perf_counter()
    try:
        check.func(run)
    except CheckFailed:
        pass
    except (ArithmeticError, ValueError) as error:
        # a side that cannot be computed counts against the identity
        logger.warning("%s: computation failed: %s", tag, error)
        run.record_error(error)
    elapsed = time.perf_counter() - started

    report = IdentityReport(
        id=tag,
        range={"n_max": n_max, "m_max": m_max, **run.covered},
        status="fail" if run.counterexample is not None else "pass",
        counterexample=run.counterexample,
        elapsed=elapsed,
        mode=run.mode,
        comparisons=run.comparisons,
        notes=run.notes,
    )
    if report.passed:
        logger.info("%s passed (%d comparisons, %.3fs)", tag, run.comparisons, elapsed)
    else:
        logger.warning("%s failed at %s", tag, report.counterexample.indices)
    return report


def verify_all(
    n_max: int,
    m_max: int = DEFAULT_M_MAX,
    ctx: Optional[SequenceContext] = None,
    fast: bool = False,
    workers: int = 1,
) -> List[IdentityReport]:
    """
    Verify every registered identity.

    Two-index identities use m_max for their second index. With workers > 1
    the identities run on a thread pool; reports stay in registration order.
    """
    if n_max < 0:
        raise NegativeIndex(f"n_max must be nonnegative, got {n_max}")
    tags = [check.tag for check in registered()]

    def run_one(tag: str) -> IdentityReport:
        return verify(tag, n_max, m_max if get_check(tag).two_index else None, ctx, fast)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run_one, tags))
    else:
        reports = [run_one(tag) for tag in tags]

    failed = [r.id for r in reports if not r.passed]
    if failed:
        logger.warning("%d of %d identities failed: %s", len(failed), len(reports), ", ".join(failed))
    else:
        logger.info("all %d identities passed for n_max=%d", len(reports), n_max)
    return reports


def all_passed(reports: List[IdentityReport]) -> bool:
    return all(report.passed for report in reports)
