"""Run registered checks over catalog groups, one worker task per group."""
import logging
import multiprocessing
import time
from functools import partial
from typing import Callable, Iterable, List, Sequence, TypeVar

from tqdm import tqdm

from ..config import default_jobs, default_tier
from ..groups.catalog import build, catalog_names
from .checks import REGISTRY, select_checks
from .report import VerificationReport
from .subjects import GroupContext

logger = logging.getLogger(__name__)

T = TypeVar('T')


def map_groups(
    task: Callable[[str], T],
    names: Sequence[str],
    jobs: int = 1,
    progress: bool = False,
    desc: str = 'groups'
) -> List[T]:
    """``[task(name) for name in names]``, optionally over a process pool.

    Results come back in the order of ``names`` whatever ``jobs`` is.
    ``task`` must be picklable when ``jobs > 1``.
    """
    bar = tqdm(total=len(names), desc=desc, disable=not progress)
    results = []
    try:
        if jobs <= 1 or len(names) <= 1:
            for name in names:
                results.append(task(name))
                bar.update()
        else:
            context = multiprocessing.get_context('spawn')
            with context.Pool(processes=min(jobs, len(names))) as pool:
                for result in pool.imap(task, names):
                    results.append(result)
                    bar.update()
    finally:
        bar.close()
    return results


def run_group(name: str, check_ids: Sequence[str],
              timings: bool = False) -> List[VerificationReport]:
    """Every selected check on the catalog group ``name``, in registry order."""
    ctx = GroupContext(build(name))
    reports = []
    for check_id in check_ids:
        start = time.perf_counter()
        produced = REGISTRY[check_id].run(ctx)
        elapsed = time.perf_counter() - start
        for report in produced:
            if timings:
                report.timing = elapsed / len(produced)
            if report.failed:
                logger.warning(
                    '%s failed on %s: %s', check_id, report.subject,
                    report.witnesses
                )
        logger.debug(
            '%s on %s: %d reports in %.3fs', check_id, name, len(produced),
            elapsed
        )
        reports.extend(produced)
    return reports


def run_checks(
    patterns: str = '*',
    tier: int = None,
    jobs: int = None,
    timings: bool = False,
    progress: bool = False,
    names: Iterable[str] = None
) -> List[VerificationReport]:
    """Run the checks matching ``patterns`` on the catalog up to ``tier``.

    Args:
        patterns (str): Comma separated glob patterns over check ids.
        tier (int, optional): Catalog tier; ``ENGEL_SINKS_TIER`` by default.
        jobs (int, optional): Worker processes; ``ENGEL_SINKS_JOBS`` by default.
        timings (bool): Attach per-report timings.
        progress (bool): Show a progress bar on stderr.
        names (Iterable[str], optional): Restrict to these catalog groups.

    Returns:
        List[VerificationReport]: Ordered by catalog group, then check, then
            subject.

    Raises:
        UnknownCheckError: if a pattern matches no check.
    """
    check_ids = [check.check_id for check in select_checks(patterns)]
    tier = default_tier() if tier is None else tier
    jobs = default_jobs() if jobs is None else jobs
    if names is None:
        names = catalog_names(tier)
    names = list(names)
    logger.info(
        'running %d checks on %d groups with %d jobs', len(check_ids),
        len(names), jobs
    )
    task = partial(run_group, check_ids=check_ids, timings=timings)
    per_group = map_groups(task, names, jobs, progress, desc='verify')
    return [report for reports in per_group for report in reports]
