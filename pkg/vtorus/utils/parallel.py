"""
Worker pool helpers for the embarrassingly parallel parts of the analysis
(per-source BFS, per-seed restarts).
"""
import logging
from concurrent.futures import ThreadPoolExecutor

from vtorus.utils.settings import get_setting

logger = logging.getLogger(__name__)


def worker_count(requested=None):
    """Resolve the number of workers, capped by VT_THREADS"""
    cap = get_setting('VT_THREADS')
    if requested is None:
        return cap
    return max(1, min(requested, cap))


def parallel_map(fn, items, workers=None):
    """
    Apply fn to every item, possibly concurrently.

    Args:
        fn: Pure function of one argument
        items: Iterable of inputs
        workers: Optional worker count (still capped by VT_THREADS)

    Returns:
        list: Results in input order, whatever the completion order was
    """
    items = list(items)
    workers = worker_count(workers)

    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]

    logger.debug(f"Dispatching {len(items)} items to {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
