import concurrent.futures
import os
from typing import Callable, List, Optional, Sequence, TypeVar

from util.output import Printer

T = TypeVar("T")
R = TypeVar("R")

def default_workers() -> int:
    return min(32, (os.cpu_count() or 1) + 4)

def map_concurrently(fn: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply `fn` to every item on a thread pool; results come back in item order.

    The first exception raised by a task is re-raised after the pool drains.
    """
    if not items:
        return []
    max_workers = workers or default_workers()
    if max_workers == 1 or len(items) == 1:
        return [fn(item) for item in items]

    Printer.debug(f"Scoring {len(items)} items using {max_workers} threads...")
    results: List[Optional[R]] = [None] * len(items)
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_index = {executor.submit(fn, item): i for i, item in enumerate(items)}
        for future in concurrent.futures.as_completed(future_to_index):
            results[future_to_index[future]] = future.result()
    return results
