# Ordered fan-out over a thread pool, used for the independent per-word cells
# of the hierarchical pipeline. Results come back in submission order so the
# output never depends on the number of workers.

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

T = TypeVar("T")
U = TypeVar("U")


def get_max_workers() -> int:
    from rectpack.config.config_manager import config
    return config.get_max_workers()


def map_ordered(
    func: Callable[[T], U],
    items: Iterable[T],
    max_workers: Optional[int] = None,
) -> List[U]:
    """Apply ``func`` to every item, possibly concurrently, preserving order."""
    items = list(items)
    workers = max_workers if max_workers is not None else get_max_workers()
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, item) for item in items]
        return [future.result() for future in futures]
