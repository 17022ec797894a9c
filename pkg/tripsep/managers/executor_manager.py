import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Callable, Iterable, List, Optional, TypeVar

from tripsep.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class ExecutorManager:

    def __init__(self):
        self.executor: Optional[ThreadPoolExecutor] = None
        self.max_workers: int = 1
        self._lock = threading.Lock()
        self._local = threading.local()

    def initialize(self, max_workers: int = settings.THREADS):
        with self._lock:
            if self.executor is None and max_workers > 1:
                self.executor = ThreadPoolExecutor(
                    max_workers=max_workers,
                    thread_name_prefix=settings.PROJECT_NAME,
                )
                logger.info(f"Worker pool initialized with {max_workers} threads")
            self.max_workers = max(max_workers, 1)

    def close(self):
        """Shut the worker pool down."""
        with self._lock:
            if self.executor is not None:
                self.executor.shutdown(wait=True)
                self.executor = None
                logger.info("Worker pool closed")
            self.max_workers = 1

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply ``fn`` to every item; results come back in input order."""
        items = list(items)
        # maps issued from a worker thread run inline; nested maps would starve the pool
        if self.executor is None or len(items) < 2 or getattr(self._local, "inside", False):
            return [fn(item) for item in items]
        return list(self.executor.map(self._in_worker(fn), items))

    def _in_worker(self, fn: Callable[[T], R]) -> Callable[[T], R]:
        def wrapped(item: T) -> R:
            self._local.inside = True
            try:
                return fn(item)
            finally:
                self._local.inside = False
        return wrapped


# Global executor manager instance
executor_manager = ExecutorManager()


@contextmanager
def worker_pool(threads: int = settings.THREADS):
    """Context manager that keeps the worker pool open for a command."""
    executor_manager.initialize(threads)
    try:
        yield executor_manager
    finally:
        executor_manager.close()
