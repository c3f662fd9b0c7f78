"""Workers

Worker is used to perform "work" in independent processes or threads.
Simply create an instance of Worker() with either `process=True` (the
default) to create a pool of workers using sub-processes for CPU-bound work
or `False` for a thread pool.

Then hand a function and an iterable of argument tuples to :meth:`Worker.map`.
Results always come back in submission order, so whatever is built from
them does not depend on how many workers ran.
"""
import os
from multiprocessing import Pool as ProcessPool, cpu_count
from multiprocessing.pool import ThreadPool

from .errors import DomainError

DEFAULT_WORKERS = 1

WORKERS_ENV = "QEXTREMAL_WORKERS"


def default_workers():
    """Return the default worker count

    ``QEXTREMAL_WORKERS`` overrides :data:`DEFAULT_WORKERS`; ``0`` means
    one worker per CPU.
    """

    value = os.environ.get(WORKERS_ENV)
    if not value:
        return DEFAULT_WORKERS

    try:
        workers = int(value)
    except ValueError:
        raise DomainError("{0:s}={1!r} is not an integer".format(WORKERS_ENV, value))

    if workers < 0:
        raise DomainError("{0:s}={1:d} must not be negative".format(WORKERS_ENV, workers))

    return workers or cpu_count()


def _star(args):
    f, xs = args
    return f(*xs)


class Worker(object):

    """A process/thread Worker pool

    :param process: True to run tasks in sub-processes (threads otherwise)
    :type process: bool

    :param workers: number of workers; ``None`` uses :func:`default_workers`
    :type workers: int

    With a single worker no pool is created and tasks run inline.
    """

    def __init__(self, process=True, workers=None):
        self.workers = default_workers() if workers is None else workers
        if self.workers < 1:
            raise DomainError("workers must be positive, got {0:d}".format(self.workers))

        self.process = process
        self.pool = None

        if self.workers > 1:
            Pool = ProcessPool if process else ThreadPool
            self.pool = Pool(self.workers)

    def __repr__(self):
        kind = "process" if self.process else "thread"
        return "<Worker (%s, workers=%d)>" % (kind, self.workers)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def map(self, f, tasks):
        """Apply *f* to every argument tuple in *tasks*

        :returns list: the results, in the order of *tasks*
        """

        tasks = [tuple(args) for args in tasks]

        if self.pool is None:
            return [f(*args) for args in tasks]

        return self.pool.map(_star, [(f, args) for args in tasks])

    def close(self):
        if self.pool is not None:
            self.pool.close()
            self.pool.join()
            self.pool = None
