"""Workers Tests"""

import pytest

from qextremal.core import DomainError, Worker, default_workers


def add(a, b):
    return a + b


def test_inline():
    worker = Worker(workers=1)
    assert worker.pool is None
    assert worker.map(add, [(1, 2), (3, 4)]) == [3, 7]
    worker.close()


def test_threads():
    with Worker(process=False, workers=3) as worker:
        assert repr(worker) == "<Worker (thread, workers=3)>"
        assert worker.map(add, [(i, i) for i in range(20)]) == [2 * i for i in range(20)]

    assert worker.pool is None


def test_processes():
    with Worker(workers=2) as worker:
        assert worker.map(pow, [(2, i) for i in range(10)]) == [2 ** i for i in range(10)]


def test_order_independent_of_workers():
    tasks = [(i, -i * i) for i in range(30)]
    results = []
    for workers in (1, 2, 4):
        with Worker(process=False, workers=workers) as worker:
            results.append(worker.map(add, tasks))

    assert results[0] == results[1] == results[2]


def test_invalid():
    with pytest.raises(DomainError):
        Worker(workers=0)


def test_default_workers(monkeypatch):
    monkeypatch.delenv("QEXTREMAL_WORKERS", raising=False)
    assert default_workers() == 1

    monkeypatch.setenv("QEXTREMAL_WORKERS", "3")
    assert default_workers() == 3

    monkeypatch.setenv("QEXTREMAL_WORKERS", "0")
    assert default_workers() >= 1

    monkeypatch.setenv("QEXTREMAL_WORKERS", "many")
    with pytest.raises(DomainError):
        default_workers()

    monkeypatch.setenv("QEXTREMAL_WORKERS", "-2")
    with pytest.raises(DomainError):
        default_workers()
