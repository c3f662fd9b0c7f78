"""Prüfer oracle Tests"""

import pytest

from qextremal.core import DomainError
from qextremal.graphs import make_path, make_star
from qextremal.trees import enumerate_trees, prufer_count_oracle, prufer_decode
from qextremal.trees.prufer import degree_sorted_words


def test_decode():
    assert prufer_decode((0, 0, 0), 5) == make_star(5)
    assert prufer_decode((), 2) == make_path(2)
    assert list(prufer_decode((3, 2), 4).edges()) == [(0, 3), (1, 2), (2, 3)]


def test_decode_errors():
    with pytest.raises(DomainError):
        prufer_decode((0,), 4)

    with pytest.raises(DomainError):
        prufer_decode((5,), 3)

    with pytest.raises(DomainError):
        prufer_decode((), 1)


@pytest.mark.parametrize("t", range(2, 10))
def test_oracle_agrees_with_enumeration(t):
    assert prufer_count_oracle(t) == sum(1 for _ in enumerate_trees(t))


@pytest.mark.parametrize("t", range(2, 8))
def test_exhaustive_words(t):
    assert prufer_count_oracle(t, exhaustive=True) == prufer_count_oracle(t)


def test_degree_sorted_words():
    words = list(degree_sorted_words(5))

    assert len(words) == len(set(words))
    for word in words:
        counts = [word.count(label) for label in range(5)]
        assert counts == sorted(counts, reverse=True)


def test_range():
    with pytest.raises(DomainError):
        prufer_count_oracle(1)

    with pytest.raises(DomainError):
        prufer_count_oracle(10)
