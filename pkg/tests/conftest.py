"""py.test config"""

import sys

import networkx as nx
import numpy as np
import pytest

from qextremal.graphs import from_networkx, to_networkx
from qextremal.suites import constructor_corpus


class Recorder(object):

    """Collects every event handed to it, like a Debugger that remembers"""

    def __init__(self):
        self.events = []

    def __call__(self, event):
        self.events.append(event)

    def names(self):
        return [event.name for event in self.events]

    def count(self, name):
        return sum(1 for event in self.events if event.name == name)


def q_dense(G):
    """Largest signless Laplacian eigenvalue by a dense eigensolver"""

    A = nx.to_numpy_array(to_networkx(G), nodelist=range(G.n))
    Q = np.diag(A.sum(axis=1)) + A
    return float(np.linalg.eigvalsh(Q)[-1])


@pytest.fixture
def rng():
    return np.random.default_rng(20260517)


@pytest.fixture
def recorder():
    return Recorder()


@pytest.fixture(scope="session")
def corpus():
    return constructor_corpus()


for key, value in dict((
    ("Recorder", Recorder),
    ("to_networkx", to_networkx),
    ("from_networkx", from_networkx),
    ("q_dense", q_dense),
    ("PLATFORM", sys.platform),
    ("PYVER", sys.version_info[:3]),
)).items():
    setattr(pytest, key, value)
