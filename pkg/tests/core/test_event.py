"""Event Tests"""

import pytest

from qextremal.core import Event
from qextremal.core.events import fire, move_accepted, tree_missing


class test(Event):

    """test Event"""


def test_repr():
    e = test()
    assert repr(e) == "<test[] ()>"

    e = test(1, 2, 3)
    assert repr(e) == "<test[] (1, 2, 3)>"

    e = test(a=1, b=2)
    assert repr(e) == "<test[] (a=1, b=2)>"


def test_channels():
    e = move_accepted(0, 12, 3, 7, 42.5)
    assert e.channels == ("search",)
    assert repr(e) == "<move_accepted[search] (0, 12, 3, 7, 42.5)>"


def test_create():
    e = Event.create("foo", 1, x=2)
    assert e.name == "foo"
    assert e.args == [1]
    assert e.kwargs == {"x": 2}


def test_getitem():
    e = tree_missing("0,1,2,3,1,2", n=10)

    assert e[0] == "0,1,2,3,1,2"
    assert e["n"] == 10

    with pytest.raises(TypeError):
        e[None]


def test_fire():
    seen = []
    e = test()

    fire(seen.append, e)
    fire(None, e)

    assert seen == [e]
