"""
This module defines the basic event class and the trace events fired by
long-running operations (containment sweeps, searches, verify suites).
"""


class Event(object):

    channels = ()
    "The channels this message is sent to."

    @classmethod
    def create(cls, _name, *args, **kwargs):
        return type(cls)(_name, (cls,), {})(*args, **kwargs)

    def __init__(self, *args, **kwargs):
        """An event is a small record of something that happened inside an
        operation. Operations that accept a ``fire`` callable hand every
        event they produce to it; a :class:`~.debugger.Debugger` is the usual
        receiver.

        All normal arguments and keyword arguments passed to the constructor
        are kept in :attr:`args` and :attr:`kwargs` and show up in the
        event's ``repr``.

        :cvar channels: an optional tuple naming the area the event belongs
            to (e.g. ``("search",)``). Debuggers may ignore whole channels.
        """

        self.args = list(args)
        self.kwargs = kwargs

        if not hasattr(self, "name"):
            self.name = self.__class__.__name__

    def __repr__(self):
        "x.__repr__() <==> repr(x)"

        if len(self.channels) > 1:
            channels = repr(self.channels)
        elif len(self.channels) == 1:
            channels = str(self.channels[0])
        else:
            channels = ""

        data = "%s %s" % (
            ", ".join(repr(arg) for arg in self.args),
            ", ".join("%s=%s" % (k, repr(v)) for k, v in sorted(self.kwargs.items()))
        )

        return "<%s[%s] (%s)>" % (self.name, channels, data.strip())

    def __getitem__(self, x):
        """x.__getitem__(y) <==> x[y]

        Get and return data from the event object requested by "x".
        If an int is passed to x, the requested argument from self.args
        is returned index by x. If a str is passed to x, the requested
        keyword argument from self.kwargs is returned keyed by x.
        Otherwise a TypeError is raised as nothing else is valid.
        """

        if isinstance(x, int):
            return self.args[x]
        elif isinstance(x, str):
            return self.kwargs[x]
        else:
            raise TypeError("Expected int or str, got %r" % type(x))


def fire(handler, event):
    """Hand *event* to *handler* unless it is ``None``"""

    if handler is not None:
        handler(event)


class tree_checked(Event):

    """tree_checked Event

    Fired by the all-trees oracle after each tree was found in the host.

    :param tree: the level sequence of the tree, comma separated
    :type  tree: str
    """

    channels = ("containment",)


class tree_missing(Event):

    """tree_missing Event

    Fired by the all-trees oracle when a tree does not embed in the host.
    """

    channels = ("containment",)


class graph_examined(Event):

    """graph_examined Event

    Fired by the searches for every candidate graph whose membership and
    spectral radius were evaluated.
    """

    channels = ("search",)


class restart_started(Event):

    """restart_started Event"""

    channels = ("search",)


class restart_finished(Event):

    """restart_finished Event"""

    channels = ("search",)


class move_accepted(Event):

    """move_accepted Event

    Fired by the hill climber for every edge toggle it keeps.
    """

    channels = ("search",)


class suite_started(Event):

    """suite_started Event"""

    channels = ("verify",)


class suite_finished(Event):

    """suite_finished Event"""

    channels = ("verify",)


class check_failed(Event):

    """check_failed Event

    Fired by a verify suite for every check that did not hold. Debuggers
    report these through ``logger.error``.
    """

    channels = ("verify",)
