"""
Debugger used to trace each event fired by an operation by printing
it to sys.stderr or to a Logger instance.
"""
import os
import sys
from traceback import format_exc


class Debugger(object):

    """Create a new Debugger

    A Debugger is a callable that receives every event an operation fires
    and writes its ``repr`` to sys.stderr or a Logger.

    :var IgnoreEvents: list of events (str) to ignore
    :var IgnoreChannels: list of channels (str) to ignore

    :param file: file name or file-like object (*default* sys.stderr)
    :param logger: a :class:`logging.Logger` instance or None (*default*)
    :param prefix: string, or callable returning one, put before each line
    :param trim: cut each line to this many characters
    """

    IgnoreEvents = []
    IgnoreChannels = []

    def __init__(self, errors=True, events=True, file=None, logger=None,
                 prefix=None, trim=None, **kwargs):
        "initializes x; see x.__class__.__doc__ for signature"

        self._errors = errors
        self._events = events

        self._opened = isinstance(file, str)

        if self._opened:
            self.file = open(os.path.abspath(os.path.expanduser(file)), "a")
        elif hasattr(file, "write"):
            self.file = file
        else:
            self.file = sys.stderr

        self.logger = logger
        self.prefix = prefix
        self.trim = trim

        self.IgnoreEvents = self.IgnoreEvents + list(kwargs.get("IgnoreEvents", []))
        self.IgnoreChannels = self.IgnoreChannels + list(kwargs.get("IgnoreChannels", []))

    def __call__(self, event):
        """Global Event Handler

        Writes *event* to self.file or to the Logger instance by calling
        ``self.logger.debug`` (``self.logger.error`` for ``check_failed``).
        """

        try:
            if event.name == "check_failed":
                if self._errors:
                    self._write(repr(event), error=True)
                return

            if not self._events:
                return

            if event.name in self.IgnoreEvents:
                return

            channels = event.channels
            if channels and all(channel in self.IgnoreChannels for channel in channels):
                return

            self._write(repr(event))
        except Exception as e:
            sys.stderr.write("ERROR (Debugger): {}".format(e))
            sys.stderr.write("{}".format(format_exc()))

    def _write(self, s, error=False):
        if self.prefix:
            if callable(self.prefix):
                s = "%s: %s" % (self.prefix(), s)
            else:
                s = "%s: %s" % (self.prefix, s)

        if self.trim:
            s = "%s ...>" % s[:self.trim]

        if self.logger is not None:
            if error:
                self.logger.error(s)
            else:
                self.logger.debug(s)
        else:
            self.file.write(s)
            self.file.write("\n")
            self.file.flush()

    def close(self):
        """Close the log file if this Debugger opened it from a name"""

        if self._opened and not self.file.closed:
            self.file.close()
