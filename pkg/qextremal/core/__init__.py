"""Core

This package contains the plumbing shared by every other part of
qextremal: errors, trace events, the Debugger and the Worker pool.
"""
from .debugger import Debugger
from .errors import DomainError, Error
from .events import Event
from .workers import Worker, default_workers

__all__ = ("Debugger", "DomainError", "Error", "Event", "Worker", "default_workers")

# flake8: noqa
