"""Errors

This module defines the root of the errors qextremal raises.
"""


class Error(Exception):

    """Error Exception"""


class DomainError(Error, ValueError):

    """Raised when a parameter lies outside the domain of an operation"""


class DimensionError(Error, ValueError):

    """Raised when a vector does not match the order of a graph"""
