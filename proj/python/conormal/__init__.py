"""Ideals over prime fields, Artinian invariants and Cohen-Macaulay tests for squares of ideals."""

from ._conormal import *  # noqa: F401,F403
from ._conormal import __version__  # noqa: F401
