"""Weighted convolution algebras, composition operators and group-algebra isomorphisms."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
