"""Toolkit for a two-parameter family of positive but not completely positive
maps: map outputs, Choi matrices, entanglement witnesses built from them, and
a claim-by-claim numeric audit."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
