"""Colored HOMFLY-PT invariants of braid closures and their specializations.

Braids are given as ``"BR[n; g1 g2 ...]"`` or by catalogue name
(``unknot``, ``hopf``, ``trefoil``, ``figure8``, ``t24``). Results are plain
dictionaries mirroring the command-line JSON.
"""

import json

from . import _skein
from ._skein import SkeinError, suite_names, format_braid

__all__ = [
    "SkeinError",
    "alexander",
    "closure",
    "colored",
    "format_braid",
    "homfly",
    "kashaev",
    "links_gould",
    "m_invariant",
    "reduced",
    "run_cli",
    "suite_names",
    "verify",
]


def _colors(colors):
    return [list(c) for c in colors]


def closure(braid):
    """Components and linking matrix of the closure."""
    return json.loads(_skein.closure(braid))


def homfly(braid):
    return json.loads(_skein.homfly(braid))


def colored(braid, colors):
    """colors: one partition (list of row lengths) per component."""
    return json.loads(_skein.colored(braid, _colors(colors)))


def reduced(braid, colors, cut=0):
    """Colored value divided by the unknot colored like component ``cut`` (0-based)."""
    return json.loads(_skein.colored(braid, _colors(colors), cut))


def kashaev(braid, N, bits=_skein.DEFAULT_BITS):
    return json.loads(_skein.kashaev(braid, N, bits))


def m_invariant(braid, m, colors, cut=0):
    return json.loads(_skein.m_invariant(braid, m, list(colors), cut))


def links_gould(braid, m, a):
    return json.loads(_skein.links_gould(braid, m, a))


def alexander(braid):
    return json.loads(_skein.alexander(braid))


def verify(suite, bits=_skein.DEFAULT_BITS):
    return json.loads(_skein.verify(suite, bits))


def run_cli(args):
    """Runs the command-line tool in-process and returns its exit code."""
    return _skein.cli(list(args))
