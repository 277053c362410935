"""Spanning trees of 2-trees.

Graphs are passed as ``(n, edges)`` with ``edges`` a list of ``(u, v)`` pairs
on vertices ``0..n-1``. Counts are Python ints.
"""

import json

from ._core import (
    NotTwoTreeError,
    TwoTreeError,
    brute_force_count,
    count_book,
    count_containing,
    count_two_simplicial,
    elimination_order,
    fibonacci,
    generate,
    is_book,
    is_two_tree,
    kirchhoff_count,
    simplicial_vertices,
    spanning_trees,
)
from . import _core


def _counts_to_int(report, keys):
    for key in keys:
        if key in report:
            report[key] = int(report[key])
    return report


def survey_extremal(n):
    return _counts_to_int(json.loads(_core._survey_extremal(n)), ("min", "max"))


def improve_min(n, edges):
    keys = ("t_h", "beta1", "beta2", "gamma", "t_g", "t_g1", "t_g2")
    return _counts_to_int(json.loads(_core._improve_min(n, edges)), keys)


def improve_max(n, edges):
    keys = ("t_g", "t_gprime", "t_h_crucial", "t_h_ep")
    return _counts_to_int(json.loads(_core._improve_max(n, edges)), keys)


def verify(suite, n_max=7, trials=50, seed=0):
    return json.loads(_core._verify(suite, n_max, trials, seed))


__all__ = [
    "NotTwoTreeError",
    "TwoTreeError",
    "brute_force_count",
    "count_book",
    "count_containing",
    "count_two_simplicial",
    "elimination_order",
    "fibonacci",
    "generate",
    "improve_max",
    "improve_min",
    "is_book",
    "is_two_tree",
    "kirchhoff_count",
    "simplicial_vertices",
    "spanning_trees",
    "survey_extremal",
    "verify",
]
