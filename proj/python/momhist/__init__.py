"""Exact enumeration and classification of the histogram shapes a dataset admits.

Rationals are fractions.Fraction, shapes are tuples of bin counts, and the
report functions return the same documents as the momhist command line.
"""

import json

from ._momhist import (
    Catalog,
    Dataset,
    DegenerateDataError,
    Error,
    InsufficientDataError,
    InvalidGridError,
    LevelSet,
    ParseError,
    UndefinedSkewnessError,
    bin_counts,
    enumerate_level_sets,
    fps_grouped,
    parse_dataset,
    solve_mom,
)
from . import _momhist


def classify(data, catalog, flavor="frequency", band_t=0.10, band_f=0.05):
    """Consistency class and skewness rank of every shape."""
    return json.loads(_momhist.classify_json(data, catalog, flavor, band_t, band_f))


def rank(data, catalog, flavor="frequency"):
    """Skewness ranks and the minimum-width likelihood ranking."""
    return json.loads(_momhist.rank_json(data, catalog, flavor))


def stability(catalog):
    """Width intervals over which the set of reachable shapes is constant."""
    return json.loads(_momhist.stability_json(catalog))


def reversals(data, catalog):
    """Symmetry verdict, reversal pairs and mode inversions."""
    return json.loads(_momhist.reversals_json(data, catalog))


def dotplot(data, m=1):
    """Grid on which every grouped moment equals the data moment."""
    return json.loads(_momhist.dotplot_json(data, m))


def audit(data, t0, h, max_bins, flavor="frequency"):
    """Verdict on one user-chosen grid."""
    return json.loads(_momhist.audit_json(data, t0, h, max_bins, flavor))


def catalog_json(catalog):
    return json.loads(catalog.to_json())


__all__ = [
    "Catalog",
    "Dataset",
    "DegenerateDataError",
    "Error",
    "InsufficientDataError",
    "InvalidGridError",
    "LevelSet",
    "ParseError",
    "UndefinedSkewnessError",
    "audit",
    "bin_counts",
    "catalog_json",
    "classify",
    "dotplot",
    "enumerate_level_sets",
    "fps_grouped",
    "parse_dataset",
    "rank",
    "reversals",
    "solve_mom",
    "stability",
]
