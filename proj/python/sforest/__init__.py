"""Python bindings for the sforest C++ library."""

import json

from ._sforest import (
    SforestError,
    canonical,
    class_of_permutation,
    collapse_export,
    is_s_forest,
    is_s_tree,
    t_forests,
)
from . import _sforest


def kappa(term):
    """Relation of a diversified S-term, as a dict with "domain" and "pairs"."""
    return json.loads(_sforest.kappa_json(term))


def sterm_of_ftp(relation):
    """Canonical S-term of a trifunctional partial order given as a dict."""
    return _sforest.sterm_of_ftp_json(json.dumps(relation))


def linear_extensions(relation):
    """Linear extensions of a partial order given as a dict, lexicographic."""
    return _sforest.linear_extensions_json(json.dumps(relation))


def collapse(graph):
    """Collapsed permutohedron of a graph (JSON or edge-list text) as a dict."""
    return json.loads(collapse_export(graph, "json"))


def verify(max_n=4, random_count=0, seed=0):
    """Run the property checks and return the report as a dict."""
    return json.loads(_sforest.verify_json(max_n, random_count, seed))


__all__ = [
    "SforestError",
    "canonical",
    "class_of_permutation",
    "collapse",
    "collapse_export",
    "is_s_forest",
    "is_s_tree",
    "kappa",
    "linear_extensions",
    "sterm_of_ftp",
    "t_forests",
    "verify",
]
