"""scikit-learn compatible feature extraction over graphs.

``GraphInvariantTransformer`` turns a sequence of graphs into an integer
feature matrix of exact invariants, so the solvers can sit inside a
``Pipeline`` next to ordinary estimators.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .families import parse_family_spec
from .graph import Graph, complement, decode_graph6
from .invariants import alpha_exact, matching_number

__all__ = ["GraphInvariantTransformer", "check_graphs", "INVARIANTS"]

INVARIANTS = ("n", "m", "alpha", "beta", "nu")


def check_graphs(X) -> list[Graph]:
    """Validate ``X`` as a non-empty sequence of graphs.

    Items may be :class:`Graph` instances, graph6 strings or family specs
    such as ``"wheel:5"``.
    """
    if isinstance(X, (Graph, str, bytes)) or not isinstance(X, Iterable):
        raise TypeError(
            "expected a sequence of graphs, got a single "
            f"{type(X).__name__}; wrap it in a list"
        )
    graphs = []
    for i, item in enumerate(X):
        if isinstance(item, Graph):
            graphs.append(item)
        elif isinstance(item, str):
            graphs.append(parse_family_spec(item).build() if ":" in item else decode_graph6(item))
        else:
            raise TypeError(f"item {i} is a {type(item).__name__}, not a graph")
    if not graphs:
        raise ValueError("found 0 graphs while a minimum of 1 is required")
    return graphs


def _values(g: Graph, names: tuple[str, ...]) -> list[int]:
    out = []
    alpha = None
    for name in names:
        if name == "n":
            out.append(g.n)
        elif name == "m":
            out.append(g.edge_count)
        elif name in ("alpha", "beta"):
            if alpha is None:
                alpha = alpha_exact(g)[0]
            out.append(alpha if name == "alpha" else g.n - alpha)
        else:
            out.append(matching_number(g)[0])
    return out


class GraphInvariantTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to exact invariants of itself and, optionally, its complement.

    Parameters
    ----------
    invariants : tuple of str, default=("alpha", "beta", "nu")
        Any of ``"n"``, ``"m"``, ``"alpha"``, ``"beta"``, ``"nu"``.
    include_complement : bool, default=True
        Append the same invariants of the complement graph, suffixed ``_c``.
    """

    def __init__(self, invariants=("alpha", "beta", "nu"), include_complement=True):
        self.invariants = invariants
        self.include_complement = include_complement

    def _validate_params(self):
        names = tuple(self.invariants)
        unknown = [x for x in names if x not in INVARIANTS]
        if unknown or not names:
            raise ValueError(
                f"invariants must be a non-empty subset of {INVARIANTS}, got {names}"
            )
        return names

    def fit(self, X, y=None):
        check_graphs(X)
        names = self._validate_params()
        self.feature_names_ = list(names)
        if self.include_complement:
            self.feature_names_ += [f"{x}_c" for x in names]
        self.n_features_out_ = len(self.feature_names_)
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_")
        graphs = check_graphs(X)
        names = tuple(self.invariants)
        rows = []
        for g in graphs:
            row = _values(g, names)
            if self.include_complement:
                row += _values(complement(g), names)
            rows.append(row)
        return np.asarray(rows, dtype=np.int64).reshape(len(graphs), self.n_features_out_)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_")
        return np.asarray(self.feature_names_, dtype=object)
