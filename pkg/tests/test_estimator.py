import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from ngverify import families as fam
from ngverify.estimator import GraphInvariantTransformer, check_graphs
from ngverify.graph import encode_graph6


def test_transform_values():
    graphs = [fam.complete(5), fam.helm(4), fam.sunlet(4)]
    X = GraphInvariantTransformer().fit_transform(graphs)
    assert X.dtype == np.int64
    np.testing.assert_array_equal(
        X,
        [
            [1, 4, 2, 5, 0, 0],
            [5, 4, 4, 3, 6, 4],
            [4, 4, 4, 2, 6, 4],
        ],
    )


def test_feature_names_and_params():
    t = GraphInvariantTransformer(invariants=("n", "alpha"), include_complement=False)
    assert t.get_params() == {"invariants": ("n", "alpha"), "include_complement": False}
    t.fit(["wheel:4"])
    assert list(t.get_feature_names_out()) == ["n", "alpha"]
    assert t.transform(["wheel:4"]).tolist() == [[5, 2]]
    c = clone(t).set_params(include_complement=True)
    assert c.fit(["wheel:4"]).transform(["wheel:4"]).tolist() == [[5, 2, 5, 3]]


def test_accepts_graph6_and_specs():
    g = fam.complete_sun(3)
    X = GraphInvariantTransformer().fit_transform([g, encode_graph6(g), "complete_sun:3"])
    assert (X == X[0]).all()


def test_pipeline_composes():
    pipe = make_pipeline(GraphInvariantTransformer(), StandardScaler())
    out = pipe.fit_transform([fam.wheel(n) for n in range(3, 9)])
    assert out.shape == (6, 6)


def test_validation_errors():
    with pytest.raises(TypeError):
        check_graphs(fam.complete(3))
    with pytest.raises(TypeError):
        check_graphs([1, 2])
    with pytest.raises(ValueError):
        check_graphs([])
    with pytest.raises(ValueError):
        GraphInvariantTransformer(invariants=("chi",)).fit([fam.complete(3)])
    with pytest.raises(NotFittedError):
        GraphInvariantTransformer().transform([fam.complete(3)])
