import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alt_tsc.dataset import TimeSeriesDataset
from alt_tsc.features import (
    ExtractionMethod, aggregate, feature_names, featurize, featurize_dataset, row_reduce,
)
from alt_tsc.shapelet_bank import ShapeletMatrix, build_bank, validate_config

MEAN = ExtractionMethod("mean", None, "mean")


def percentile_oracle(values, p):
    """Closest-rank interpolation written out by hand."""
    v = sorted(values)
    pos = p / 100 * (len(v) - 1)
    lo = int(pos)
    hi = min(lo + 1, len(v) - 1)
    return v[lo] + (pos - lo) * (v[hi] - v[lo])


def test_row_mean():
    np.testing.assert_array_equal(row_reduce(np.array([[1.0, 3.0], [2.0, 2.0]]), MEAN), [2.0, 2.0])


def test_row_median():
    assert row_reduce(np.array([[0.0, 1, 2, 3, 4]]), ExtractionMethod.parse("p50-mean"))[0] == 2.0


def test_row_p5_two_values():
    assert row_reduce(np.array([[10.0, 20.0]]), ExtractionMethod.parse("p5-mean"))[0] == pytest.approx(10.5)


@given(st.lists(st.floats(0, 1e6), min_size=1, max_size=40), st.floats(0.5, 99.5))
def test_percentile_matches_oracle(values, p):
    got = row_reduce(np.array([values]), ExtractionMethod("percentile", p, "mean"))[0]
    assert got == pytest.approx(percentile_oracle(values, p), rel=1e-9, abs=1e-9)


def test_row_reduce_empty():
    with pytest.raises(ValueError):
        row_reduce(np.empty((3, 0)), MEAN)


def test_aggregates_symmetric():
    x = [1.0, 2.0, 3.0]
    assert aggregate(x, "mean") == 2.0
    assert aggregate(x, "var") == pytest.approx(2 / 3)
    assert aggregate(x, "m3") == 0.0


def test_kurtosis_degenerate_and_two_point():
    assert aggregate([4.0, 4.0], "var") == 0.0
    assert aggregate([4.0, 4.0], "kurt") == 0.0
    assert aggregate([-1.0, 1.0, -1.0, 1.0], "m4") == 1.0
    assert aggregate([-1.0, 1.0, -1.0, 1.0], "kurt") == -2.0


def test_aggregate_too_short():
    assert aggregate([5.0], "mean") == 5.0
    with pytest.raises(ValueError):
        aggregate([5.0], "var")


@given(st.lists(st.floats(-100, 100), min_size=2, max_size=30))
def test_moments_against_explicit_sums(xs):
    n = len(xs)
    mu = sum(xs) / n
    m2 = sum((x - mu) ** 2 for x in xs) / n
    m3 = sum((x - mu) ** 3 for x in xs) / n
    m4 = sum((x - mu) ** 4 for x in xs) / n
    assert aggregate(xs, "var") == pytest.approx(m2, rel=1e-9, abs=1e-9)
    assert aggregate(xs, "m3") == pytest.approx(m3, rel=1e-7, abs=1e-7)
    assert aggregate(xs, "m4") == pytest.approx(m4, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("text, name", [
    ("mean - mean", "mean-mean"),
    ("5th percentile - 4th moment", "p5-m4"),
    ("5th percentile - mean", "p5-mean"),
    ("5th percentile - variance", "p5-var"),
    ("5th percentile - excess kurtosis", "p5-kurt"),
    ("p12.5-m3", "p12.5-m3"),
])
def test_method_parse(text, name):
    assert ExtractionMethod.parse(text).name == name


@pytest.mark.parametrize("text", ["mean", "median-mean", "p5-skew", "p0-mean", "p100-mean"])
def test_method_parse_rejects(text):
    with pytest.raises(ValueError):
        ExtractionMethod.parse(text)


def _random_banks(rng, m, h, c, triplets, cols_per_class=3):
    banks = []
    for r, l, k in triplets:
        cfg = validate_config(r, l, k, h)
        row = []
        for j in range(m):
            P = rng.normal(size=(l, c * cols_per_class))
            P /= np.linalg.norm(P, axis=0)
            offs = tuple(range(0, c * cols_per_class + 1, cols_per_class))
            row.append(ShapeletMatrix(P, offs, j, cfg, np.zeros(P.shape[1])))
        banks.append(row)
    return banks


@pytest.mark.parametrize("m, c, methods, triplets, expected", [
    (6, 4, ["mean-mean", "p5-m4"], [(53, 27, 1)], 48),
    (3, 4, ["mean-mean"], [(29, 15, 1), (69, 35, 1), (89, 45, 1), (149, 75, 1), (169, 85, 1), (189, 95, 1)], 72),
    (1, 2, ["p5-mean"], [(3, 2, 1)], 2),
])
def test_feature_count(rng, m, c, methods, triplets, expected):
    h = 207 if m == 3 else 286
    meths = [ExtractionMethod.parse(s) for s in methods]
    banks = _random_banks(rng, m, h, c, triplets)
    vec = featurize(rng.normal(size=(m, h)), banks, meths)
    assert vec.shape == (expected,)
    assert len(feature_names(len(triplets), m, c, meths)) == expected


def test_layout_order(rng):
    meths = [ExtractionMethod.parse("mean-mean"), ExtractionMethod.parse("p5-var")]
    names = feature_names(2, 2, 3, meths)
    assert names[:4] == ["g0_ch0_class0_mean-mean", "g0_ch0_class0_p5-var",
                         "g0_ch0_class1_mean-mean", "g0_ch0_class1_p5-var"]
    assert names[6] == "g0_ch1_class0_mean-mean"
    assert names[12] == "g1_ch0_class0_mean-mean"
    banks = _random_banks(rng, 2, 30, 3, [(3, 2, 1), (9, 3, 2)])
    x = rng.normal(size=(2, 30))
    vec = featurize(x, banks, meths)
    from alt_tsc.transform import class_response
    part = class_response(x[1], banks[1][1])[2]
    assert vec[names.index("g1_ch1_class2_p5-var")] == aggregate(np.percentile(part, 5, axis=1), "var")


def test_featurize_permutation_invariance(rng):
    X = np.cumsum(rng.normal(size=(6, 1, 40)), axis=2)
    Lr = TimeSeriesDataset(X, [0, 0, 0, 1, 1, 1], ("a", "b"))
    bank = build_bank(Lr, validate_config(9, 5, 1, 40), 0)
    meths = [ExtractionMethod.parse(s) for s in ("mean-mean", "p5-m4", "p5-kurt", "mean-var")]
    x = rng.normal(size=(1, 40)).cumsum(axis=1)
    base = featurize(x, [[bank]], meths)
    for _ in range(100):
        perm = np.concatenate([rng.permutation(np.arange(a, b))
                               for a, b in zip(bank.class_offsets, bank.class_offsets[1:])])
        shuffled = ShapeletMatrix(bank.P[:, perm], bank.class_offsets, 0, bank.config, bank.eigenvalues[perm])
        np.testing.assert_allclose(featurize(x, [[shuffled]], meths), base, rtol=1e-12, atol=1e-12)


def test_features_finite_and_nonnegative(rng):
    X = np.cumsum(rng.normal(size=(4, 2, 30)), axis=2)
    Lr = TimeSeriesDataset(X, [0, 1, 0, 1], ("a", "b"))
    cfg = validate_config(7, 4, 1, 30)
    banks = [[build_bank(Lr, cfg, j) for j in range(2)]]
    meths = [ExtractionMethod.parse(s) for s in ("mean-mean", "p5-mean", "p5-m3")]
    F = featurize_dataset(Lr, banks, meths)
    assert F.shape == (4, 2 * 2 * 3) and np.all(np.isfinite(F))
    names = feature_names(1, 2, 2, meths)
    for i, n in enumerate(names):
        if n.endswith("-mean"):
            assert np.all(F[:, i] >= 0)
