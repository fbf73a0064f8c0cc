import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alt_tsc.dataset import TimeSeriesDataset
from alt_tsc.shapelet_bank import ConfigError, build_bank, extract_sequences, validate_config, WindowConfig
from alt_tsc.transform import apply_bank, class_response, embed_instance, square_partition


def embed_oracle(x, r, l, k):
    """Rows written out with 1-based sample indices, then shifted to 0-based."""
    s = (r - 1) // (2 * l - 2)
    h = len(x)
    o = (h - s * l + 1) // k
    A = np.empty((o, l))
    for row in range(1, o + 1):
        for col in range(1, l + 1):
            A[row - 1, col - 1] = x[(row - 1) * k + (col - 1) * s + 1 - 1]
    return A


def naive_product(A, P):
    o, l = A.shape
    n = P.shape[1]
    O = np.zeros((o, n))
    for i in range(o):
        for j in range(n):
            acc = 0.0
            for t in range(l):
                acc += A[i, t] * P[t, j]
            O[i, j] = acc
    return O


def test_embed_unit_stride():
    x = np.arange(10.0)
    A = embed_instance(x, validate_config(3, 2, 1, 10))
    assert A.shape == (9, 2)
    np.testing.assert_array_equal(A, [[t, t + 1] for t in range(9)])


def test_embed_basicmotions_shape():
    cfg = validate_config(53, 27, 1, 100)
    assert cfg.o == 74
    assert embed_instance(np.zeros(100), cfg).shape == (74, 27)


def test_embed_gunpoint_stride():
    x = np.arange(150.0) * 2
    A = embed_instance(x, validate_config(31, 2, 1, 150))
    assert A.shape == (121, 2)
    np.testing.assert_array_equal(A[:, 0], x[:121])
    np.testing.assert_array_equal(A[:, 1], x[15:136])
    np.testing.assert_array_equal(A, embed_oracle(x, 31, 2, 1))


def test_embed_too_short():
    cfg = WindowConfig(r=9, l=5, k=1, h=20)
    with pytest.raises(ConfigError, match="s\\*l"):
        embed_instance(np.zeros(4), cfg)


@given(st.integers(2, 6), st.integers(1, 4), st.integers(1, 3), st.integers(0, 30))
@settings(max_examples=100)
def test_embed_matches_oracle_and_sequences(l, s, k, extra):
    r = s * (2 * l - 2) + 1
    h = r + extra
    if (h - r + 1) // k < 1:
        return
    x = np.random.default_rng(h * 7 + l).normal(size=h)
    cfg = validate_config(r, l, k, h)
    A = embed_instance(x, cfg)
    np.testing.assert_array_equal(A, embed_oracle(x, r, l, k))
    # first l points of each window sequence coincide with the matching A row
    seqs = extract_sequences(x, cfg)
    np.testing.assert_array_equal(A[:cfg.q], seqs[:, :l])
    assert (cfg.o - 1) * k + (l - 1) * s <= h - 1


def test_apply_identity():
    A = np.array([[1.0, 2.0], [3.0, 4.0]])
    np.testing.assert_array_equal(apply_bank(A, np.eye(2)), A)


def test_apply_dimension_mismatch():
    with pytest.raises(ValueError):
        apply_bank(np.ones((3, 2)), np.ones((3, 4)))


def test_apply_matches_naive_small(rng):
    A = rng.normal(size=(3, 2))
    P = rng.normal(size=(2, 4))
    np.testing.assert_allclose(apply_bank(A, P), naive_product(A, P), rtol=1e-12, atol=0)


def test_apply_matches_naive_large(rng):
    A = rng.normal(size=(200, 150))
    P = rng.normal(size=(150, 500))
    O = apply_bank(A, P)
    # row-by-row dot products in plain Python are too slow here; use exact fsum on a sample
    import math
    for i, j in zip(rng.integers(0, 200, 300), rng.integers(0, 500, 300)):
        ref = math.fsum(A[i, t] * P[t, j] for t in range(150))
        scale = math.fsum(abs(A[i, t] * P[t, j]) for t in range(150))
        assert abs(O[i, j] - ref) <= 1e-10 * scale


def test_own_law_annihilates_own_series():
    t = np.arange(30)
    x = 1.03 ** t
    y = np.cos(0.4 * t)
    Lr = TimeSeriesDataset(np.array([[x], [y]]), [0, 1], ("geo", "cos"))
    cfg = validate_config(3, 2, 1, 30)
    bank = build_bank(Lr, cfg, 0)
    A = embed_instance(x, cfg)
    O = apply_bank(A, bank.P)
    geo_block = O[:, :bank.class_offsets[1]]
    assert np.abs(geo_block).max() <= 1e-8 * np.linalg.norm(A)
    assert np.abs(O[:, bank.class_offsets[1]:]).max() > 1e-3


def test_square_partition_simple():
    parts = square_partition(np.array([[-2.0, 3.0]]), [0, 1, 2])
    np.testing.assert_array_equal(parts[0], [[4.0]])
    np.testing.assert_array_equal(parts[1], [[9.0]])


def test_square_partition_zero_and_offsets():
    parts = square_partition(np.zeros((3, 5)), [0, 2, 5])
    assert [p.shape for p in parts] == [(3, 2), (3, 3)]
    assert all(not p.any() for p in parts)
    with pytest.raises(ValueError):
        square_partition(np.zeros((3, 5)), [0, 2, 4])


def test_partition_widths_follow_bank(rng):
    X = np.cumsum(rng.normal(size=(5, 1, 25)), axis=2)
    Lr = TimeSeriesDataset(X, [0, 1, 1, 2, 2], ("a", "b", "c"))
    cfg = validate_config(7, 4, 2, 25)
    bank = build_bank(Lr, cfg, 0)
    parts = class_response(X[0, 0], bank)
    assert [p.shape[1] for p in parts] == [n * cfg.q for n in (1, 2, 2)]
    assert all(p.shape[0] == cfg.o and np.all(p >= 0) for p in parts)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_sign_flip_invariance(seed):
    rng = np.random.default_rng(seed)
    X = np.cumsum(rng.normal(size=(4, 1, 20)), axis=2)
    Lr = TimeSeriesDataset(X, [0, 0, 1, 1], ("a", "b"))
    bank = build_bank(Lr, validate_config(5, 3, 1, 20), 0)
    flips = rng.choice([-1.0, 1.0], size=bank.n_columns)
    A = embed_instance(rng.normal(size=20), bank.config)
    a = square_partition(apply_bank(A, bank.P), bank.class_offsets)
    b = square_partition(apply_bank(A, bank.P * flips), bank.class_offsets)
    for pa, pb in zip(a, b):
        np.testing.assert_array_equal(pa, pb)
