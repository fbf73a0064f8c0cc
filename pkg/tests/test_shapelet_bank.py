import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alt_tsc.dataset import TimeSeriesDataset
from alt_tsc.linlaw import hankel_embed
from alt_tsc.shapelet_bank import (
    BankCache, ConfigError, build_bank, extract_sequences, validate_config,
)


def windows_oracle(series, r, l, k):
    """Enumerate windows directly: start at w*k, take every s-th point of an r-long window."""
    s = (r - 1) // (2 * l - 2)
    out = []
    start = 0
    while start + r <= len(series):
        window = list(series[start:start + r])
        out.append(window[::s])
        start += k
    return np.array(out)


def test_validate_basicmotions():
    cfg = validate_config(53, 27, 1, 100)
    assert (cfg.s, cfg.q) == (1, 48)


def test_validate_gunpoint_stride():
    cfg = validate_config(31, 2, 1, 150)
    assert (cfg.s, cfg.q) == (15, 120)


@pytest.mark.parametrize("args, fragment", [
    ((4, 2, 1, 10), "does not divide"),
    ((12, 2, 1, 10), "exceeds"),
    ((3, 1, 1, 10), "l must be"),
    ((3, 2, 0, 10), "k must be"),
    ((3, 2, 9, 10), "no complete window"),
    ((1, 2, 1, 10), "shorter"),
])
def test_validate_errors(args, fragment):
    with pytest.raises(ConfigError, match=fragment):
        validate_config(*args)


def test_extract_unit_stride():
    seqs = extract_sequences(np.arange(10.0), validate_config(3, 2, 1, 10))
    assert seqs.shape == (8, 3)
    np.testing.assert_array_equal(seqs, [[i, i + 1, i + 2] for i in range(8)])


def test_extract_shift_two():
    seqs = extract_sequences(np.arange(10.0), validate_config(5, 2, 2, 10))
    np.testing.assert_array_equal(seqs, [[0, 2, 4], [2, 4, 6], [4, 6, 8]])
    np.testing.assert_array_equal(seqs, windows_oracle(np.arange(10.0), 5, 2, 2))


def test_extract_gunpoint_shape():
    x = np.arange(150.0)
    seqs = extract_sequences(x, validate_config(31, 2, 1, 150))
    assert seqs.shape == (120, 3)
    np.testing.assert_array_equal(seqs[7], [7, 22, 37])
    np.testing.assert_array_equal(seqs, windows_oracle(x, 31, 2, 1))


@given(st.integers(2, 6), st.integers(1, 4), st.integers(1, 3), st.integers(0, 40))
@settings(max_examples=100)
def test_extract_matches_oracle(l, s, k, extra):
    r = s * (2 * l - 2) + 1
    h = r + extra
    if (h - r + 1) // k < 1:
        return
    x = np.random.default_rng(h).normal(size=h)
    cfg = validate_config(r, l, k, h)
    seqs = extract_sequences(x, cfg)
    np.testing.assert_array_equal(seqs, windows_oracle(x, r, l, k)[:cfg.q])
    assert len(seqs) == cfg.q


def _dataset(series_per_class, h, seed=0):
    rng = np.random.default_rng(seed)
    X, y = [], []
    for cls, n in enumerate(series_per_class):
        for _ in range(n):
            X.append([np.cumsum(rng.normal(size=h))])
            y.append(cls)
    return TimeSeriesDataset(np.array(X), np.array(y), tuple(f"c{i}" for i in range(len(series_per_class))))


def test_bank_shape_two_classes():
    Lr = _dataset([1, 1], 10)
    bank = build_bank(Lr, validate_config(3, 2, 1, 10), 0)
    assert bank.P.shape == (2, 16)
    assert bank.class_offsets == (0, 8, 16)
    np.testing.assert_allclose(np.linalg.norm(bank.P, axis=0), 1, atol=1e-12)


def test_bank_basicmotions_scale():
    Lr = _dataset([3, 3, 2, 2], 100)
    bank = build_bank(Lr, validate_config(53, 27, 1, 100), 0)
    assert bank.P.shape == (27, 480)
    assert bank.class_offsets == (0, 144, 288, 384, 480)


def test_bank_single_class_error():
    Lr = _dataset([2, 0], 10)
    with pytest.raises(ConfigError, match="no instances"):
        build_bank(Lr, validate_config(3, 2, 1, 10), 0)


def test_bank_columns_follow_class_then_instance_then_window():
    Lr = _dataset([2, 1], 12)
    # interleave classes so the bank has to regroup them
    Lr = Lr.subset([0, 2, 1])
    cfg = validate_config(5, 3, 1, 12)
    bank = build_bank(Lr, cfg, 0)
    from alt_tsc.linlaw import shapelet_vector
    expected = []
    for i in (0, 2, 1):
        for seq in extract_sequences(Lr.X[i, 0], cfg):
            expected.append(shapelet_vector(seq, 3).components)
    np.testing.assert_array_equal(bank.P, np.array(expected).T)


def test_bank_within_class_permutation():
    Lr = _dataset([3, 2], 20, seed=4)
    cfg = validate_config(5, 3, 1, 20)
    a = build_bank(Lr, cfg, 0)
    b = build_bank(Lr.subset([1, 0, 2, 4, 3]), cfg, 0)
    assert a.class_offsets == b.class_offsets
    q = cfg.q
    for y in range(2):
        block_a = a.partition(y)
        block_b = b.partition(y)
        cols_a = {tuple(c) for c in block_a.T}
        assert cols_a == {tuple(c) for c in block_b.T}
    # instance 0 and 1 swapped within class 0
    np.testing.assert_array_equal(a.P[:, :q], b.P[:, q:2 * q])


def test_bank_geometric_learning_set_has_null_laws():
    h = 40
    t = np.arange(h)
    X = np.array([[1.01 ** t], [0.97 ** t], [2.0 * 1.02 ** t], [np.full(h, 3.0)]])
    Lr = TimeSeriesDataset(X, [0, 0, 1, 1], ("g", "h"))
    for r, l in [(3, 2), (7, 4), (21, 6), (39, 20)]:
        cfg = validate_config(r, l, 1, h)
        bank = build_bank(Lr, cfg, 0)
        # every column annihilates its own window
        seqs = np.concatenate([extract_sequences(Lr.X[i, 0], cfg) for i in range(4)])
        for seq, v, lam in zip(seqs, bank.P.T, bank.eigenvalues):
            S = hankel_embed(seq, l)
            assert abs(lam) <= 1e-9 * np.linalg.norm(S)
            assert np.linalg.norm(S @ v) <= 1e-9 * np.linalg.norm(S)


def test_cache_round_trip(tmp_path):
    Lr = _dataset([2, 2], 30)
    cfg = validate_config(9, 5, 2, 30)
    cache = BankCache(tmp_path)
    a = cache.get_or_build(Lr, cfg, 0, [0, 1, 2, 3])
    b = cache.get_or_build(Lr, cfg, 0, [0, 1, 2, 3])
    assert (cache.misses, cache.hits) == (1, 1)
    assert a.P.tobytes() == b.P.tobytes()
    assert a.class_offsets == b.class_offsets and a.config == b.config
    assert {p.suffix for p in tmp_path.iterdir()} == {".npy", ".json"}
    c = cache.get_or_build(Lr, cfg, 0, [0, 1, 2, 5])
    assert c.digest != a.digest and cache.misses == 2
