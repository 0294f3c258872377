"""Column-max normalization: examples, guards, and algebraic properties."""

import numpy as np
import pytest

from fahp import NormalizedMatrix, RatingMatrix, normalize, saw_normalize


def rating(values, labels=None):
    arr = np.asarray(values, dtype=float)
    labels = labels or tuple(f"C{i + 1}" for i in range(arr.shape[1]))
    ids = tuple(f"u{i}" for i in range(arr.shape[0]))
    return RatingMatrix(values=arr, row_ids=ids, criteria=labels)


def test_divide_by_column_max():
    out, used = saw_normalize([[1.0, 3.0], [2.0, 3.0], [4.0, 3.0]])
    assert out[:, 0].tolist() == [0.25, 0.5, 1.0]
    assert out[:, 1].tolist() == [1.0, 1.0, 1.0]
    assert used.tolist() == [4.0, 3.0]


def test_zero_column_maps_to_zeros():
    out, used = saw_normalize([[0.0, 1.0], [0.0, 2.0]])
    assert out[:, 0].tolist() == [0.0, 0.0]
    assert used[0] == 0.0


def test_normalize_keeps_shape_and_labels():
    m = rating([[1.0, 2.0], [3.0, 4.0]], labels=("A", "B"))
    n = normalize(m)
    assert n.shape == m.shape
    assert n.criteria == ("A", "B")
    assert n.column_max_used.tolist() == [3.0, 4.0]
    assert n.row_ids == m.row_ids


def test_idempotence_is_exact():
    rng = np.random.default_rng(21)
    for _ in range(50):
        m = rating(rng.uniform(0, 4, size=(17, 6)))
        once = normalize(m)
        twice = normalize(once)
        assert np.array_equal(once.values, twice.values)


def test_positive_scale_invariance():
    rng = np.random.default_rng(22)
    for _ in range(50):
        values = rng.uniform(0.01, 4, size=(13, 5))
        scales = rng.uniform(0.1, 1.0, size=5)
        base, _ = saw_normalize(values)
        scaled, _ = saw_normalize(values * scales)
        assert np.max(np.abs(scaled - base) / np.abs(base).clip(min=1e-300)) <= 1e-15


def test_positive_columns_peak_at_exactly_one():
    rng = np.random.default_rng(23)
    for _ in range(50):
        out, used = saw_normalize(rng.uniform(0, 4, size=(11, 4)))
        assert np.all(out.max(axis=0)[used > 0] == 1.0)


def test_normalized_matrix_rejects_cells_above_one():
    with pytest.raises(ValueError):
        NormalizedMatrix(
            values=np.array([[1.5]]),
            criteria=("A",),
            column_max_used=np.array([1.0]),
        )


def test_values_frozen():
    n = normalize(rating([[1.0, 2.0]]))
    with pytest.raises(ValueError):
        n.values[0, 0] = 0.5
