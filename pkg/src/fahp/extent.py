"""Extent analysis over a fuzzy comparison matrix.

Row sums of the fuzzy matrix are divided by the grand total (via the TFN
reciprocal rule) to give one synthetic extent per criterion; pairwise
degrees of possibility are folded to a minimum degree per criterion; the
minimum degrees normalize to the weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import AllZeroDegrees, TooFewCriteria
from .tfn import FuzzyComparisonMatrix, Tfn


def synthetic_extents(f: FuzzyComparisonMatrix) -> tuple[Tfn, ...]:
    """One synthetic extent per criterion.

    S_i = (R_i.l / T.u, R_i.m / T.m, R_i.u / T.l) where R_i is the i-th
    fuzzy row sum and T the sum of all row sums. Crossing the components
    is the TFN reciprocal rule applied to T and keeps l <= m <= u valid.
    """
    rows = f.values.sum(axis=1)
    total = rows.sum(axis=0)
    extents = []
    for i in range(f.n):
        extents.append(
            Tfn(
                float(rows[i, 0] / total[2]),
                float(rows[i, 1] / total[1]),
                float(rows[i, 2] / total[0]),
            )
        )
    return tuple(extents)


def possibility(m2: Tfn, m1: Tfn) -> float:
    """Degree of possibility that m2 >= m1, in [0, 1].

    Branch order matters: equal-or-higher modal value wins outright,
    disjoint supports lose outright, and only genuine overlaps reach the
    ordinate formula, whose denominator is then provably negative.
    """
    if m2.m >= m1.m:
        return 1.0
    if m1.l >= m2.u:
        return 0.0
    denominator = (m2.m - m2.u) - (m1.m - m1.l)
    assert denominator < 0.0, "unreachable for valid TFNs given the branch order"
    return (m1.l - m2.u) / denominator


def min_degree(i: int, extents: Sequence[Tfn]) -> float:
    """Smallest possibility that extent i dominates each other extent."""
    if len(extents) < 2:
        raise TooFewCriteria(len(extents))
    return min(
        possibility(extents[i], extents[k])
        for k in range(len(extents))
        if k != i
    )


def min_degrees(extents: Sequence[Tfn]) -> np.ndarray:
    return np.array(
        [min_degree(i, extents) for i in range(len(extents))], dtype=float
    )


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative criterion weights on the unit simplex.

    min_degrees holds the pre-normalization d'(A_i) values so reports can
    show both.
    """

    labels: tuple[str, ...]
    weights: np.ndarray
    min_degrees: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        d = np.asarray(self.min_degrees, dtype=float)
        if w.ndim != 1 or d.shape != w.shape:
            raise ValueError("weights and min_degrees must be equal-length vectors")
        if len(self.labels) != w.size:
            raise ValueError("one label per weight required")
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        if abs(float(w.sum()) - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {float(w.sum())!r}")
        w = w.copy()
        w.setflags(write=False)
        d = d.copy()
        d.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "min_degrees", d)
        object.__setattr__(self, "labels", tuple(self.labels))

    def __len__(self) -> int:
        return self.weights.size


def weights(extents: Sequence[Tfn], labels: Sequence[str] | None = None) -> WeightVector:
    """Normalize the minimum degrees into the weight vector.

    Raises AllZeroDegrees when every minimum degree is 0 (mutually
    disjoint extents), which cannot happen for extents computed from a
    valid fuzzy comparison matrix.
    """
    d = min_degrees(extents)
    total = float(d.sum())
    if total == 0.0:
        raise AllZeroDegrees()
    if labels is None:
        labels = tuple(f"C{i + 1}" for i in range(len(extents)))
    return WeightVector(
        labels=tuple(labels), weights=d / total, min_degrees=d
    )
