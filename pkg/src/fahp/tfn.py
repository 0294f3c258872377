"""Triangular fuzzy numbers and the comparative scale.

A triangular fuzzy number (TFN) is a triple (l, m, u) with l <= m <= u:
membership rises linearly from 0 at l to 1 at m and falls back to 0 at u.
The scale table maps each Saaty intensity 1..9 to a TFN pair: the direct
("real") group used when a criterion dominates, and the inverse group,
always the reciprocal (1/u, 1/m, 1/l) of the direct row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import NonPositiveSupport, NonScaleEntry, UnknownIntensity

# how close a crisp entry must be to an intensity or its reciprocal
SCALE_MATCH_TOL = 1e-9

# reciprocity slack for fuzzy matrix validation
RECIPROCITY_TOL = 1e-12


@dataclass(frozen=True)
class Tfn:
    """Triangular fuzzy number (lower, modal, upper)."""

    l: float
    m: float
    u: float

    def __post_init__(self):
        if not (self.l <= self.m <= self.u):
            raise ValueError(f"not a valid TFN: l={self.l} m={self.m} u={self.u}")

    def __add__(self, other: "Tfn") -> "Tfn":
        return Tfn(self.l + other.l, self.m + other.m, self.u + other.u)

    def reciprocal(self) -> "Tfn":
        if self.l <= 0:
            raise NonPositiveSupport(self.l)
        return Tfn(1.0 / self.u, 1.0 / self.m, 1.0 / self.l)

    def membership(self, x: float) -> float:
        """Evaluate the triangular membership function at x.

        Convenience for plotting only; no downstream computation uses it.
        """
        if x < self.l or x > self.u:
            return 0.0
        if x == self.m:
            return 1.0
        if x < self.m:
            return (x - self.l) / (self.m - self.l)
        return (self.u - x) / (self.u - self.m)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l, self.m, self.u)


def tfn_add(a: Tfn, b: Tfn) -> Tfn:
    """Componentwise sum of two TFNs."""
    return a + b


def tfn_reciprocal(a: Tfn) -> Tfn:
    """Reciprocal of a positive TFN: swap the support ends and invert."""
    return a.reciprocal()


# Direct-group rows as exact fractions, intensity 1..9 in order. Inverse rows
# are always derived as (1/u, 1/m, 1/l) so the two groups stay mutually
# reciprocal; no inverse row is stored independently.
_DIRECT_ROWS = (
    ("1", "1", "1"),
    ("1/2", "3/4", "1"),
    ("2/3", "1", "3/2"),
    ("1", "3/2", "2"),
    ("3/2", "2", "5/2"),
    ("2", "5/2", "3"),
    ("5/2", "3", "7/2"),
    ("3", "7/2", "4"),
    ("7/2", "4", "9/2"),
)


@dataclass(frozen=True)
class ScaleTable:
    """Intensity (1..len) to (direct TFN, inverse TFN) lookup.

    The table is plain data so alternative fuzzifications of the Saaty
    scale can be swapped in; the default is built from exact fractions.
    """

    rows: tuple[tuple[Tfn, Tfn], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("scale table has no rows")
        prev_m = None
        for k, (real, inverse) in enumerate(self.rows, start=1):
            if real.l <= 0 or inverse.l <= 0:
                raise ValueError(f"intensity {k}: scale TFNs need l > 0")
            expected = real.reciprocal()
            off = max(
                abs(inverse.l - expected.l),
                abs(inverse.m - expected.m),
                abs(inverse.u - expected.u),
            )
            if off > 1e-15:
                raise ValueError(
                    f"intensity {k}: inverse row is not the reciprocal "
                    f"of the direct row (off by {off:.3e})"
                )
            # modal values climb from intensity 2 upward; the first
            # "intermediate" row legitimately dips under the just-equal 1
            if k > 2 and real.m < prev_m:
                raise ValueError(
                    f"intensity {k}: direct modal values must be nondecreasing"
                )
            prev_m = real.m

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[tuple[int, Tfn, Tfn]]:
        for k, (real, inverse) in enumerate(self.rows, start=1):
            yield k, real, inverse

    def real(self, intensity: int) -> Tfn:
        if not 1 <= intensity <= len(self.rows):
            raise UnknownIntensity(intensity)
        return self.rows[intensity - 1][0]

    def inverse(self, intensity: int) -> Tfn:
        if not 1 <= intensity <= len(self.rows):
            raise UnknownIntensity(intensity)
        return self.rows[intensity - 1][1]

    def lookup(self, intensity: int, direction: str) -> Tfn:
        if direction == "real":
            return self.real(intensity)
        if direction == "inverse":
            return self.inverse(intensity)
        raise ValueError(f"direction must be 'real' or 'inverse', got {direction!r}")

    @classmethod
    def default(cls) -> "ScaleTable":
        rows = []
        for l, m, u in _DIRECT_ROWS:
            fl, fm, fu = Fraction(l), Fraction(m), Fraction(u)
            real = Tfn(float(fl), float(fm), float(fu))
            inverse = Tfn(float(1 / fu), float(1 / fm), float(1 / fl))
            rows.append((real, inverse))
        return cls(rows=tuple(rows))

    def to_json(self, path) -> None:
        """Write the table as a flat JSON list for audit."""
        doc = []
        for k, real, inverse in self:
            doc.append({"intensity": k, "direction": "real", "l": real.l, "m": real.m, "u": real.u})
            doc.append({"intensity": k, "direction": "inverse", "l": inverse.l, "m": inverse.m, "u": inverse.u})
        with open(path, "w", encoding="utf-8") as fh:
            json.dump({"scale": doc}, fh, indent=2)
            fh.write("\n")

    @classmethod
    def from_json(cls, path) -> "ScaleTable":
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        by_intensity: dict[int, dict[str, Tfn]] = {}
        for row in doc["scale"]:
            entry = by_intensity.setdefault(int(row["intensity"]), {})
            entry[row["direction"]] = Tfn(float(row["l"]), float(row["m"]), float(row["u"]))
        rows = []
        for k in range(1, len(by_intensity) + 1):
            if k not in by_intensity:
                raise ValueError(f"scale file skips intensity {k}")
            pair = by_intensity[k]
            if "real" not in pair or "inverse" not in pair:
                raise ValueError(f"intensity {k} needs both directions")
            rows.append((pair["real"], pair["inverse"]))
        return cls(rows=tuple(rows))


_DEFAULT_TABLE: ScaleTable | None = None


def default_scale_table() -> ScaleTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = ScaleTable.default()
    return _DEFAULT_TABLE


def scale_lookup(intensity: int, direction: str, table: ScaleTable | None = None) -> Tfn:
    """Look up the TFN for a Saaty intensity in the given direction."""
    return (table or default_scale_table()).lookup(intensity, direction)


@dataclass(frozen=True)
class FuzzyComparisonMatrix:
    """n x n matrix of TFNs, reciprocal across the diagonal.

    values has shape (n, n, 3), last axis ordered (l, m, u).
    """

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 3:
            raise ValueError(f"expected shape (n, n, 3), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("fuzzy matrix entries must be finite")
        if np.any(arr[:, :, 0] > arr[:, :, 1]) or np.any(arr[:, :, 1] > arr[:, :, 2]):
            raise ValueError("every entry must satisfy l <= m <= u")
        if np.any(arr[:, :, 0] <= 0):
            raise ValueError("entries must be strictly positive TFNs")
        n = arr.shape[0]
        diag = arr[np.arange(n), np.arange(n), :]
        if not np.all(diag == 1.0):
            raise ValueError("diagonal entries must be exactly (1, 1, 1)")
        # entries[j][i] must equal the reciprocal of entries[i][j]
        mirrored = np.stack(
            [
                1.0 / arr.transpose(1, 0, 2)[:, :, 2],
                1.0 / arr.transpose(1, 0, 2)[:, :, 1],
                1.0 / arr.transpose(1, 0, 2)[:, :, 0],
            ],
            axis=2,
        )
        if np.max(np.abs(arr - mirrored)) > RECIPROCITY_TOL:
            raise ValueError("matrix violates TFN reciprocity across the diagonal")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def entry(self, i: int, j: int) -> Tfn:
        l, m, u = self.values[i, j]
        return Tfn(float(l), float(m), float(u))

    def as_nested(self) -> list[list[list[float]]]:
        return [[list(map(float, cell)) for cell in row] for row in self.values]


def _match_intensity(value: float, table_len: int) -> tuple[int, str] | None:
    """Map a crisp entry onto (intensity, direction), or None if off-scale."""
    if value >= 1.0:
        k = int(round(value))
        if 1 <= k <= table_len and abs(value - k) <= SCALE_MATCH_TOL:
            return k, "real"
        return None
    if value <= 0.0:
        return None
    k = int(round(1.0 / value))
    if 1 <= k <= table_len and abs(value - 1.0 / k) <= SCALE_MATCH_TOL:
        return k, "inverse"
    return None


def fuzzify(comparison, table: ScaleTable | None = None) -> FuzzyComparisonMatrix:
    """Replace each crisp comparison entry by its scale-table TFN.

    Entries at or above 1 use the direct group, entries below 1 the inverse
    group; the diagonal always maps to (1, 1, 1). Entries that are not a
    scale intensity or its reciprocal within 1e-9 raise NonScaleEntry.
    """
    table = table or default_scale_table()
    entries = np.asarray(comparison.entries, dtype=float)
    n = entries.shape[0]
    out = np.empty((n, n, 3), dtype=float)
    for i in range(n):
        for j in range(n):
            if i == j:
                out[i, j] = (1.0, 1.0, 1.0)
                continue
            matched = _match_intensity(float(entries[i, j]), len(table))
            if matched is None:
                raise NonScaleEntry(i, j, float(entries[i, j]))
            k, direction = matched
            out[i, j] = table.lookup(k, direction).as_tuple()
    return FuzzyComparisonMatrix(values=out)
