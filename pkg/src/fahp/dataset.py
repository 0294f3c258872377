"""Ratings CSV ingestion.

Reads an alternatives-by-criteria table of average user ratings into an
immutable matrix. The default schema follows the public UCI Travel Reviews
layout: one id column and ten category columns mapped to attraction labels.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import (
    EmptyDataset,
    MissingColumn,
    NonNumericCell,
    OutOfRange,
    TooFewCriteria,
)

RATING_MIN = 0.0
RATING_MAX = 4.0

_DEFAULT_SCHEMA_RESOURCE = "travel_reviews_schema.json"


@dataclass(frozen=True)
class DatasetSchema:
    """Names the id column and the ordered (column, label) criterion pairs."""

    id_column: str
    criteria_columns: tuple[tuple[str, str], ...]

    def __post_init__(self):
        if not self.criteria_columns:
            raise ValueError("schema needs at least one criteria column")
        names = [col for col, _ in self.criteria_columns]
        labels = [label for _, label in self.criteria_columns]
        if len(set(names)) != len(names):
            raise ValueError("duplicate column names in schema")
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate criterion labels in schema")
        if self.id_column in names:
            raise ValueError("id column cannot double as a criteria column")

    @property
    def columns(self) -> list[str]:
        return [col for col, _ in self.criteria_columns]

    @property
    def labels(self) -> list[str]:
        return [label for _, label in self.criteria_columns]

    @classmethod
    def from_dict(cls, doc: dict) -> "DatasetSchema":
        pairs = doc["criteria_columns"]
        if isinstance(pairs, dict):
            items = tuple(pairs.items())
        else:
            items = tuple((str(c), str(lab)) for c, lab in pairs)
        return cls(id_column=str(doc["id_column"]), criteria_columns=items)

    @classmethod
    def from_json(cls, path) -> "DatasetSchema":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def default(cls) -> "DatasetSchema":
        ref = resources.files("fahp.data").joinpath(_DEFAULT_SCHEMA_RESOURCE)
        return cls.from_dict(json.loads(ref.read_text(encoding="utf-8")))


@dataclass(frozen=True)
class RatingMatrix:
    """Users by criteria matrix of average ratings in [0, 4].

    values rows follow file order, columns follow schema order. The array
    is frozen after validation so instances are safe to share.
    """

    values: np.ndarray
    row_ids: tuple[str, ...]
    criteria: tuple[str, ...]
    source_columns: tuple[str, ...] = ()
    id_column: str = "row"

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d matrix, got shape {arr.shape}")
        rows, cols = arr.shape
        if rows < 1:
            raise EmptyDataset("rating matrix has no rows")
        if cols < 2:
            raise TooFewCriteria(cols)
        if cols != len(self.criteria):
            raise ValueError(
                f"{cols} columns but {len(self.criteria)} criterion labels"
            )
        if len(self.row_ids) != rows:
            raise ValueError(f"{rows} rows but {len(self.row_ids)} row ids")
        bad = ~np.isfinite(arr) | (arr < RATING_MIN) | (arr > RATING_MAX)
        if np.any(bad):
            i, j = map(int, np.argwhere(bad)[0])
            raise OutOfRange(i + 1, self.criteria[j], float(arr[i, j]))
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "row_ids", tuple(self.row_ids))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "source_columns", tuple(self.source_columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


def load_csv(path, schema: DatasetSchema | None = None) -> RatingMatrix:
    """Parse a ratings CSV into a RatingMatrix.

    The first row must be a header containing the schema's id column and
    every criteria column. Cells are trimmed; the decimal separator is a
    dot regardless of locale. Row numbers in errors are 1-based data rows
    (the header is row 0). Fully blank lines are skipped.
    """
    schema = schema or DatasetSchema.default()
    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = [cell.strip() for cell in next(reader)]
        except StopIteration:
            raise EmptyDataset(f"{path}: file is empty") from None
        positions = {name: idx for idx, name in enumerate(header)}
        if schema.id_column not in positions:
            raise MissingColumn(schema.id_column)
        for col in schema.columns:
            if col not in positions:
                raise MissingColumn(col)
        id_pos = positions[schema.id_column]
        col_pos = [positions[c] for c in schema.columns]

        row_ids: list[str] = []
        data: list[list[float]] = []
        for row_num, record in enumerate(reader, start=1):
            if not any(cell.strip() for cell in record):
                continue
            parsed = []
            for col_name, pos in zip(schema.columns, col_pos):
                text = record[pos].strip() if pos < len(record) else ""
                if not text:
                    raise NonNumericCell(row_num, col_name, text)
                try:
                    value = float(text)
                except ValueError:
                    raise NonNumericCell(row_num, col_name, text) from None
                if not math.isfinite(value):
                    raise NonNumericCell(row_num, col_name, text)
                if not RATING_MIN <= value <= RATING_MAX:
                    raise OutOfRange(row_num, col_name, value)
                parsed.append(value)
            row_ids.append(record[id_pos].strip() if id_pos < len(record) else "")
            data.append(parsed)

    if not data:
        raise EmptyDataset(f"{path}: no data rows")
    return RatingMatrix(
        values=np.array(data, dtype=float),
        row_ids=tuple(row_ids),
        criteria=tuple(schema.labels),
        source_columns=tuple(schema.columns),
        id_column=schema.id_column,
    )


def column_means(m: RatingMatrix) -> np.ndarray:
    """Per-criterion mean rating, ordered like m.criteria."""
    return m.values.mean(axis=0)
