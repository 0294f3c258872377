"""Shared fixtures: dataset resolution and published reference values."""

import os
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent

# published per-category means of the UCI Travel Reviews dataset, in
# schema column order; the shipped surrogate is calibrated to these
PUBLISHED_MEANS = {
    "Art Galleries": 0.8931,
    "Dance Clubs": 1.3526,
    "Juice Bars": 1.0133,
    "Restaurants": 0.5325,
    "Museums": 0.9397,
    "Resorts": 1.8428,
    "Parks/Picnic Spots": 3.1809,
    "Beaches": 2.8350,
    "Theaters": 1.5694,
    "Religious Institutions": 2.7992,
}

# descending-mean order of the ten categories
PUBLISHED_RANK_ORDER = [
    "Parks/Picnic Spots",
    "Beaches",
    "Religious Institutions",
    "Resorts",
    "Theaters",
    "Dance Clubs",
    "Juice Bars",
    "Museums",
    "Art Galleries",
    "Restaurants",
]


# one line per acceptance criterion, echoed after the run so the
# pass/fail record is visible even with output capture on
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def resolve_dataset_path() -> Path:
    """Prefer a user-supplied original file, fall back to the surrogate."""
    env = os.environ.get("TRAVEL_REVIEWS_CSV")
    if env:
        return Path(env)
    original = REPO_ROOT / "data" / "tripadvisor_review.csv"
    if original.exists():
        return original
    return REPO_ROOT / "data" / "travel_reviews_surrogate.csv"


@pytest.fixture(scope="session")
def dataset_path() -> Path:
    path = resolve_dataset_path()
    if not path.exists():
        pytest.skip(f"no ratings dataset at {path}")
    return path


@pytest.fixture(scope="session")
def published_means() -> dict:
    return dict(PUBLISHED_MEANS)


@pytest.fixture(scope="session")
def published_rank_order() -> list:
    return list(PUBLISHED_RANK_ORDER)
