import pathlib
import sys

import pytest

TESTS_DIR = pathlib.Path(__file__).resolve().parent
if str(TESTS_DIR) not in sys.path:
    sys.path.insert(0, str(TESTS_DIR))

FIXTURES_DIR = TESTS_DIR.parent / "fixtures"
FIXTURE_NAMES = (
    "biometric_checkout",
    "license_plate_detector",
    "music_recommender",
    "housing_benefit_assistant",
)


@pytest.fixture(scope="session")
def fixture_paths() -> dict[str, pathlib.Path]:
    return {name: FIXTURES_DIR / f"{name}.ia.json" for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def fixture_docs(fixture_paths):
    from impactcard.docio import parse_document

    return {
        name: parse_document(path.read_bytes())
        for name, path in fixture_paths.items()
    }
