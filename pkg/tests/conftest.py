import pathlib

import pytest

from freeknot.diagrams import parse_gauss_code

REPO_ROOT = pathlib.Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def repo_root() -> pathlib.Path:
    return REPO_ROOT


def code(text: str):
    return parse_gauss_code(text)
