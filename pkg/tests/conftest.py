import pytest

import nlatlas as nl


@pytest.fixture(scope="session")
def dataset():
    return nl.load_dataset()


@pytest.fixture(scope="session")
def default_atlas():
    return nl.enumerate_atlas()
