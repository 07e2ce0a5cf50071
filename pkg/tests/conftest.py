import pytest

from temponym import dataset as dataset_mod


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    setattr(item, "outcome_" + report.when, report)

QUARTER_YEARS = [1900, 1925, 1950, 1975, 2000]


@pytest.fixture(scope="session")
def sample_dataset():
    """The full bundled archive, 1880-2020."""
    return dataset_mod.load_directory(dataset_mod.bundled_sample_dir())


@pytest.fixture(scope="session")
def quarter_dataset():
    """Only the five quarter-century benchmark years."""
    return dataset_mod.load_directory(
        dataset_mod.bundled_sample_dir(), years=QUARTER_YEARS
    )
