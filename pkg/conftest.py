"""Pytest configuration file for test setup, teardown, and hooks.

This module contains pytest fixtures and hooks for:
- Test execution reporting and logging
- Skipping tests marked ``slow`` unless ``--runslow`` is given
- Attaching failed check reports to Allure
- Isolated settings for tests that write reports or caches
"""

import pytest
from hypothesis import settings as hypothesis_settings

from Utilities.GenericUtils.config_utils import get_settings, override_settings
from Utilities.ReportUtils.logger import get_logger
from Utilities.ReportUtils.report_utils import attach_text

logger = get_logger()

hypothesis_settings.register_profile("workbench", max_examples=60, deadline=None, derandomize=True)
hypothesis_settings.load_profile("workbench")


def _handle_test_logging(item, call, report):
    """Handle test start/end logging.
    Args:
        item: The test item being executed.
        call: The call object containing information about the test phase.
        report: The test report object.
    """
    if call.when == "setup":
        logger.test_start(item.name)
    elif call.when == "teardown":
        status = "PASSED" if report.passed else "FAILED" if report.failed else "SKIPPED"
        logger.test_end(item.name, status)


def _attach_failure(item, report):
    """Attach the captured log of a failed test to the Allure report."""
    if report.when == "call" and report.failed and report.caplog:
        attach_text(f"{item.name} log", report.caplog)


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    """Generate test reports and handle test execution lifecycle events.

    Args:
        item: The test item being executed.
        call: The call object containing information about the test phase.

    Yields:
        The test report outcome object.
    """
    outcome = yield
    report = outcome.get_result()
    _handle_test_logging(item, call, report)
    _attach_failure(item, report)
    return report


def pytest_collection_modifyitems(config, items):
    """Skip tests marked ``slow`` unless --runslow is given.
    Args:
        config: The pytest config object containing command line options.
        items: List of collected test items that can be modified in place.
    """
    if config.getoption("--runslow"):
        # --runslow given in cli: do not skip slow tests
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def pytest_addoption(parser):
    """Add custom command line options to pytest.
    Args:
        parser: The pytest argument parser to add options to.
    """
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="Run slow tests",
    )


@pytest.fixture(scope="function")
def isolated_settings(tmp_path):
    """Settings whose report and cache paths live under the test's tmp_path."""
    settings = override_settings(
        get_settings(),
        report_json_path=str(tmp_path / "report.json"),
        report_csv_path=str(tmp_path / "report.csv"),
        report_html_path=str(tmp_path / "report.html"),
        conjecture_path=str(tmp_path / "conjecture.json"),
    )
    logger.debug(f"Isolated settings under {tmp_path}")
    yield settings
