from typing import Optional

from SRC.base.graph import Graph
from SRC.base.group_action import GroupAction
from SRC.checks.base_check import Workbench
from Utilities.GenericUtils.config_utils import get_settings
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()


class TestBase:
    """Shares one Workbench across test classes, so corpus groups and graphs are built once per session."""

    _bench: Optional[Workbench] = None
    bench: Workbench

    def setup_method(self):
        logger.debug("Setting up test base workbench")
        if TestBase._bench is None:
            TestBase._bench = Workbench(get_settings())
        self.bench = TestBase._bench
        logger.debug("Test base setup completed")

    def group(self, spec_or_name) -> GroupAction:
        return self.bench.group(spec_or_name)

    def graph(self, spec_or_name) -> Graph:
        return self.bench.graph(spec_or_name)
