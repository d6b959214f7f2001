import json
from argparse import Namespace
from typing import Any

from SRC.base.errors import WorkbenchError
from SRC.base.graph import complement
from SRC.checks.base_check import Workbench
from SRC.checks.suite import run_suite, suite_failed, summarize
from SRC.checks.wreath_checks import explore_wreath_density_conjecture
from SRC.helpers.ekr_helper import density_report
from SRC.helpers.graph_products import derangement_graph
from SRC.helpers.graph_io import write_dot
from SRC.helpers.group_spec import load_group
from SRC.helpers.subgroup_search import search_multipartite
from Utilities.GenericUtils.config_utils import WorkbenchSettings
from Utilities.GenericUtils.file_op_utils import write_csv, write_json
from Utilities.ReportUtils.logger import get_logger
from Utilities.ReportUtils.report_utils import generate_html, save_csv, save_json

logger = get_logger()

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def emit(data: Any) -> None:
    """JSON on stdout; logs go to stderr."""
    print(json.dumps(data, indent=2, sort_keys=True))


class CommandHandler:
    """Runs one workbench subcommand and returns the process exit code."""

    def __init__(self, settings: WorkbenchSettings):
        self.settings = settings
        self.COMMAND_DISPATCHER = {
            "build": self.handle_build,
            "density": self.handle_density,
            "ekr": self.handle_ekr,
            "graph": self.handle_graph,
            "verify": self.handle_verify,
            "search-multipartite": self.handle_search_multipartite,
            "conjecture-wreath": self.handle_conjecture_wreath,
        }

    def dispatch(self, args: Namespace) -> int:
        handler = self.COMMAND_DISPATCHER[args.command]
        try:
            return handler(args)
        except WorkbenchError as error:
            logger.error(f"{args.command} failed: {error}")
            return EXIT_ERROR

    def handle_build(self, args: Namespace) -> int:
        """Builds the group of a spec file and prints its shape."""
        group = load_group(args.spec, self.settings.element_cap)
        logger.info(f"Built {group.name} from {args.spec}")
        emit(
            {
                "name": group.name,
                "degree": group.degree,
                "order": group.order,
                "transitive": group.transitive,
                "regular": group.regular,
                "orbits": [list(orbit.members) for orbit in group.orbits],
                "generators": [g.to_cycles() for g in group.generators],
                "derangements": len(group.derangement_ids),
            }
        )
        return EXIT_OK

    def _report(self, args: Namespace, strict: bool) -> int:
        group = load_group(args.spec, self.settings.element_cap)
        report = density_report(group, self.settings.mis_cap, self.settings.solver_node_budget, strict=strict)
        emit(report.to_dict())
        return EXIT_OK

    def handle_density(self, args: Namespace) -> int:
        """Prints alpha, stabilizer order and the exact density."""
        return self._report(args, strict=False)

    def handle_ekr(self, args: Namespace) -> int:
        """Prints the EKR verdict, and with --strict the strict-EKR verdict and its non-coset witnesses."""
        return self._report(args, strict=args.strict)

    def handle_graph(self, args: Namespace) -> int:
        """Writes the derangement graph, or its complement, as DOT."""
        group = load_group(args.spec, self.settings.element_cap)
        graph = derangement_graph(group, self.settings.vertex_cap)
        if args.complement:
            graph = complement(graph)
        write_dot(args.dot, graph, name=group.name.replace(" ", "_"), labels=group.describe(range(group.order)))
        logger.info(f"Wrote {graph.n} vertices and {graph.edge_count()} edges to {args.dot}")
        return EXIT_OK

    def handle_verify(self, args: Namespace) -> int:
        """Runs the verification suite and writes the JSON report, plus CSV and HTML when asked."""
        results = run_suite(args.suite, self.settings, args.threads)
        summary = summarize(results)
        report_path = args.report or self.settings.report_json_path
        save_json(results, summary, report_path)
        logger.info(f"Report written to {report_path}")
        if args.csv:
            save_csv(results, args.csv)
        if args.html:
            generate_html(results, args.html)
        emit(summary)
        return EXIT_CHECK_FAILED if suite_failed(results) else EXIT_OK

    def handle_search_multipartite(self, args: Namespace) -> int:
        """Searches transitive two-generated groups whose derangement graph is complete multipartite."""
        result = search_multipartite(
            args.degree,
            args.parts,
            budget=args.budget,
            max_order=args.max_order,
            cache_path=self.settings.search_cache_path,
            use_cache=not args.no_cache,
        )
        emit(
            {
                "degree": args.degree,
                "parts": args.parts,
                "partial": result.partial,
                "pairs_examined": result.pairs_examined,
                "order_capped": result.order_capped,
                "groups": [
                    {"name": g.name, "order": g.order, "generators": [p.to_cycles() for p in g.generators]}
                    for g in result.groups
                ],
            }
        )
        return EXIT_OK

    def handle_conjecture_wreath(self, args: Namespace) -> int:
        """Tabulates rho(G wr H) against rho(G) over the corpus within the time budget."""
        report = explore_wreath_density_conjecture(Workbench(self.settings), args.budget)
        path = args.report or self.settings.conjecture_path
        write_json(path, report.to_dict())
        if args.csv:
            write_csv(args.csv, report.rows)
        logger.info(f"Conjecture table written to {path}: {len(report.findings)} findings")
        emit({"rows": len(report.rows), "findings": report.findings, "exhausted": report.exhausted})
        return EXIT_OK
