import argparse
import sys
from typing import List, Optional

from SRC.cli.command_handler import CommandHandler
from Utilities.GenericUtils.config_utils import SettingsUtil, override_settings, set_settings
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(description="Derangement graphs, intersection density and EKR verification")
    ap.add_argument("--config", default=None, help="Settings file (default: config.yaml at the repo root)")
    ap.add_argument("--threads", type=int, default=None)
    ap.add_argument("--element-cap", type=int, default=None)
    ap.add_argument("--mis-cap", type=int, default=None)
    ap.add_argument("--seed", type=int, default=None, help="Random sampling seed; never changes a verdict")
    ap.add_argument("--log-level", default=None)
    ap.add_argument("--extended", action="store_true", default=None, help="Run the stretch instances")

    commands = ap.add_subparsers(dest="command", required=True)

    for name in ("build", "density"):
        sub = commands.add_parser(name)
        sub.add_argument("--spec", required=True, help="GroupSpec JSON file")

    ekr = commands.add_parser("ekr")
    ekr.add_argument("--spec", required=True)
    ekr.add_argument("--strict", action="store_true")

    graph = commands.add_parser("graph")
    graph.add_argument("--spec", required=True)
    graph.add_argument("--dot", required=True, help="Output DOT file")
    graph.add_argument("--complement", action="store_true")

    verify = commands.add_parser("verify")
    verify.add_argument("--suite", default="all", help="'all' or comma-separated check IDs")
    verify.add_argument("--report", default=None, help="Report JSON path")
    verify.add_argument("--csv", default=None)
    verify.add_argument("--html", default=None)

    search = commands.add_parser("search-multipartite")
    search.add_argument("--degree", type=int, required=True)
    search.add_argument("--parts", type=int, required=True)
    search.add_argument("--budget", type=int, default=None, help="Generator pairs examined")
    search.add_argument("--max-order", type=int, default=None)
    search.add_argument("--no-cache", action="store_true")

    conjecture = commands.add_parser("conjecture-wreath")
    conjecture.add_argument("--budget", type=float, required=True, help="Seconds")
    conjecture.add_argument("--report", default=None)
    conjecture.add_argument("--csv", default=None)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = override_settings(
        SettingsUtil(args.config).get_settings(),
        threads=args.threads,
        element_cap=args.element_cap,
        mis_cap=args.mis_cap,
        seed=args.seed,
        log_level=args.log_level,
        extended=args.extended,
    )
    set_settings(settings)
    logger.set_log_level(settings.log_level)
    if args.command == "verify":
        args.threads = settings.threads
    logger.debug(f"Running {args.command} with {settings}")
    return CommandHandler(settings).dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
