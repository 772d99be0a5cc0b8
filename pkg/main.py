# main.py

import argparse
import json
import logging
import sys
from dataclasses import replace

import constants
from controller import engine
from controller.jobs import COMMANDS, FORMATS, load_job
from utils import Settings

LOGGER = logging.getLogger("fiberrep")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fiberrep",
        description="Matrix representations of rational maps: fibers, implicit equations, projections. "
                    f"Commands: {', '.join(COMMANDS)}.")
    parser.add_argument("job", help="job file (JSON)")
    parser.add_argument("--output", "-o", help="report path (overrides options.output)")
    parser.add_argument("--format", choices=FORMATS, help="matrix export format")
    parser.add_argument("--force", action="store_true", help="allow degrees outside the certified region")
    parser.add_argument("--seed", type=int, help="seed for every random choice")
    parser.add_argument("--settings", default=constants.SETTINGS_PATH, help="settings file")
    parser.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.load(args.settings)
    except (ValueError, OSError) as err:
        logging.basicConfig(level=constants.LOG_LEVEL, format=constants.LOG_FORMAT)
        LOGGER.error("Unreadable settings %s: %s", args.settings, err)
        return constants.EXIT_INVALID_INPUT
    logging.basicConfig(level=args.log_level or settings.log_level, format=constants.LOG_FORMAT)

    try:
        job = load_job(args.job, settings)
    except (ValueError, KeyError, FileNotFoundError, json.JSONDecodeError) as err:
        LOGGER.error("Invalid job %s: %s", args.job, err)
        return constants.EXIT_INVALID_INPUT

    overrides = {k: v for k, v in (("output", args.output), ("format", args.format),
                                   ("seed", args.seed)) if v is not None}
    if args.force:
        overrides["force"] = True
    if overrides:
        job = replace(job, options=replace(job.options, **overrides))

    code, _ = engine.run(job, settings)
    return code


if __name__ == '__main__':
    sys.exit(main())
